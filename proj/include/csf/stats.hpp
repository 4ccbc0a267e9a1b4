#ifndef CSF_STATS_HPP
#define CSF_STATS_HPP

#include <Eigen/Dense>

#include "csf/errors.hpp"

namespace csf {

struct ContingencyTable2x2 {
  // model1-success/model2-success, model1-success/model2-fail,
  // model1-fail/model2-success, both-fail.
  int n_ss = 0;
  int n_sf = 0;
  int n_fs = 0;
  int n_ff = 0;

  int total() const { return n_ss + n_sf + n_fs + n_ff; }
  int discordant() const { return n_sf + n_fs; }
};

struct McNemarResult {
  double chi2 = 0.0;
  double p = 1.0;
  // Set when the discordant count is zero (chi2 = 0 by convention).
  bool degenerate = false;
};

// Continuity-corrected McNemar statistic (|b-c| - 1)^2 / (b+c); p from the
// 1-df chi-square survival function.
McNemarResult mcnemar(const ContingencyTable2x2& t);

// Survival function of the chi-square distribution with 1 degree of freedom:
// p = erfc(sqrt(x/2)).
double chi_square_sf(double x);

struct FleissKappaResult {
  double kappa = 0.0;
  // All raters on all items chose one category: expected agreement is 1,
  // kappa = 1 by convention.
  bool degenerate = false;
};

// Standard Fleiss' kappa on an items x categories matrix of rater counts.
// Every item must have the same total rater count n >= 2.
FleissKappaResult fleiss_kappa(const Eigen::MatrixXd& assignments);

}  // namespace csf

#endif
