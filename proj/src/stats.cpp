#include "csf/stats.hpp"

#include <cmath>

#include "csf/errors.hpp"

namespace csf {

double chi_square_sf(double x) {
  if (x < 0) throw ValidationError("chi-square statistic must be >= 0");
  return std::erfc(std::sqrt(x / 2.0));
}

McNemarResult mcnemar(const ContingencyTable2x2& t) {
  if (t.n_ss < 0 || t.n_sf < 0 || t.n_fs < 0 || t.n_ff < 0)
    throw ValidationError("negative contingency count");
  McNemarResult r;
  const int discordant = t.discordant();
  if (discordant == 0) {
    r.chi2 = 0.0;
    r.p = 1.0;
    r.degenerate = true;
    return r;
  }
  // (|b - c| - 1)^2 / (b + c); at |b - c| = 0 the corrected numerator is
  // still 1, which is what reproduces the published 0.033 for a 15/15 split.
  const double base = std::abs(t.n_sf - t.n_fs) - 1.0;
  r.chi2 = base * base / discordant;
  r.p = chi_square_sf(r.chi2);
  return r;
}

FleissKappaResult fleiss_kappa(const Eigen::MatrixXd& assignments) {
  const Eigen::Index items = assignments.rows();
  const Eigen::Index cats = assignments.cols();
  if (items < 1 || cats < 2) throw ValidationError("kappa needs >= 1 item and >= 2 categories");
  if ((assignments.array() < 0).any()) throw ValidationError("negative rater count");

  const double n = assignments.row(0).sum();
  if (n < 2) throw ValidationError("kappa needs >= 2 raters per item");
  for (Eigen::Index i = 1; i < items; ++i)
    if (assignments.row(i).sum() != n)
      throw ValidationError("every item must have the same rater count");

  // Per-item observed agreement and marginal category proportions.
  double p_bar = 0.0;
  for (Eigen::Index i = 0; i < items; ++i) {
    const double agree = assignments.row(i).array().square().sum() - n;
    p_bar += agree / (n * (n - 1));
  }
  p_bar /= static_cast<double>(items);

  const Eigen::VectorXd p_j = assignments.colwise().sum() / (n * items);
  const double p_e = p_j.array().square().sum();

  FleissKappaResult r;
  if (p_e >= 1.0) {
    r.kappa = 1.0;
    r.degenerate = true;
    return r;
  }
  r.kappa = (p_bar - p_e) / (1.0 - p_e);
  return r;
}

}  // namespace csf
