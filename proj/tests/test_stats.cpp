#include <cmath>
#include <vector>

#include "doctest.h"

#include "approx.hpp"

#include "csf/rng.hpp"
#include "csf/stats.hpp"

using namespace csf;

namespace {

// Numerical-integration oracle for the 1-df chi-square survival function.
// The density e^{-t/2}/sqrt(2 pi t) is singular at 0, so substitute t = u^2:
// the integrand becomes sqrt(2/pi) * e^{-u^2 / 2}, which is smooth, and we
// run composite Simpson on [sqrt(x), sqrt(x) + 40].
double chi2_sf_oracle(double x) {
  auto integrand = [](double u) {
    return std::sqrt(2.0 / M_PI) * std::exp(-u * u / 2.0);
  };
  const double lo = std::sqrt(x);
  const double hi = lo + 40.0;
  const int n = 4'000'000;  // even
  const double h = (hi - lo) / n;
  double sum = integrand(lo) + integrand(hi);
  for (int i = 1; i < n; ++i) sum += integrand(lo + i * h) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

// Brute-force pairwise-agreement oracle for Fleiss' kappa: expand each
// item's counts into individual ratings and enumerate rater pairs.
double fleiss_oracle(const Eigen::MatrixXd& m) {
  const auto items = m.rows();
  const auto cats = m.cols();

  double p_bar = 0;
  for (Eigen::Index i = 0; i < items; ++i) {
    std::vector<int> ratings;
    for (Eigen::Index j = 0; j < cats; ++j)
      for (int k = 0; k < static_cast<int>(m(i, j)); ++k) ratings.push_back(static_cast<int>(j));
    int agree = 0, pairs = 0;
    for (std::size_t a = 0; a < ratings.size(); ++a)
      for (std::size_t b = a + 1; b < ratings.size(); ++b) {
        ++pairs;
        if (ratings[a] == ratings[b]) ++agree;
      }
    p_bar += static_cast<double>(agree) / pairs;
  }
  p_bar /= static_cast<double>(items);

  double p_e = 0;
  const double total = m.sum();
  for (Eigen::Index j = 0; j < cats; ++j) {
    const double p_j = m.col(j).sum() / total;
    p_e += p_j * p_j;
  }
  return (p_bar - p_e) / (1.0 - p_e);
}

}  // namespace

TEST_CASE("chi-square survival function against the quadrature oracle") {
  for (double x : {0.0, 0.0333, 1.0, 3.841, 10.0, 20.0}) {
    CHECK(chi_square_sf(x) == csf::testing::Abs{chi2_sf_oracle(x), 1e-6});
  }
  CHECK(chi_square_sf(0.0) == 1.0);
  CHECK(chi_square_sf(3.841) == csf::testing::Abs{0.0500, 5e-4});
  CHECK(chi_square_sf(0.0333) == csf::testing::Abs{0.8551, 5e-4});
  CHECK_THROWS_AS(chi_square_sf(-1.0), ValidationError);
}

TEST_CASE("mcnemar reproduces the published statistics") {
  const McNemarResult u_rb = mcnemar({34, 71, 8, 15});
  CHECK(u_rb.chi2 == csf::testing::Abs{48.658, 1e-3});
  CHECK(u_rb.p < 1e-4);

  const McNemarResult i_fsm = mcnemar({89, 15, 15, 9});
  CHECK(i_fsm.chi2 == csf::testing::Abs{0.033, 1e-3});
  CHECK(i_fsm.p == csf::testing::Abs{0.8551, 5e-4});

  const McNemarResult fsm_rb = mcnemar({34, 70, 8, 16});
  CHECK(fsm_rb.chi2 == csf::testing::Abs{47.705, 1e-3});
  CHECK(fsm_rb.p < 1e-4);
}

TEST_CASE("mcnemar edge cases") {
  // Zero discordant count: chi2 = 0 by convention, flagged.
  const McNemarResult none = mcnemar({10, 0, 0, 5});
  CHECK(none.chi2 == 0.0);
  CHECK(none.p == 1.0);
  CHECK(none.degenerate);

  // |b - c| = 1 zeroes the corrected numerator.
  const McNemarResult corrected = mcnemar({10, 1, 0, 5});
  CHECK(corrected.chi2 == 0.0);
  CHECK(corrected.p == 1.0);
  CHECK_FALSE(corrected.degenerate);

  CHECK_THROWS_AS(mcnemar({-1, 0, 0, 0}), ValidationError);
}

TEST_CASE("mcnemar is symmetric in the model order") {
  SplitMix64 rng(13);
  for (int i = 0; i < 100; ++i) {
    ContingencyTable2x2 t{static_cast<int>(rng.next_below(50)),
                          static_cast<int>(rng.next_below(50)),
                          static_cast<int>(rng.next_below(50)),
                          static_cast<int>(rng.next_below(50))};
    const ContingencyTable2x2 swapped{t.n_ss, t.n_fs, t.n_sf, t.n_ff};
    const McNemarResult a = mcnemar(t);
    const McNemarResult b = mcnemar(swapped);
    CHECK(a.chi2 == b.chi2);
    CHECK(a.p == b.p);
  }
}

TEST_CASE("fleiss kappa known values") {
  // Perfect agreement
  Eigen::MatrixXd perfect(3, 3);
  perfect << 4, 0, 0, 0, 4, 0, 4, 0, 0;
  const FleissKappaResult p = fleiss_kappa(perfect);
  CHECK(p.kappa == 1.0);
  CHECK_FALSE(p.degenerate);

  // 2 raters, 2 items, ratings (A,B) and (B,A): P_bar = 0, P_e = 0.5
  Eigen::MatrixXd opposed(2, 2);
  opposed << 1, 1, 1, 1;
  CHECK(fleiss_kappa(opposed).kappa == csf::testing::Abs{-1.0, 1e-12});

  // All raters, all items, one category: degenerate, kappa = 1
  Eigen::MatrixXd onecat(3, 2);
  onecat << 3, 0, 3, 0, 3, 0;
  const FleissKappaResult d = fleiss_kappa(onecat);
  CHECK(d.kappa == 1.0);
  CHECK(d.degenerate);
}

TEST_CASE("fleiss kappa matches the brute-force pairwise oracle") {
  SplitMix64 rng(97);
  for (int trial = 0; trial < 25; ++trial) {
    const int items = 5 + static_cast<int>(rng.next_below(10));
    const int cats = 2 + static_cast<int>(rng.next_below(3));
    const int raters = 3 + static_cast<int>(rng.next_below(4));
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(items, cats);
    for (int i = 0; i < items; ++i)
      for (int r = 0; r < raters; ++r) m(i, rng.next_below(cats)) += 1;
    const FleissKappaResult result = fleiss_kappa(m);
    if (result.degenerate) continue;
    CHECK(result.kappa == csf::testing::Abs{fleiss_oracle(m), 1e-12});
  }
}

TEST_CASE("fleiss kappa input validation") {
  Eigen::MatrixXd uneven(2, 2);
  uneven << 2, 1, 1, 1;
  CHECK_THROWS_AS(fleiss_kappa(uneven), ValidationError);
  Eigen::MatrixXd single_rater(2, 2);
  single_rater << 1, 0, 0, 1;
  CHECK_THROWS_AS(fleiss_kappa(single_rater), ValidationError);
}
