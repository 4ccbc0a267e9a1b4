#ifndef CSF_TABLE_HPP
#define CSF_TABLE_HPP

#include <Eigen/Dense>
#include <array>

#include "csf/status.hpp"

namespace csf {

using TableMatrix = Eigen::Matrix<double, 9, 3>;
using CountMatrix = Eigen::Matrix<double, 9, 3>;

// Canonical row order: (I,N),(I,M),(I,T),(A,N),(A,M),(A,T),(F,N),(F,M),(F,T).
inline constexpr int row_index(CognitiveStatus prev, LinguisticStatus ling) {
  return 3 * index_of(prev) + index_of(ling);
}

// Row-stochastic 9x3 table p(S_t | S_{t-1}, L_t). Rows may carry the raw
// counts they were normalized from, for audit.
class ConditionalStatusTable {
 public:
  // Uniform table (every row 1/3,1/3,1/3).
  ConditionalStatusTable();

  // Validates every row: non-negative, sums to 1 within kSumTolerance.
  explicit ConditionalStatusTable(const TableMatrix& probs);
  ConditionalStatusTable(const TableMatrix& probs, const CountMatrix& counts,
                         const std::array<bool, 9>& uniform_fallback);

  StatusDistribution row(CognitiveStatus prev, LinguisticStatus ling) const;

  const TableMatrix& probs() const { return probs_; }
  bool has_counts() const { return has_counts_; }
  const CountMatrix& counts() const { return counts_; }
  // Rows that had zero mass and were replaced by the uniform fallback.
  const std::array<bool, 9>& uniform_fallback() const { return uniform_fallback_; }

 private:
  TableMatrix probs_;
  CountMatrix counts_;
  std::array<bool, 9> uniform_fallback_{};
  bool has_counts_ = false;
};

inline StatusDistribution table_row(const ConditionalStatusTable& t, CognitiveStatus prev,
                                    LinguisticStatus ling) {
  return t.row(prev, ling);
}

}  // namespace csf

#endif
