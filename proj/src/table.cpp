#include "csf/table.hpp"

#include <cmath>

#include "csf/errors.hpp"

namespace csf {

namespace {
void check_rows(const TableMatrix& probs) {
  for (int r = 0; r < 9; ++r) {
    if ((probs.row(r).array() < 0).any())
      throw ValidationError("table row " + std::to_string(r) + " has a negative entry");
    if (std::abs(probs.row(r).sum() - 1.0) > kSumTolerance)
      throw RowSumError("table row " + std::to_string(r) + " does not sum to 1");
  }
}
}  // namespace

ConditionalStatusTable::ConditionalStatusTable()
    : probs_(TableMatrix::Constant(1.0 / 3)), counts_(CountMatrix::Zero()) {}

ConditionalStatusTable::ConditionalStatusTable(const TableMatrix& probs)
    : probs_(probs), counts_(CountMatrix::Zero()) {
  check_rows(probs_);
}

ConditionalStatusTable::ConditionalStatusTable(const TableMatrix& probs,
                                               const CountMatrix& counts,
                                               const std::array<bool, 9>& uniform_fallback)
    : probs_(probs), counts_(counts), uniform_fallback_(uniform_fallback), has_counts_(true) {
  check_rows(probs_);
  if ((counts_.array() < 0).any()) throw ValidationError("negative count");
}

StatusDistribution ConditionalStatusTable::row(CognitiveStatus prev,
                                               LinguisticStatus ling) const {
  return StatusDistribution(StatusVector(probs_.row(row_index(prev, ling)).transpose()));
}

}  // namespace csf
