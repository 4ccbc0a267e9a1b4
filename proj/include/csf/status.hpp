#ifndef CSF_STATUS_HPP
#define CSF_STATUS_HPP

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <string>

#include "csf/errors.hpp"

namespace csf {

// Column/index order everywhere: I, A, F. The statuses nest
// Familiar < Activated < InFocus, so "lower status" means a HIGHER index
// in this layout.
enum class CognitiveStatus : std::uint8_t { InFocus = 0, Activated = 1, Familiar = 2 };

enum class LinguisticStatus : std::uint8_t {
  NotMentioned = 0,
  MentionedNonTopic = 1,
  MentionedTopic = 2
};

inline constexpr std::array<CognitiveStatus, 3> kCognitiveStatuses = {
    CognitiveStatus::InFocus, CognitiveStatus::Activated, CognitiveStatus::Familiar};
inline constexpr std::array<LinguisticStatus, 3> kLinguisticStatuses = {
    LinguisticStatus::NotMentioned, LinguisticStatus::MentionedNonTopic,
    LinguisticStatus::MentionedTopic};

inline constexpr int index_of(CognitiveStatus s) { return static_cast<int>(s); }
inline constexpr int index_of(LinguisticStatus l) { return static_cast<int>(l); }

const char* symbol(CognitiveStatus s);    // "I" / "A" / "F"
const char* symbol(LinguisticStatus l);   // "N" / "M" / "T"
CognitiveStatus cognitive_from_symbol(const std::string& sym);
LinguisticStatus linguistic_from_symbol(const std::string& sym);

inline constexpr double kSumTolerance = 1e-9;

using StatusVector = Eigen::Vector3d;

// Probability distribution over {InFocus, Activated, Familiar}.
class StatusDistribution {
 public:
  StatusDistribution() : p_(1.0 / 3, 1.0 / 3, 1.0 / 3) {}
  StatusDistribution(double p_in_focus, double p_activated, double p_familiar);
  explicit StatusDistribution(const StatusVector& p);

  double operator[](CognitiveStatus s) const { return p_[index_of(s)]; }
  double in_focus() const { return p_[0]; }
  double activated() const { return p_[1]; }
  double familiar() const { return p_[2]; }
  const StatusVector& vec() const { return p_; }

  bool operator==(const StatusDistribution& other) const { return p_ == other.p_; }

 private:
  StatusVector p_;
};

// weights / sum(weights). Throws AllZeroWeights when the whole vector is zero.
StatusDistribution normalize(const StatusVector& weights);

// Maximum-probability status; ties break toward the lower GH status
// (Familiar over Activated over InFocus).
CognitiveStatus argmax_status(const StatusDistribution& d);

// Index form used by the table code below.
inline int argmax_index(const StatusVector& v) {
  int best = 0;
  for (int i = 1; i < 3; ++i)
    if (v[i] >= v[best]) best = i;
  return best;
}

}  // namespace csf

#endif
