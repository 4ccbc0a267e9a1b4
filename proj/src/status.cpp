#include "csf/status.hpp"

#include <cmath>

namespace csf {

const char* symbol(CognitiveStatus s) {
  switch (s) {
    case CognitiveStatus::InFocus:
      return "I";
    case CognitiveStatus::Activated:
      return "A";
    case CognitiveStatus::Familiar:
      return "F";
  }
  return "?";
}

const char* symbol(LinguisticStatus l) {
  switch (l) {
    case LinguisticStatus::NotMentioned:
      return "N";
    case LinguisticStatus::MentionedNonTopic:
      return "M";
    case LinguisticStatus::MentionedTopic:
      return "T";
  }
  return "?";
}

CognitiveStatus cognitive_from_symbol(const std::string& sym) {
  if (sym == "I") return CognitiveStatus::InFocus;
  if (sym == "A") return CognitiveStatus::Activated;
  if (sym == "F") return CognitiveStatus::Familiar;
  throw ValidationError("unknown cognitive status symbol: " + sym);
}

LinguisticStatus linguistic_from_symbol(const std::string& sym) {
  if (sym == "N") return LinguisticStatus::NotMentioned;
  if (sym == "M") return LinguisticStatus::MentionedNonTopic;
  if (sym == "T") return LinguisticStatus::MentionedTopic;
  throw ValidationError("unknown linguistic status symbol: " + sym);
}

namespace {
void check_distribution(const StatusVector& p) {
  if ((p.array() < 0).any()) throw ValidationError("negative probability component");
  if (std::abs(p.sum() - 1.0) > kSumTolerance)
    throw ValidationError("status distribution does not sum to 1");
}
}  // namespace

StatusDistribution::StatusDistribution(double p_in_focus, double p_activated,
                                       double p_familiar)
    : p_(p_in_focus, p_activated, p_familiar) {
  check_distribution(p_);
}

StatusDistribution::StatusDistribution(const StatusVector& p) : p_(p) {
  check_distribution(p_);
}

StatusDistribution normalize(const StatusVector& weights) {
  if ((weights.array() < 0).any()) throw ValidationError("negative weight");
  const double sum = weights.sum();
  if (sum <= 0.0) throw AllZeroWeights();
  return StatusDistribution(StatusVector(weights / sum));
}

CognitiveStatus argmax_status(const StatusDistribution& d) {
  return kCognitiveStatuses[argmax_index(d.vec())];
}

}  // namespace csf
