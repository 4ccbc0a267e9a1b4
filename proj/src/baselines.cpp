#include "csf/baselines.hpp"

namespace csf {

const char* name(DecayPolicy p) {
  return p == DecayPolicy::DecayOne ? "decay-one" : "persist";
}

FsmTransitionTable::FsmTransitionTable(DecayPolicy policy) : policy_(policy) {
  for (CognitiveStatus s : kCognitiveStatuses) {
    auto& row = next_[index_of(s)];
    row[index_of(LinguisticStatus::MentionedTopic)] = CognitiveStatus::InFocus;
    row[index_of(LinguisticStatus::MentionedNonTopic)] = CognitiveStatus::Activated;
    if (policy == DecayPolicy::Persist) {
      row[index_of(LinguisticStatus::NotMentioned)] = s;
    } else {
      // Decay one tier per unmentioned utterance; Familiar is absorbing.
      switch (s) {
        case CognitiveStatus::InFocus:
          row[index_of(LinguisticStatus::NotMentioned)] = CognitiveStatus::Activated;
          break;
        case CognitiveStatus::Activated:
        case CognitiveStatus::Familiar:
          row[index_of(LinguisticStatus::NotMentioned)] = CognitiveStatus::Familiar;
          break;
      }
    }
  }
}

ConditionalStatusTable FsmTransitionTable::as_one_hot_table() const {
  TableMatrix probs = TableMatrix::Zero();
  for (CognitiveStatus s : kCognitiveStatuses)
    for (LinguisticStatus l : kLinguisticStatuses)
      probs(row_index(s, l), index_of(next(s, l))) = 1.0;
  return ConditionalStatusTable(probs);
}

}  // namespace csf
