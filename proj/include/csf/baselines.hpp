#ifndef CSF_BASELINES_HPP
#define CSF_BASELINES_HPP

#include <array>
#include <cstdint>

#include "csf/rng.hpp"
#include "csf/status.hpp"
#include "csf/table.hpp"

namespace csf {

// What a NotMentioned observation does to the state.
enum class DecayPolicy { DecayOne, Persist };

const char* name(DecayPolicy p);  // "decay-one" / "persist"

// Deterministic total map (state, linguistic status) -> state. Default
// rules: topic mention forces InFocus, non-topic mention forces Activated,
// no mention either decays one tier (I->A, A->F, F->F) or persists.
class FsmTransitionTable {
 public:
  explicit FsmTransitionTable(DecayPolicy policy = DecayPolicy::DecayOne);

  CognitiveStatus next(CognitiveStatus state, LinguisticStatus l) const {
    return next_[index_of(state)][index_of(l)];
  }
  DecayPolicy policy() const { return policy_; }

  // One-hot conditional table encoding exactly these transitions; feeding it
  // to a filter makes the filter argmax track the FSM state.
  ConditionalStatusTable as_one_hot_table() const;

 private:
  DecayPolicy policy_;
  std::array<std::array<CognitiveStatus, 3>, 3> next_;
};

class FsmModel {
 public:
  explicit FsmModel(CognitiveStatus start = CognitiveStatus::Familiar,
                    DecayPolicy policy = DecayPolicy::DecayOne)
      : state_(start), table_(policy) {}
  FsmModel(CognitiveStatus start, FsmTransitionTable table)
      : state_(start), table_(table) {}

  CognitiveStatus step(LinguisticStatus l) {
    state_ = table_.next(state_, l);
    return state_;
  }

  CognitiveStatus state() const { return state_; }
  const FsmTransitionTable& table() const { return table_; }

 private:
  CognitiveStatus state_;
  FsmTransitionTable table_;
};

// Seeded uniform draws over {I, A, F}.
class RandomBaseline {
 public:
  explicit RandomBaseline(std::uint64_t seed) : rng_(seed) {}

  CognitiveStatus predict() {
    return kCognitiveStatuses[static_cast<int>(rng_.next_below(3))];
  }

 private:
  SplitMix64 rng_;
};

}  // namespace csf

#endif
