#ifndef CSF_CODING_HPP
#define CSF_CODING_HPP

#include <array>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "csf/corpus.hpp"

namespace csf {

struct CodedResponse {
  std::map<ObjectId, CognitiveStatus> labels;  // total over the scene set
  // Data-quality counter: Q1 object missing from Q2 (Q1 dominance applied).
  bool q1_absent_from_q2 = false;
};

// Q1 click codes InFocus (even when absent from Q2), remaining Q2 clicks
// code Activated, everything else Familiar. Throws UnknownObject for clicks
// outside the scene set. Caller must have filtered failed attention checks.
CodedResponse code_response(const ParticipantResponse& r, const std::set<ObjectId>& objects);

using GoldKey = std::tuple<DialogueId, UtteranceIndex, ObjectId>;

struct GoldCell {
  CognitiveStatus majority = CognitiveStatus::Familiar;
  std::array<int, 3> votes{};  // indexed I, A, F
  int n_participants = 0;
};

struct GoldLabelTable {
  std::map<GoldKey, GoldCell> cells;
  // (dialogue, utterance, object) combinations with zero responses.
  std::vector<GoldKey> empty_cells;
  int dropped_failed_checks = 0;
  int q1_absent_from_q2_count = 0;

  const GoldCell* find(const DialogueId& d, UtteranceIndex t, const ObjectId& o) const;
};

// Majority label per (dialogue, prefix_len, object), ties toward the lower
// GH status. Only passed-check responses contribute.
GoldLabelTable build_gold_labels(const std::vector<ParticipantResponse>& responses,
                                 const DialogueCorpus& corpus);

}  // namespace csf

#endif
