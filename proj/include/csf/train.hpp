#ifndef CSF_TRAIN_HPP
#define CSF_TRAIN_HPP

#include <functional>
#include <set>
#include <vector>

#include "csf/coding.hpp"
#include "csf/corpus.hpp"
#include "csf/table.hpp"

namespace csf {

struct TransitionCounts {
  CountMatrix m = CountMatrix::Zero();

  double total() const { return m.sum(); }
};

struct Exclusions {
  std::set<ObjectId> objects;
  std::set<DialogueId> dialogues;

  bool excludes(const ObjectId& o) const { return objects.count(o) > 0; }
  bool excludes_dialogue(const DialogueId& d) const { return dialogues.count(d) > 0; }
};

struct AdjacentDataWarning {
  DialogueId dialogue;
  UtteranceIndex t = 0;  // the pair (t-1, t) had an empty side
};

// Called once per increment; used by the leave-one-out hygiene audit.
using IncrementObserver =
    std::function<void(const DialogueId&, const ObjectId&, int row, int col)>;

// Adjacent-utterance cross-product counting: for each non-excluded dialogue,
// each pair (U_{t-1}, U_t) with t >= 2 and each non-excluded object, every
// (response at prefix t-1) x (response at prefix t) pair contributes one
// increment to cell ((status_prev, L_o^t), status_cur). Failed-check
// responses are dropped first.
TransitionCounts count_transitions(const DialogueCorpus& corpus,
                                   const std::vector<ParticipantResponse>& responses,
                                   const Exclusions& excl,
                                   std::vector<AdjacentDataWarning>* warnings = nullptr,
                                   const IncrementObserver& observer = nullptr);

// Additive smoothing: p = (count + alpha) / (row_sum + 3*alpha). All-zero
// rows with alpha = 0 fall back to uniform and are flagged on the table.
ConditionalStatusTable normalize_counts(const TransitionCounts& c, double alpha);

ConditionalStatusTable train(const DialogueCorpus& corpus,
                             const std::vector<ParticipantResponse>& responses,
                             const Exclusions& excl, double alpha = 0.0,
                             std::vector<AdjacentDataWarning>* warnings = nullptr);

}  // namespace csf

#endif
