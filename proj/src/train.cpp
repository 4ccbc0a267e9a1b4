#include "csf/train.hpp"

#include <map>

namespace csf {

TransitionCounts count_transitions(const DialogueCorpus& corpus,
                                   const std::vector<ParticipantResponse>& responses,
                                   const Exclusions& excl,
                                   std::vector<AdjacentDataWarning>* warnings,
                                   const IncrementObserver& observer) {
  const std::set<ObjectId> objects(corpus.objects().begin(), corpus.objects().end());

  // Coded labels per (dialogue, prefix), passed checks only.
  std::map<std::pair<DialogueId, UtteranceIndex>, std::vector<CodedResponse>> by_prefix;
  for (const auto& r : responses) {
    if (!r.passed_check) continue;
    by_prefix[{r.dialogue, r.prefix_len}].push_back(code_response(r, objects));
  }

  TransitionCounts counts;
  for (const auto& d : corpus.dialogues()) {
    if (excl.excludes_dialogue(d.id)) continue;
    for (UtteranceIndex t = 2; t <= static_cast<UtteranceIndex>(d.utterances.size()); ++t) {
      auto prev_it = by_prefix.find({d.id, t - 1});
      auto cur_it = by_prefix.find({d.id, t});
      if (prev_it == by_prefix.end() || cur_it == by_prefix.end() ||
          prev_it->second.empty() || cur_it->second.empty()) {
        if (warnings) warnings->push_back({d.id, t});
        continue;
      }
      for (const auto& o : corpus.objects()) {
        if (excl.excludes(o)) continue;
        const LinguisticStatus l = corpus.linguistic_status(o, d.id, t);
        for (const auto& a : prev_it->second) {
          const int row = row_index(a.labels.at(o), l);
          for (const auto& b : cur_it->second) {
            const int col = index_of(b.labels.at(o));
            counts.m(row, col) += 1.0;
            if (observer) observer(d.id, o, row, col);
          }
        }
      }
    }
  }
  return counts;
}

ConditionalStatusTable normalize_counts(const TransitionCounts& c, double alpha) {
  if (alpha < 0) throw ValidationError("smoothing constant must be >= 0");
  TableMatrix probs;
  std::array<bool, 9> fallback{};
  for (int r = 0; r < 9; ++r) {
    const double mass = c.m.row(r).sum() + 3 * alpha;
    if (mass <= 0.0) {
      probs.row(r).setConstant(1.0 / 3);
      fallback[r] = true;
    } else {
      probs.row(r) = (c.m.row(r).array() + alpha) / mass;
    }
  }
  return ConditionalStatusTable(probs, c.m, fallback);
}

ConditionalStatusTable train(const DialogueCorpus& corpus,
                             const std::vector<ParticipantResponse>& responses,
                             const Exclusions& excl, double alpha,
                             std::vector<AdjacentDataWarning>* warnings) {
  return normalize_counts(count_transitions(corpus, responses, excl, warnings), alpha);
}

}  // namespace csf
