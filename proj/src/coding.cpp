#include "csf/coding.hpp"

#include "csf/errors.hpp"

namespace csf {

CodedResponse code_response(const ParticipantResponse& r, const std::set<ObjectId>& objects) {
  if (!objects.count(r.q1)) throw UnknownObject("Q1 click outside the scene set: " + r.q1);
  for (const auto& o : r.q2)
    if (!objects.count(o)) throw UnknownObject("Q2 click outside the scene set: " + o);

  CodedResponse coded;
  for (const auto& o : objects) coded.labels[o] = CognitiveStatus::Familiar;
  for (const auto& o : r.q2) coded.labels[o] = CognitiveStatus::Activated;
  // Q1 dominance: the stricter probe wins even when the object is absent
  // from Q2.
  coded.labels[r.q1] = CognitiveStatus::InFocus;
  coded.q1_absent_from_q2 = r.q2.count(r.q1) == 0;
  return coded;
}

const GoldCell* GoldLabelTable::find(const DialogueId& d, UtteranceIndex t,
                                     const ObjectId& o) const {
  auto it = cells.find(GoldKey{d, t, o});
  return it == cells.end() ? nullptr : &it->second;
}

GoldLabelTable build_gold_labels(const std::vector<ParticipantResponse>& responses,
                                 const DialogueCorpus& corpus) {
  const std::set<ObjectId> objects(corpus.objects().begin(), corpus.objects().end());
  GoldLabelTable table;

  // votes[(dialogue, prefix, object)] indexed I, A, F
  std::map<GoldKey, std::array<int, 3>> votes;
  for (const auto& r : responses) {
    if (!r.passed_check) {
      ++table.dropped_failed_checks;
      continue;
    }
    if (!corpus.find_dialogue(r.dialogue))
      throw DanglingReference("response references unknown dialogue: " + r.dialogue);
    CodedResponse coded = code_response(r, objects);
    if (coded.q1_absent_from_q2) ++table.q1_absent_from_q2_count;
    for (const auto& [o, s] : coded.labels)
      ++votes[GoldKey{r.dialogue, r.prefix_len, o}][index_of(s)];
  }

  for (const auto& [key, v] : votes) {
    GoldCell cell;
    cell.votes = v;
    cell.n_participants = v[0] + v[1] + v[2];
    // Ties toward the lower GH status (higher index).
    int best = 0;
    for (int i = 1; i < 3; ++i)
      if (v[i] >= v[best]) best = i;
    cell.majority = kCognitiveStatuses[best];
    table.cells.emplace(key, cell);
  }

  // Report (dialogue, utterance, object) combinations no participant covered.
  for (const auto& d : corpus.dialogues())
    for (const auto& u : d.utterances)
      for (const auto& o : corpus.objects()) {
        GoldKey key{d.id, u.index, o};
        if (!table.cells.count(key)) table.empty_cells.push_back(key);
      }

  return table;
}

}  // namespace csf
