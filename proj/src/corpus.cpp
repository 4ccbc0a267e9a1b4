#include "csf/corpus.hpp"

#include "csf/errors.hpp"

namespace csf {

DialogueCorpus::DialogueCorpus(std::vector<ObjectId> objects, std::vector<Dialogue> dialogues)
    : objects_(std::move(objects)), dialogues_(std::move(dialogues)) {
  for (const auto& o : objects_) {
    if (o.empty()) throw ValidationError("empty object id");
    if (!object_set_.insert(o).second) throw ValidationError("duplicate object id: " + o);
  }
  for (std::size_t i = 0; i < dialogues_.size(); ++i) {
    const auto& d = dialogues_[i];
    if (d.id.empty()) throw ValidationError("empty dialogue id");
    if (!dialogue_index_.emplace(d.id, i).second)
      throw ValidationError("duplicate dialogue id: " + d.id);
    for (std::size_t u = 0; u < d.utterances.size(); ++u) {
      const auto& utt = d.utterances[u];
      if (utt.index != static_cast<UtteranceIndex>(u) + 1)
        throw ValidationError("dialogue " + d.id + ": utterance indices must be contiguous from 1");
      std::set<ObjectId> seen;
      for (const auto& m : utt.mentions) {
        if (!object_set_.count(m.object))
          throw DanglingReference("dialogue " + d.id + ": mention of unknown object " + m.object);
        if (!seen.insert(m.object).second)
          throw DuplicateMention("dialogue " + d.id + " utterance " +
                                 std::to_string(utt.index) + ": duplicate mention of " +
                                 m.object);
      }
    }
  }
}

const Dialogue* DialogueCorpus::find_dialogue(const DialogueId& d) const {
  auto it = dialogue_index_.find(d);
  return it == dialogue_index_.end() ? nullptr : &dialogues_[it->second];
}

LinguisticStatus DialogueCorpus::linguistic_status(const ObjectId& o, const DialogueId& d,
                                                   UtteranceIndex t) const {
  const Dialogue* dlg = find_dialogue(d);
  if (!dlg) throw DanglingReference("unknown dialogue: " + d);
  if (t < 1 || t > static_cast<UtteranceIndex>(dlg->utterances.size()))
    throw ValidationError("utterance index out of range: " + std::to_string(t));
  for (const auto& m : dlg->utterances[t - 1].mentions) {
    if (m.object == o)
      return m.role == MentionRole::Topic ? LinguisticStatus::MentionedTopic
                                          : LinguisticStatus::MentionedNonTopic;
  }
  return LinguisticStatus::NotMentioned;
}

}  // namespace csf
