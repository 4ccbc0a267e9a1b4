#ifndef CSF_CORPUS_HPP
#define CSF_CORPUS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "csf/status.hpp"

namespace csf {

using ObjectId = std::string;
using DialogueId = std::string;
using UtteranceIndex = int;  // 1-based position within a dialogue

enum class MentionRole { Topic, NonTopic };

struct Mention {
  ObjectId object;
  MentionRole role;
  // Optional annotator vote count carried through from the corpus file;
  // ignored by training.
  std::optional<int> annotator_votes;
};

struct Utterance {
  UtteranceIndex index = 1;
  std::string text;
  std::vector<Mention> mentions;
};

struct Dialogue {
  DialogueId id;
  std::vector<Utterance> utterances;
};

class DialogueCorpus {
 public:
  DialogueCorpus() = default;
  // Validates: contiguous 1..n utterance indices, mentions reference known
  // objects, no duplicate object within one utterance's mention list,
  // unique non-empty ids.
  DialogueCorpus(std::vector<ObjectId> objects, std::vector<Dialogue> dialogues);

  const std::vector<ObjectId>& objects() const { return objects_; }
  const std::vector<Dialogue>& dialogues() const { return dialogues_; }

  bool has_object(const ObjectId& o) const { return object_set_.count(o) > 0; }
  const Dialogue* find_dialogue(const DialogueId& d) const;

  // Total linguistic-status lookup: absent mention means NotMentioned.
  LinguisticStatus linguistic_status(const ObjectId& o, const DialogueId& d,
                                     UtteranceIndex t) const;

 private:
  std::vector<ObjectId> objects_;
  std::vector<Dialogue> dialogues_;
  std::set<ObjectId> object_set_;
  std::map<DialogueId, std::size_t> dialogue_index_;
};

struct ParticipantResponse {
  std::string participant;
  DialogueId dialogue;
  UtteranceIndex prefix_len = 1;  // number of utterances heard
  ObjectId q1;                    // single "look at it" click
  std::set<ObjectId> q2;          // "look at that" clicks, may be empty
  bool passed_check = true;
};

}  // namespace csf

#endif
