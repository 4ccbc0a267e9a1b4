#ifndef CSF_FILTER_HPP
#define CSF_FILTER_HPP

#include <map>
#include <optional>
#include <utility>

#include "csf/corpus.hpp"
#include "csf/table.hpp"

namespace csf {

enum class UpdateMode { Soft, Hard };

// Per-object recursive Bayesian estimator of cognitive status.
//
// Soft mode marginalizes the previous belief through the conditional table
// and renormalizes; the linguistic-status likelihood is an observed constant
// absorbed by the normalizer. Hard mode conditions on the argmax of the
// previous belief and takes the table row directly.
class CognitiveStatusFilter {
 public:
  CognitiveStatusFilter(ObjectId object, StatusDistribution prior,
                        const ConditionalStatusTable* table,
                        UpdateMode mode = UpdateMode::Soft);

  const StatusDistribution& update(LinguisticStatus l);

  const ObjectId& object() const { return object_; }
  const StatusDistribution& belief() const { return belief_; }
  UpdateMode mode() const { return mode_; }
  long step() const { return step_; }

 private:
  ObjectId object_;
  StatusDistribution belief_;
  const ConditionalStatusTable* table_;
  UpdateMode mode_;
  long step_ = 0;
};

// Pure single-step update, shared with the filter.
StatusDistribution filter_update(const StatusDistribution& belief, LinguisticStatus l,
                                 const ConditionalStatusTable& table, UpdateMode mode);

struct UtteranceObservation {
  DialogueId dialogue;
  UtteranceIndex index = 1;
  // Objects absent from this map are implicitly NotMentioned. Values are
  // restricted to MentionedNonTopic / MentionedTopic.
  std::map<ObjectId, LinguisticStatus> mentions;
};

struct StatusQuery {
  // Empty optionals mean the object is not modeled Familiar-or-higher.
  std::optional<CognitiveStatus> status;
  std::optional<StatusDistribution> belief;
  bool familiar_or_higher() const { return status.has_value(); }
};

// One filter per Familiar-or-higher object; filter existence encodes
// familiarity.
class StatusEngine {
 public:
  StatusEngine(StatusDistribution prior, ConditionalStatusTable table,
               UpdateMode mode = UpdateMode::Soft);

  // Filter created at the engine prior. Throws DuplicateObject.
  void register_familiar(const ObjectId& o);

  // Creates filters for newly mentioned objects, then updates every filter:
  // mentioned objects with their annotated status, all others with
  // NotMentioned. Returns post-update beliefs.
  std::map<ObjectId, StatusDistribution> observe_utterance(const UtteranceObservation& obs);

  StatusQuery query_status(const ObjectId& o) const;

  bool has_filter(const ObjectId& o) const { return filters_.count(o) > 0; }
  std::size_t filter_count() const { return filters_.size(); }
  const ConditionalStatusTable& table() const { return table_; }

 private:
  StatusDistribution prior_;
  ConditionalStatusTable table_;
  UpdateMode mode_;
  std::map<ObjectId, CognitiveStatusFilter> filters_;
};

}  // namespace csf

#endif
