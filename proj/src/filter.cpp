#include "csf/filter.hpp"

namespace csf {

CognitiveStatusFilter::CognitiveStatusFilter(ObjectId object, StatusDistribution prior,
                                             const ConditionalStatusTable* table,
                                             UpdateMode mode)
    : object_(std::move(object)), belief_(std::move(prior)), table_(table), mode_(mode) {}

StatusDistribution filter_update(const StatusDistribution& belief, LinguisticStatus l,
                                 const ConditionalStatusTable& table, UpdateMode mode) {
  if (mode == UpdateMode::Hard) {
    return table.row(argmax_status(belief), l);
  }
  // Soft: w(s) = sum_{s'} belief(s') * p(s | s', l), renormalized.
  StatusVector w = StatusVector::Zero();
  for (CognitiveStatus prev : kCognitiveStatuses) {
    w += belief[prev] * table.probs().row(row_index(prev, l)).transpose();
  }
  return normalize(w);
}

const StatusDistribution& CognitiveStatusFilter::update(LinguisticStatus l) {
  belief_ = filter_update(belief_, l, *table_, mode_);
  ++step_;
  return belief_;
}

StatusEngine::StatusEngine(StatusDistribution prior, ConditionalStatusTable table,
                           UpdateMode mode)
    : prior_(std::move(prior)), table_(std::move(table)), mode_(mode) {}

void StatusEngine::register_familiar(const ObjectId& o) {
  if (filters_.count(o)) throw DuplicateObject("object already registered: " + o);
  filters_.emplace(o, CognitiveStatusFilter(o, prior_, &table_, mode_));
}

std::map<ObjectId, StatusDistribution> StatusEngine::observe_utterance(
    const UtteranceObservation& obs) {
  // Mention makes an object Familiar-or-higher: create its filter first so
  // the mention itself is its first update.
  for (const auto& [o, l] : obs.mentions) {
    (void)l;
    if (!filters_.count(o)) filters_.emplace(o, CognitiveStatusFilter(o, prior_, &table_, mode_));
  }
  std::map<ObjectId, StatusDistribution> beliefs;
  for (auto& [o, f] : filters_) {
    auto it = obs.mentions.find(o);
    const LinguisticStatus l =
        it == obs.mentions.end() ? LinguisticStatus::NotMentioned : it->second;
    beliefs.emplace(o, f.update(l));
  }
  return beliefs;
}

StatusQuery StatusEngine::query_status(const ObjectId& o) const {
  auto it = filters_.find(o);
  if (it == filters_.end()) return {};
  StatusQuery q;
  q.belief = it->second.belief();
  q.status = argmax_status(*q.belief);
  return q;
}

}  // namespace csf
