#ifndef CSF_EVAL_HPP
#define CSF_EVAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "csf/baselines.hpp"
#include "csf/coding.hpp"
#include "csf/corpus.hpp"
#include "csf/filter.hpp"
#include "csf/stats.hpp"
#include "csf/train.hpp"

namespace csf {

enum class ModelKind { UniformCsf, InformedCsf, Fsm, Random };

const char* model_name(ModelKind k);  // "u" / "i" / "fsm" / "rb"
ModelKind model_from_name(const std::string& name);

struct PredictionEntry {
  DialogueId dialogue;
  UtteranceIndex utterance = 1;
  ObjectId object;
  CognitiveStatus predicted = CognitiveStatus::Familiar;
  std::optional<CognitiveStatus> gold;  // empty when no participant data
  bool correct = false;                 // false whenever gold is missing
};

struct PredictionVector {
  std::vector<PredictionEntry> entries;

  std::size_t size() const { return entries.size(); }
  int scored() const;   // entries with gold
  int correct() const;
  int missing_gold() const { return static_cast<int>(entries.size()) - scored(); }
};

// 100 * correct / scored, to full double precision; callers round for
// display. Throws EmptyVector when nothing is scored.
double accuracy(const PredictionVector& v);

// Joint success/failure counts over the shared keys. Both vectors must have
// identical key sequences; entries without gold on either side are skipped.
ContingencyTable2x2 contingency(const PredictionVector& v1, const PredictionVector& v2);

struct RunConfig {
  StatusDistribution uniform_prior{1.0 / 3, 1.0 / 3, 1.0 / 3};
  StatusDistribution informed_prior{0.05, 0.10, 0.85};
  UpdateMode mode = UpdateMode::Soft;
  double alpha = 0.0;
  DecayPolicy fsm_decay = DecayPolicy::DecayOne;
  std::uint64_t seed = 0;
  int threads = 1;
};

// One leave-one-out fold per (object, dialogue): CSF models retrain without
// that object and dialogue, then replay the dialogue's annotated linguistic
// statuses from the configured prior. FSM/RB produce predictions at the same
// keys without retraining. Entries are ordered by (dialogue, object,
// utterance) in corpus order.
PredictionVector leave_one_out_predict(ModelKind kind, const DialogueCorpus& corpus,
                                       const std::vector<ParticipantResponse>& responses,
                                       const GoldLabelTable& gold, const RunConfig& config);

struct PairComparison {
  std::string model1;
  std::string model2;
  ContingencyTable2x2 table;
  McNemarResult mcnemar;
};

struct EvalReport {
  RunConfig config;
  std::string rng_algorithm;
  std::vector<std::string> model_names;              // report order
  std::map<std::string, PredictionVector> vectors;   // keyed by model name
  std::map<std::string, double> accuracies;
  std::vector<PairComparison> pairs;                 // all unordered pairs
};

// Full pipeline: gold labels, per-model leave-one-out vectors, accuracies,
// all pairwise contingency tables and McNemar tests.
EvalReport evaluate(const DialogueCorpus& corpus,
                    const std::vector<ParticipantResponse>& responses,
                    const std::vector<ModelKind>& models, const RunConfig& config);

}  // namespace csf

#endif
