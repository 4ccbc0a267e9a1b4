#include "csf/eval.hpp"

#include <thread>

#include "csf/errors.hpp"
#include "csf/rng.hpp"

namespace csf {

const char* model_name(ModelKind k) {
  switch (k) {
    case ModelKind::UniformCsf:
      return "u";
    case ModelKind::InformedCsf:
      return "i";
    case ModelKind::Fsm:
      return "fsm";
    case ModelKind::Random:
      return "rb";
  }
  return "?";
}

ModelKind model_from_name(const std::string& name) {
  if (name == "u") return ModelKind::UniformCsf;
  if (name == "i") return ModelKind::InformedCsf;
  if (name == "fsm") return ModelKind::Fsm;
  if (name == "rb") return ModelKind::Random;
  throw ValidationError("unknown model name: " + name);
}

int PredictionVector::scored() const {
  int n = 0;
  for (const auto& e : entries)
    if (e.gold) ++n;
  return n;
}

int PredictionVector::correct() const {
  int n = 0;
  for (const auto& e : entries)
    if (e.gold && e.correct) ++n;
  return n;
}

double accuracy(const PredictionVector& v) {
  const int scored = v.scored();
  if (scored == 0) throw EmptyVector();
  return 100.0 * v.correct() / scored;
}

ContingencyTable2x2 contingency(const PredictionVector& v1, const PredictionVector& v2) {
  if (v1.size() != v2.size()) throw KeyMismatch("prediction vectors differ in length");
  ContingencyTable2x2 t;
  for (std::size_t i = 0; i < v1.entries.size(); ++i) {
    const auto& a = v1.entries[i];
    const auto& b = v2.entries[i];
    if (a.dialogue != b.dialogue || a.utterance != b.utterance || a.object != b.object)
      throw KeyMismatch("prediction vectors have different key sequences");
    if (!a.gold || !b.gold) continue;
    if (a.correct)
      b.correct ? ++t.n_ss : ++t.n_sf;
    else
      b.correct ? ++t.n_fs : ++t.n_ff;
  }
  return t;
}

namespace {

struct Fold {
  DialogueId dialogue;
  ObjectId object;
  std::size_t index = 0;  // position in fold order, seeds the RB stream
};

std::vector<Fold> fold_list(const DialogueCorpus& corpus) {
  std::vector<Fold> folds;
  for (const auto& d : corpus.dialogues())
    for (const auto& o : corpus.objects())
      folds.push_back({d.id, o, folds.size()});
  return folds;
}

std::vector<PredictionEntry> run_fold(ModelKind kind, const Fold& fold,
                                      const DialogueCorpus& corpus,
                                      const std::vector<ParticipantResponse>& responses,
                                      const GoldLabelTable& gold, const RunConfig& config) {
  const Dialogue* dlg = corpus.find_dialogue(fold.dialogue);
  const auto len = static_cast<UtteranceIndex>(dlg->utterances.size());

  std::vector<CognitiveStatus> predictions;
  predictions.reserve(len);

  switch (kind) {
    case ModelKind::UniformCsf:
    case ModelKind::InformedCsf: {
      Exclusions excl;
      excl.objects.insert(fold.object);
      excl.dialogues.insert(fold.dialogue);
      const ConditionalStatusTable table = train(corpus, responses, excl, config.alpha);
      const StatusDistribution& prior =
          kind == ModelKind::UniformCsf ? config.uniform_prior : config.informed_prior;
      CognitiveStatusFilter filter(fold.object, prior, &table, config.mode);
      for (UtteranceIndex t = 1; t <= len; ++t)
        predictions.push_back(argmax_status(
            filter.update(corpus.linguistic_status(fold.object, fold.dialogue, t))));
      break;
    }
    case ModelKind::Fsm: {
      FsmModel fsm(CognitiveStatus::Familiar, config.fsm_decay);
      for (UtteranceIndex t = 1; t <= len; ++t)
        predictions.push_back(fsm.step(corpus.linguistic_status(fold.object, fold.dialogue, t)));
      break;
    }
    case ModelKind::Random: {
      RandomBaseline rb(derive_seed(config.seed, fold.index));
      for (UtteranceIndex t = 1; t <= len; ++t) predictions.push_back(rb.predict());
      break;
    }
  }

  std::vector<PredictionEntry> entries;
  entries.reserve(len);
  for (UtteranceIndex t = 1; t <= len; ++t) {
    PredictionEntry e;
    e.dialogue = fold.dialogue;
    e.utterance = t;
    e.object = fold.object;
    e.predicted = predictions[t - 1];
    if (const GoldCell* cell = gold.find(fold.dialogue, t, fold.object)) {
      e.gold = cell->majority;
      e.correct = e.predicted == cell->majority;
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace

PredictionVector leave_one_out_predict(ModelKind kind, const DialogueCorpus& corpus,
                                       const std::vector<ParticipantResponse>& responses,
                                       const GoldLabelTable& gold, const RunConfig& config) {
  const std::vector<Fold> folds = fold_list(corpus);
  std::vector<std::vector<PredictionEntry>> per_fold(folds.size());

  const int threads = config.threads > 1 ? config.threads : 1;
  if (threads == 1 || folds.size() < 2) {
    for (std::size_t i = 0; i < folds.size(); ++i)
      per_fold[i] = run_fold(kind, folds[i], corpus, responses, gold, config);
  } else {
    // Folds are independent; a strided split plus ordered assembly keeps the
    // result identical to the sequential run.
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < folds.size(); i += threads)
          per_fold[i] = run_fold(kind, folds[i], corpus, responses, gold, config);
      });
    }
    for (auto& t : pool) t.join();
  }

  PredictionVector v;
  for (auto& entries : per_fold)
    for (auto& e : entries) v.entries.push_back(std::move(e));
  return v;
}

EvalReport evaluate(const DialogueCorpus& corpus,
                    const std::vector<ParticipantResponse>& responses,
                    const std::vector<ModelKind>& models, const RunConfig& config) {
  const GoldLabelTable gold = build_gold_labels(responses, corpus);

  EvalReport report;
  report.config = config;
  report.rng_algorithm = kRngAlgorithm;
  for (ModelKind kind : models) {
    const std::string name = model_name(kind);
    if (report.vectors.count(name)) throw ValidationError("duplicate model: " + name);
    report.model_names.push_back(name);
    PredictionVector v = leave_one_out_predict(kind, corpus, responses, gold, config);
    report.accuracies[name] = accuracy(v);
    report.vectors.emplace(name, std::move(v));
  }
  for (std::size_t i = 0; i < report.model_names.size(); ++i) {
    for (std::size_t j = i + 1; j < report.model_names.size(); ++j) {
      PairComparison pair;
      pair.model1 = report.model_names[i];
      pair.model2 = report.model_names[j];
      pair.table = contingency(report.vectors.at(pair.model1), report.vectors.at(pair.model2));
      pair.mcnemar = mcnemar(pair.table);
      report.pairs.push_back(std::move(pair));
    }
  }
  return report;
}

}  // namespace csf
