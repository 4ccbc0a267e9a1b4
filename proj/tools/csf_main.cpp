#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "csf/eval.hpp"
#include "csf/io.hpp"
#include "csf/train.hpp"

namespace {

enum class LogLevel { Quiet, Info, Debug };

LogLevel log_level() {
  const char* env = std::getenv("CSF_LOG");
  if (!env) return LogLevel::Info;
  const std::string v = env;
  if (v == "quiet") return LogLevel::Quiet;
  if (v == "debug") return LogLevel::Debug;
  return LogLevel::Info;
}

void log_info(const std::string& msg) {
  if (log_level() != LogLevel::Quiet) std::cerr << msg << "\n";
}

csf::StatusDistribution parse_prior(const std::string& spec) {
  if (spec == "uniform") return csf::StatusDistribution(1.0 / 3, 1.0 / 3, 1.0 / 3);
  if (spec == "informed") return csf::StatusDistribution(0.05, 0.10, 0.85);
  std::istringstream is(spec);
  double p[3];
  char comma;
  if (!(is >> p[0] >> comma >> p[1] >> comma >> p[2]))
    throw csf::ValidationError("prior must be uniform, informed, or pI,pA,pF");
  return csf::StatusDistribution(p[0], p[1], p[2]);  // validates the sum
}

csf::UpdateMode parse_mode(const std::string& mode) {
  if (mode == "soft") return csf::UpdateMode::Soft;
  if (mode == "hard") return csf::UpdateMode::Hard;
  throw csf::ValidationError("mode must be soft or hard");
}

csf::DecayPolicy parse_decay(const std::string& decay) {
  if (decay == "decay-one") return csf::DecayPolicy::DecayOne;
  if (decay == "persist") return csf::DecayPolicy::Persist;
  throw csf::ValidationError("fsm-decay must be decay-one or persist");
}

std::string format_distribution(const csf::StatusDistribution& d) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << "(" << d.in_focus() << ", " << d.activated()
     << ", " << d.familiar() << ")";
  return os.str();
}

int run_train(const std::string& corpus_path, const std::string& responses_path,
              const std::string& out_path, double alpha,
              const std::vector<std::string>& exclude_objects,
              const std::vector<std::string>& exclude_dialogues) {
  const csf::DialogueCorpus corpus = csf::io::parse_corpus(csf::io::read_file(corpus_path));
  const auto responses =
      csf::io::parse_responses(csf::io::read_file(responses_path), corpus);

  csf::Exclusions excl;
  excl.objects.insert(exclude_objects.begin(), exclude_objects.end());
  excl.dialogues.insert(exclude_dialogues.begin(), exclude_dialogues.end());

  std::vector<csf::AdjacentDataWarning> warnings;
  const csf::ConditionalStatusTable table =
      csf::train(corpus, responses, excl, alpha, &warnings);
  for (const auto& w : warnings)
    log_info("warning: no adjacent data for dialogue " + w.dialogue + " pair (" +
             std::to_string(w.t - 1) + "," + std::to_string(w.t) + ")");

  csf::io::write_file(out_path, csf::io::write_table(table));

  std::cout << "row-sum audit:\n";
  for (csf::CognitiveStatus prev : csf::kCognitiveStatuses) {
    for (csf::LinguisticStatus ling : csf::kLinguisticStatuses) {
      const int r = csf::row_index(prev, ling);
      std::cout << "  (" << csf::symbol(prev) << "," << csf::symbol(ling)
                << ") sum=" << std::fixed << std::setprecision(9)
                << table.probs().row(r).sum() << " count=" << std::setprecision(0)
                << table.counts().row(r).sum()
                << (table.uniform_fallback()[r] ? " [uniform fallback]" : "") << "\n";
    }
  }
  return 0;
}

int run_predict(const std::string& table_path, const std::string& corpus_path,
                const std::string& dialogue, const std::string& object,
                const std::string& prior_spec, const std::string& mode_spec, bool as_json) {
  const csf::ConditionalStatusTable table = csf::io::read_table(csf::io::read_file(table_path));
  const csf::DialogueCorpus corpus = csf::io::parse_corpus(csf::io::read_file(corpus_path));

  const csf::Dialogue* dlg = corpus.find_dialogue(dialogue);
  if (!dlg) throw csf::ValidationError("unknown dialogue: " + dialogue);
  if (!corpus.has_object(object)) throw csf::ValidationError("unknown object: " + object);

  const csf::StatusDistribution prior = parse_prior(prior_spec);
  const csf::UpdateMode mode = parse_mode(mode_spec);

  csf::CognitiveStatusFilter filter(object, prior, &table, mode);

  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  if (!as_json)
    std::cout << "prior " << format_distribution(prior) << ", "
              << csf::symbol(csf::argmax_status(prior)) << "\n";
  for (const auto& u : dlg->utterances) {
    const csf::LinguisticStatus l = corpus.linguistic_status(object, dialogue, u.index);
    const csf::StatusDistribution& belief = filter.update(l);
    const csf::CognitiveStatus s = csf::argmax_status(belief);
    if (as_json) {
      nlohmann::ordered_json step;
      step["utterance"] = u.index;
      step["linguistic"] = csf::symbol(l);
      step["belief"] = {belief.in_focus(), belief.activated(), belief.familiar()};
      step["status"] = csf::symbol(s);
      steps.push_back(std::move(step));
    } else {
      std::cout << "t=" << u.index << " L=" << csf::symbol(l) << " "
                << format_distribution(belief) << ", " << csf::symbol(s) << "\n";
    }
  }
  if (as_json) {
    nlohmann::ordered_json out;
    out["dialogue"] = dialogue;
    out["object"] = object;
    out["prior"] = {prior.in_focus(), prior.activated(), prior.familiar()};
    out["steps"] = std::move(steps);
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int run_evaluate(const std::string& corpus_path, const std::string& responses_path,
                 const std::string& models_csv, std::uint64_t seed,
                 const std::string& out_path, const std::string& mode_spec, double alpha,
                 const std::string& decay_spec, int threads) {
  const csf::DialogueCorpus corpus = csf::io::parse_corpus(csf::io::read_file(corpus_path));
  const auto responses =
      csf::io::parse_responses(csf::io::read_file(responses_path), corpus);

  std::vector<csf::ModelKind> models;
  std::istringstream is(models_csv);
  std::string name;
  while (std::getline(is, name, ',')) models.push_back(csf::model_from_name(name));
  if (models.empty()) throw csf::ValidationError("no models given");

  csf::RunConfig config;
  config.mode = parse_mode(mode_spec);
  config.alpha = alpha;
  config.fsm_decay = parse_decay(decay_spec);
  config.seed = seed;
  config.threads = threads;

  const csf::EvalReport report = csf::evaluate(corpus, responses, models, config);
  csf::io::write_file(out_path, csf::io::write_report(report));
  std::cout << csf::io::format_report_text(report);

  const int missing = report.vectors.at(report.model_names.front()).missing_gold();
  if (missing > 0)
    log_info("warning: " + std::to_string(missing) +
             " prediction cells lack gold data and were excluded from accuracy");
  return 0;
}

int run_compare(const std::string& report_path, const std::vector<std::string>& pair_specs) {
  const csf::EvalReport report = csf::io::read_report(csf::io::read_file(report_path));

  std::vector<std::pair<std::string, std::string>> pairs;
  if (pair_specs.empty()) {
    for (std::size_t i = 0; i < report.model_names.size(); ++i)
      for (std::size_t j = i + 1; j < report.model_names.size(); ++j)
        pairs.emplace_back(report.model_names[i], report.model_names[j]);
  } else {
    for (const auto& spec : pair_specs) {
      const auto comma = spec.find(',');
      if (comma == std::string::npos)
        throw csf::ValidationError("pair must be given as model1,model2");
      pairs.emplace_back(spec.substr(0, comma), spec.substr(comma + 1));
    }
  }

  std::cout << "model1  model2  n_ss  n_sf  n_fs  n_ff    chi2   p-value\n";
  for (const auto& [m1, m2] : pairs) {
    if (!report.vectors.count(m1)) throw csf::ValidationError("unknown model: " + m1);
    if (!report.vectors.count(m2)) throw csf::ValidationError("unknown model: " + m2);
    const csf::ContingencyTable2x2 t =
        csf::contingency(report.vectors.at(m1), report.vectors.at(m2));
    const csf::McNemarResult r = csf::mcnemar(t);
    std::cout << std::left << std::setw(7) << m1 << " " << std::setw(7) << m2 << std::right
              << std::setw(5) << t.n_ss << std::setw(6) << t.n_sf << std::setw(6) << t.n_fs
              << std::setw(6) << t.n_ff << std::fixed << std::setprecision(3) << std::setw(8)
              << r.chi2 << "   " << csf::io::format_p_value(r.p) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cognitive status modeling: filter training, prediction and evaluation"};
  app.require_subcommand(1);

  // train
  auto* train_cmd = app.add_subcommand("train", "Train a conditional status table");
  std::string corpus_path, responses_path, out_path;
  double alpha = 0.0;
  std::vector<std::string> exclude_objects, exclude_dialogues;
  train_cmd->add_option("--corpus", corpus_path)->required();
  train_cmd->add_option("--responses", responses_path)->required();
  train_cmd->add_option("--out", out_path)->required();
  train_cmd->add_option("--alpha", alpha);
  train_cmd->add_option("--exclude-object", exclude_objects);
  train_cmd->add_option("--exclude-dialogue", exclude_dialogues);

  // predict
  auto* predict_cmd = app.add_subcommand("predict", "Replay a filter through a dialogue");
  std::string table_path, dialogue, object, prior_spec = "uniform", mode_spec = "soft";
  bool as_json = false;
  predict_cmd->add_option("--table", table_path)->required();
  predict_cmd->add_option("--corpus", corpus_path)->required();
  predict_cmd->add_option("--dialogue", dialogue)->required();
  predict_cmd->add_option("--object", object)->required();
  predict_cmd->add_option("--prior", prior_spec);
  predict_cmd->add_option("--mode", mode_spec);
  predict_cmd->add_flag("--json", as_json);

  // evaluate
  auto* eval_cmd = app.add_subcommand("evaluate", "Leave-one-out evaluation of model set");
  std::string models_csv = "u,i,fsm,rb", decay_spec = "decay-one";
  std::uint64_t seed = 0;
  int threads = 1;
  eval_cmd->add_option("--corpus", corpus_path)->required();
  eval_cmd->add_option("--responses", responses_path)->required();
  eval_cmd->add_option("--models", models_csv);
  eval_cmd->add_option("--seed", seed);
  eval_cmd->add_option("--out", out_path)->required();
  eval_cmd->add_option("--mode", mode_spec);
  eval_cmd->add_option("--alpha", alpha);
  eval_cmd->add_option("--fsm-decay", decay_spec);
  eval_cmd->add_option("--threads", threads);

  // compare
  auto* compare_cmd = app.add_subcommand("compare", "Pairwise tests from a stored report");
  std::string report_path;
  std::vector<std::string> pair_specs;
  compare_cmd->add_option("--report", report_path)->required();
  compare_cmd->add_option("--pairs", pair_specs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (train_cmd->parsed())
      return run_train(corpus_path, responses_path, out_path, alpha, exclude_objects,
                       exclude_dialogues);
    if (predict_cmd->parsed())
      return run_predict(table_path, corpus_path, dialogue, object, prior_spec, mode_spec,
                         as_json);
    if (eval_cmd->parsed())
      return run_evaluate(corpus_path, responses_path, models_csv, seed, out_path, mode_spec,
                          alpha, decay_spec, threads);
    if (compare_cmd->parsed()) return run_compare(report_path, pair_specs);
  } catch (const csf::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const csf::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
