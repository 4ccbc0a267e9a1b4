#include "csf/io.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace csf::io {

using json = nlohmann::ordered_json;

namespace {

constexpr int kFormatVersion = 1;

json parse_json(const std::string& bytes) {
  try {
    return json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw SchemaError(path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path + ": missing key \"" + key + "\"");
  return *it;
}

std::string require_string(const json& obj, const char* key, const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_string()) throw SchemaError(path + "." + key + ": expected a string");
  return v.get<std::string>();
}

std::int64_t require_int(const json& obj, const char* key, const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_number_integer()) throw SchemaError(path + "." + key + ": expected an integer");
  return v.get<std::int64_t>();
}

double require_number(const json& obj, const char* key, const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_number()) throw SchemaError(path + "." + key + ": expected a number");
  return v.get<double>();
}

bool require_bool(const json& obj, const char* key, const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_boolean()) throw SchemaError(path + "." + key + ": expected a boolean");
  return v.get<bool>();
}

const json& require_array(const json& obj, const char* key, const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_array()) throw SchemaError(path + "." + key + ": expected an array");
  return v;
}

void check_version(const json& root, const std::string& path) {
  if (require_int(root, "format_version", path) != kFormatVersion)
    throw SchemaError(path + ": unsupported format_version");
}

StatusVector parse_prob_triple(const json& arr, const std::string& path) {
  if (!arr.is_array() || arr.size() != 3) throw SchemaError(path + ": expected 3 numbers");
  StatusVector v;
  for (int i = 0; i < 3; ++i) {
    if (!arr[i].is_number()) throw SchemaError(path + ": expected 3 numbers");
    v[i] = arr[i].get<double>();
  }
  return v;
}

json prob_triple(const StatusVector& v) { return json::array({v[0], v[1], v[2]}); }

}  // namespace

DialogueCorpus parse_corpus(const std::string& bytes) {
  const json root = parse_json(bytes);
  check_version(root, "corpus");

  std::vector<ObjectId> objects;
  for (const auto& o : require_array(root, "objects", "corpus")) {
    if (!o.is_string()) throw SchemaError("corpus.objects: expected strings");
    objects.push_back(o.get<std::string>());
  }

  std::vector<Dialogue> dialogues;
  const json& dlgs = require_array(root, "dialogues", "corpus");
  for (std::size_t di = 0; di < dlgs.size(); ++di) {
    const std::string dpath = "corpus.dialogues[" + std::to_string(di) + "]";
    Dialogue d;
    d.id = require_string(dlgs[di], "id", dpath);
    const json& utts = require_array(dlgs[di], "utterances", dpath);
    for (std::size_t ui = 0; ui < utts.size(); ++ui) {
      const std::string upath = dpath + ".utterances[" + std::to_string(ui) + "]";
      Utterance u;
      u.index = static_cast<UtteranceIndex>(require_int(utts[ui], "index", upath));
      u.text = require_string(utts[ui], "text", upath);
      const json& mentions = require_array(utts[ui], "mentions", upath);
      for (std::size_t mi = 0; mi < mentions.size(); ++mi) {
        const std::string mpath = upath + ".mentions[" + std::to_string(mi) + "]";
        Mention m;
        m.object = require_string(mentions[mi], "object", mpath);
        const std::string role = require_string(mentions[mi], "role", mpath);
        if (role == "topic")
          m.role = MentionRole::Topic;
        else if (role == "nontopic")
          m.role = MentionRole::NonTopic;
        else
          throw SchemaError(mpath + ".role: expected \"topic\" or \"nontopic\"");
        if (mentions[mi].contains("annotator_votes"))
          m.annotator_votes =
              static_cast<int>(require_int(mentions[mi], "annotator_votes", mpath));
        u.mentions.push_back(std::move(m));
      }
      d.utterances.push_back(std::move(u));
    }
    dialogues.push_back(std::move(d));
  }
  return DialogueCorpus(std::move(objects), std::move(dialogues));
}

std::string write_corpus(const DialogueCorpus& corpus) {
  json root;
  root["format_version"] = kFormatVersion;
  root["objects"] = corpus.objects();
  json dlgs = json::array();
  for (const auto& d : corpus.dialogues()) {
    json jd;
    jd["id"] = d.id;
    json utts = json::array();
    for (const auto& u : d.utterances) {
      json ju;
      ju["index"] = u.index;
      ju["text"] = u.text;
      json mentions = json::array();
      for (const auto& m : u.mentions) {
        json jm;
        jm["object"] = m.object;
        jm["role"] = m.role == MentionRole::Topic ? "topic" : "nontopic";
        if (m.annotator_votes) jm["annotator_votes"] = *m.annotator_votes;
        mentions.push_back(std::move(jm));
      }
      ju["mentions"] = std::move(mentions);
      utts.push_back(std::move(ju));
    }
    jd["utterances"] = std::move(utts);
    dlgs.push_back(std::move(jd));
  }
  root["dialogues"] = std::move(dlgs);
  return root.dump(2) + "\n";
}

std::vector<ParticipantResponse> parse_responses(const std::string& bytes,
                                                 const DialogueCorpus& corpus) {
  const json root = parse_json(bytes);
  check_version(root, "responses");

  std::vector<ParticipantResponse> out;
  const json& arr = require_array(root, "responses", "responses");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string path = "responses[" + std::to_string(i) + "]";
    ParticipantResponse r;
    r.participant = require_string(arr[i], "participant", path);
    r.dialogue = require_string(arr[i], "dialogue", path);
    r.prefix_len = static_cast<UtteranceIndex>(require_int(arr[i], "prefix_len", path));
    r.q1 = require_string(arr[i], "q1", path);
    for (const auto& o : require_array(arr[i], "q2", path)) {
      if (!o.is_string()) throw SchemaError(path + ".q2: expected strings");
      r.q2.insert(o.get<std::string>());
    }
    r.passed_check = require_bool(arr[i], "passed_check", path);

    const Dialogue* d = corpus.find_dialogue(r.dialogue);
    if (!d) throw DanglingReference(path + ": unknown dialogue " + r.dialogue);
    if (r.prefix_len < 1 || r.prefix_len > static_cast<UtteranceIndex>(d->utterances.size()))
      throw PrefixOutOfRange(path + ": prefix_len " + std::to_string(r.prefix_len) +
                             " out of range for dialogue " + r.dialogue);
    if (!corpus.has_object(r.q1)) throw DanglingReference(path + ": unknown object " + r.q1);
    for (const auto& o : r.q2)
      if (!corpus.has_object(o)) throw DanglingReference(path + ": unknown object " + o);
    out.push_back(std::move(r));
  }
  return out;
}

std::string write_responses(const std::vector<ParticipantResponse>& responses) {
  json root;
  root["format_version"] = kFormatVersion;
  json arr = json::array();
  for (const auto& r : responses) {
    json jr;
    jr["participant"] = r.participant;
    jr["dialogue"] = r.dialogue;
    jr["prefix_len"] = r.prefix_len;
    jr["q1"] = r.q1;
    jr["q2"] = std::vector<ObjectId>(r.q2.begin(), r.q2.end());
    jr["passed_check"] = r.passed_check;
    arr.push_back(std::move(jr));
  }
  root["responses"] = std::move(arr);
  return root.dump(2) + "\n";
}

ConditionalStatusTable read_table(const std::string& bytes) {
  const json root = parse_json(bytes);
  check_version(root, "table");

  const json& rows = require_array(root, "rows", "table");
  if (rows.size() != 9) throw SchemaError("table.rows: expected exactly 9 rows");

  TableMatrix probs;
  CountMatrix counts = CountMatrix::Zero();
  std::array<bool, 9> fallback{};
  bool any_counts = false;
  std::array<bool, 9> seen{};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string path = "table.rows[" + std::to_string(i) + "]";
    const CognitiveStatus prev = cognitive_from_symbol(require_string(rows[i], "prev", path));
    const LinguisticStatus ling = linguistic_from_symbol(require_string(rows[i], "ling", path));
    const int r = row_index(prev, ling);
    if (seen[r]) throw SchemaError(path + ": duplicate row key");
    seen[r] = true;
    const StatusVector p = parse_prob_triple(require(rows[i], "p", path), path + ".p");
    if (std::abs(p.sum() - 1.0) > 1e-6) throw RowSumError(path + ": row does not sum to 1");
    probs.row(r) = p.transpose();
    if (rows[i].contains("counts")) {
      any_counts = true;
      const json& c = rows[i]["counts"];
      if (!c.is_array() || c.size() != 3)
        throw SchemaError(path + ".counts: expected 3 integers");
      for (int j = 0; j < 3; ++j) {
        if (!c[j].is_number_integer())
          throw SchemaError(path + ".counts: expected 3 integers");
        counts(r, j) = static_cast<double>(c[j].get<std::int64_t>());
      }
    }
    if (rows[i].contains("uniform_fallback"))
      fallback[r] = require_bool(rows[i], "uniform_fallback", path);
  }
  if (any_counts) return ConditionalStatusTable(probs, counts, fallback);
  return ConditionalStatusTable(probs);
}

std::string write_table(const ConditionalStatusTable& table) {
  json root;
  root["format_version"] = kFormatVersion;
  json rows = json::array();
  for (CognitiveStatus prev : kCognitiveStatuses) {
    for (LinguisticStatus ling : kLinguisticStatuses) {
      const int r = row_index(prev, ling);
      json row;
      row["prev"] = symbol(prev);
      row["ling"] = symbol(ling);
      row["p"] = prob_triple(table.probs().row(r).transpose());
      if (table.has_counts()) {
        row["counts"] = json::array({static_cast<std::int64_t>(table.counts()(r, 0)),
                                     static_cast<std::int64_t>(table.counts()(r, 1)),
                                     static_cast<std::int64_t>(table.counts()(r, 2))});
        row["uniform_fallback"] = table.uniform_fallback()[r];
      }
      rows.push_back(std::move(row));
    }
  }
  root["rows"] = std::move(rows);
  return root.dump(2) + "\n";
}

namespace {

json config_to_json(const RunConfig& c) {
  json j;
  j["uniform_prior"] = prob_triple(c.uniform_prior.vec());
  j["informed_prior"] = prob_triple(c.informed_prior.vec());
  j["mode"] = c.mode == UpdateMode::Soft ? "soft" : "hard";
  j["alpha"] = c.alpha;
  j["fsm_decay"] = name(c.fsm_decay);
  // threads is an execution detail, not part of the result; omitting it
  // keeps 1-thread and N-thread reports byte-identical.
  j["seed"] = c.seed;
  return j;
}

RunConfig config_from_json(const json& j, const std::string& path) {
  RunConfig c;
  c.uniform_prior =
      StatusDistribution(parse_prob_triple(require(j, "uniform_prior", path), path));
  c.informed_prior =
      StatusDistribution(parse_prob_triple(require(j, "informed_prior", path), path));
  const std::string mode = require_string(j, "mode", path);
  if (mode == "soft")
    c.mode = UpdateMode::Soft;
  else if (mode == "hard")
    c.mode = UpdateMode::Hard;
  else
    throw SchemaError(path + ".mode: expected \"soft\" or \"hard\"");
  c.alpha = require_number(j, "alpha", path);
  const std::string decay = require_string(j, "fsm_decay", path);
  if (decay == "decay-one")
    c.fsm_decay = DecayPolicy::DecayOne;
  else if (decay == "persist")
    c.fsm_decay = DecayPolicy::Persist;
  else
    throw SchemaError(path + ".fsm_decay: expected \"decay-one\" or \"persist\"");
  const json& seed = require(j, "seed", path);
  if (!seed.is_number_unsigned() && !seed.is_number_integer())
    throw SchemaError(path + ".seed: expected an integer");
  c.seed = seed.get<std::uint64_t>();
  return c;
}

json vector_to_json(const PredictionVector& v) {
  json arr = json::array();
  for (const auto& e : v.entries) {
    json je;
    je["dialogue"] = e.dialogue;
    je["utterance"] = e.utterance;
    je["object"] = e.object;
    je["predicted"] = symbol(e.predicted);
    if (e.gold)
      je["gold"] = symbol(*e.gold);
    else
      je["gold"] = nullptr;
    je["correct"] = e.correct;
    arr.push_back(std::move(je));
  }
  return arr;
}

PredictionVector vector_from_json(const json& arr, const std::string& path) {
  if (!arr.is_array()) throw SchemaError(path + ": expected an array");
  PredictionVector v;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    PredictionEntry e;
    e.dialogue = require_string(arr[i], "dialogue", p);
    e.utterance = static_cast<UtteranceIndex>(require_int(arr[i], "utterance", p));
    e.object = require_string(arr[i], "object", p);
    e.predicted = cognitive_from_symbol(require_string(arr[i], "predicted", p));
    const json& gold = require(arr[i], "gold", p);
    if (!gold.is_null()) e.gold = cognitive_from_symbol(gold.get<std::string>());
    e.correct = require_bool(arr[i], "correct", p);
    v.entries.push_back(std::move(e));
  }
  return v;
}

}  // namespace

std::string write_report(const EvalReport& report) {
  json root;
  root["format_version"] = kFormatVersion;
  root["config"] = config_to_json(report.config);
  root["rng_algorithm"] = report.rng_algorithm;
  root["models"] = report.model_names;
  json accuracies;
  for (const auto& m : report.model_names) accuracies[m] = report.accuracies.at(m);
  root["accuracies"] = std::move(accuracies);
  json vectors;
  for (const auto& m : report.model_names) vectors[m] = vector_to_json(report.vectors.at(m));
  root["vectors"] = std::move(vectors);
  json pairs = json::array();
  for (const auto& p : report.pairs) {
    json jp;
    jp["model1"] = p.model1;
    jp["model2"] = p.model2;
    jp["n_ss"] = p.table.n_ss;
    jp["n_sf"] = p.table.n_sf;
    jp["n_fs"] = p.table.n_fs;
    jp["n_ff"] = p.table.n_ff;
    jp["chi2"] = p.mcnemar.chi2;
    jp["p"] = p.mcnemar.p;
    jp["degenerate"] = p.mcnemar.degenerate;
    pairs.push_back(std::move(jp));
  }
  root["pairs"] = std::move(pairs);
  return root.dump(2) + "\n";
}

EvalReport read_report(const std::string& bytes) {
  const json root = parse_json(bytes);
  check_version(root, "report");

  EvalReport report;
  report.config = config_from_json(require(root, "config", "report"), "report.config");
  report.rng_algorithm = require_string(root, "rng_algorithm", "report");
  for (const auto& m : require_array(root, "models", "report")) {
    if (!m.is_string()) throw SchemaError("report.models: expected strings");
    report.model_names.push_back(m.get<std::string>());
  }
  const json& accuracies = require(root, "accuracies", "report");
  const json& vectors = require(root, "vectors", "report");
  for (const auto& m : report.model_names) {
    report.accuracies[m] = require_number(accuracies, m.c_str(), "report.accuracies");
    report.vectors[m] =
        vector_from_json(require(vectors, m.c_str(), "report.vectors"), "report.vectors." + m);
  }
  for (const auto& jp : require_array(root, "pairs", "report")) {
    PairComparison p;
    p.model1 = require_string(jp, "model1", "report.pairs");
    p.model2 = require_string(jp, "model2", "report.pairs");
    p.table.n_ss = static_cast<int>(require_int(jp, "n_ss", "report.pairs"));
    p.table.n_sf = static_cast<int>(require_int(jp, "n_sf", "report.pairs"));
    p.table.n_fs = static_cast<int>(require_int(jp, "n_fs", "report.pairs"));
    p.table.n_ff = static_cast<int>(require_int(jp, "n_ff", "report.pairs"));
    p.mcnemar.chi2 = require_number(jp, "chi2", "report.pairs");
    p.mcnemar.p = require_number(jp, "p", "report.pairs");
    p.mcnemar.degenerate = require_bool(jp, "degenerate", "report.pairs");
    report.pairs.push_back(std::move(p));
  }
  return report;
}

std::string format_p_value(double p) {
  if (p < 1e-4) return "<0.0001";
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << p;
  return os.str();
}

std::string format_report_text(const EvalReport& report) {
  std::ostringstream os;
  os << std::fixed;

  os << "Accuracy\n";
  os << "  model  accuracy\n";
  for (const auto& m : report.model_names)
    os << "  " << std::left << std::setw(6) << m << std::right << std::setprecision(2)
       << std::setw(7) << report.accuracies.at(m) << "\n";

  if (!report.pairs.empty()) {
    os << "\nContingency tables (model1 vs model2)\n";
    os << "  model1  model2  n_ss  n_sf  n_fs  n_ff\n";
    for (const auto& p : report.pairs)
      os << "  " << std::left << std::setw(7) << p.model1 << " " << std::setw(7) << p.model2
         << std::right << std::setw(5) << p.table.n_ss << std::setw(6) << p.table.n_sf
         << std::setw(6) << p.table.n_fs << std::setw(6) << p.table.n_ff << "\n";

    os << "\nMcNemar's tests (continuity-corrected, 1 df)\n";
    os << "  model1  model2    chi2   p-value\n";
    for (const auto& p : report.pairs)
      os << "  " << std::left << std::setw(7) << p.model1 << " " << std::setw(7) << p.model2
         << std::right << std::setprecision(3) << std::setw(8) << p.mcnemar.chi2 << "   "
         << format_p_value(p.mcnemar.p) << "\n";
  }

  os << "\nconfig: mode=" << (report.config.mode == UpdateMode::Soft ? "soft" : "hard")
     << " alpha=" << std::setprecision(3) << report.config.alpha
     << " fsm_decay=" << name(report.config.fsm_decay) << " seed=" << report.config.seed
     << " rng=" << report.rng_algorithm << "\n";
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << bytes;
}

}  // namespace csf::io
