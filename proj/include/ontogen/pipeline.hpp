#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ontogen/completion.hpp"
#include "ontogen/consistency.hpp"
#include "ontogen/corpus_cleaner.hpp"
#include "ontogen/correction.hpp"
#include "ontogen/dot_export.hpp"
#include "ontogen/rdf_io.hpp"
#include "ontogen/refinement.hpp"
#include "ontogen/reports.hpp"

namespace ontogen {

namespace fs = std::filesystem;

struct PipelineConfig {
  fs::path base_dir = ".";  // relative paths resolve against this

  std::optional<fs::path> corpus;
  std::optional<DocFormat> corpus_format;
  std::optional<fs::path> denylist;
  std::optional<fs::path> triples;
  std::optional<fs::path> refine_schema;
  std::optional<fs::path> axioms;
  std::optional<fs::path> reference;
  std::optional<fs::path> domain;
  std::optional<fs::path> train_extra;
  fs::path output = "out";
  std::uint64_t seed = 42;

  CleanConfig clean;
  RefineConfig refine;
  CorrectionConfig correct;
  TrainConfig train;
  std::vector<std::string> predict_relations;
  double predict_threshold = 0.5;
  std::size_t predict_top_k = 1;
  double holdout = 0.1;
  double agreement_threshold = 0.8;

  // Every setting applied so far, as written; hashed into the manifest.
  std::map<std::string, std::string> settings;
};

namespace detail {

inline std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto comma = s.find(',', start);
    auto item = trim(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (!item.empty()) out.push_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  throw Error(key + ": expected true/false, got '" + v + "'");
}

inline double parse_real(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty()) throw Error(key + ": expected a number, got '" + v + "'");
  return x;
}

inline std::uint64_t parse_count(const std::string& key, const std::string& v) {
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(key + ": expected a non-negative integer, got '" + v + "'");
  }
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw Error(key + ": integer out of range '" + v + "'");
  }
}

inline std::string fnv1a_hex(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace detail

inline std::vector<std::string> config_keys() {
  return {"agreement_threshold", "axioms", "batch_size", "context_pool", "corpus", "denylist",
          "dim", "domain", "dominant_combo_support", "epochs", "format", "functional",
          "high", "holdout", "l2", "learning_rate", "lof_k", "lof_threshold", "loss",
          "low", "margin", "min_combo_support", "min_words", "negatives", "output",
          "predict_relations", "prune_disconnected", "real_relations", "reference", "refine_schema",
          "seed", "sim_threshold", "threads", "threshold", "top_k", "train_extra", "triples", "workers"};
}

// Applies one key=value setting. Unknown keys and malformed values throw.
inline void apply_setting(PipelineConfig& cfg, const std::string& key, const std::string& value) {
  auto path = [&] { return fs::path(value).is_absolute() ? fs::path(value) : cfg.base_dir / value; };
  auto count = [&] { return static_cast<std::size_t>(detail::parse_count(key, value)); };
  auto real = [&] { return detail::parse_real(key, value); };

  if (key == "corpus") cfg.corpus = path();
  else if (key == "format") cfg.corpus_format = parse_format(value);
  else if (key == "denylist") cfg.denylist = path();
  else if (key == "triples") cfg.triples = path();
  else if (key == "refine_schema") cfg.refine_schema = path();
  else if (key == "axioms") cfg.axioms = path();
  else if (key == "reference") cfg.reference = path();
  else if (key == "domain") cfg.domain = path();
  else if (key == "train_extra") cfg.train_extra = path();
  else if (key == "output") cfg.output = path();
  else if (key == "seed") cfg.seed = cfg.train.seed = detail::parse_count(key, value);
  else if (key == "min_words") cfg.clean.min_words = count();
  else if (key == "low") cfg.refine.low_threshold = real();
  else if (key == "high") cfg.refine.band_upper = real();
  else if (key == "lof_k") cfg.refine.lof_k = count();
  else if (key == "lof_threshold") cfg.refine.lof_threshold = real();
  else if (key == "min_combo_support") cfg.refine.min_combo_support = count();
  else if (key == "dominant_combo_support") cfg.refine.dominant_combo_support = count();
  else if (key == "prune_disconnected") cfg.refine.prune_disconnected = detail::parse_bool(key, value);
  else if (key == "context_pool") cfg.refine.context_pool = count();
  else if (key == "workers") cfg.refine.workers = static_cast<unsigned>(count());
  else if (key == "functional") {
    auto items = detail::split_list(value);
    cfg.correct.functional = {items.begin(), items.end()};
  }
  else if (key == "sim_threshold") cfg.correct.sim_threshold = real();
  else if (key == "dim") cfg.train.dimension = count();
  else if (key == "epochs") cfg.train.epochs = count();
  else if (key == "batch_size") cfg.train.batch_size = count();
  else if (key == "learning_rate") cfg.train.learning_rate = real();
  else if (key == "l2") cfg.train.l2_lambda = real();
  else if (key == "negatives") cfg.train.negatives = count();
  else if (key == "real_relations") cfg.train.real_relations = detail::parse_bool(key, value);
  else if (key == "margin") cfg.train.margin = real();
  else if (key == "threads") cfg.train.threads = static_cast<unsigned>(count());
  else if (key == "loss") {
    if (value == "logistic") cfg.train.loss = LossKind::kLogistic;
    else if (value == "margin") cfg.train.loss = LossKind::kMarginRanking;
    else throw Error("loss: expected logistic or margin, got '" + value + "'");
  }
  else if (key == "predict_relations") cfg.predict_relations = detail::split_list(value);
  else if (key == "threshold") cfg.predict_threshold = real();
  else if (key == "top_k") cfg.predict_top_k = count();
  else if (key == "holdout") cfg.holdout = real();
  else if (key == "agreement_threshold") cfg.agreement_threshold = real();
  else throw Error("unknown config key '" + key + "'");

  cfg.settings[key] = value;
}

// `key = value` lines; blank lines and lines starting with '#' are ignored.
// Relative paths resolve against `base_dir`.
inline PipelineConfig parse_config(std::string_view text, const fs::path& base_dir) {
  PipelineConfig cfg;
  cfg.base_dir = base_dir;
  cfg.output = base_dir / "out";
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    auto t = detail::trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos) throw ParseError("expected key = value", n);
    try {
      apply_setting(cfg, detail::trim(t.substr(0, eq)), detail::trim(t.substr(eq + 1)));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), n);
    }
  }
  return cfg;
}

inline PipelineConfig load_config(const fs::path& file) {
  return parse_config(read_file(file), file.parent_path().empty() ? fs::path(".") : file.parent_path());
}

// Hash of the effective settings (sorted key=value lines). The output
// location is not part of it.
inline std::string config_hash(const PipelineConfig& cfg) {
  std::string canon;
  for (const auto& [k, v] : cfg.settings) {
    if (k != "output") canon += k + "=" + v + "\n";
  }
  return "fnv1a64:" + detail::fnv1a_hex(canon);
}

// Empty result means the configuration is runnable.
inline std::vector<std::string> validate(const PipelineConfig& cfg) {
  std::vector<std::string> out;
  auto must_exist = [&](const std::optional<fs::path>& p, const char* what, bool directory) {
    if (!p) return false;
    std::error_code ec;
    bool ok = directory ? fs::is_directory(*p, ec) : fs::is_regular_file(*p, ec);
    if (!ok) out.push_back(std::string(what) + " not found: " + p->string());
    return ok;
  };
  auto parses = [&](const std::optional<fs::path>& p, const char* what) {
    if (!must_exist(p, what, false)) return;
    try {
      load_schema(*p);
    } catch (const std::exception& e) {
      out.push_back(std::string(what) + " " + p->string() + " does not load: " + e.what());
    }
  };

  must_exist(cfg.corpus, "corpus directory", true);
  must_exist(cfg.denylist, "denylist", false);
  must_exist(cfg.triples, "triples file", false);
  must_exist(cfg.train_extra, "extra training file", false);
  parses(cfg.refine_schema, "refine schema");
  parses(cfg.axioms, "axioms");
  parses(cfg.reference, "reference");
  if (!cfg.domain) {
    out.push_back("domain ontology not set");
  } else {
    parses(cfg.domain, "domain ontology");
  }

  const auto& r = cfg.refine;
  if (r.low_threshold > r.band_upper) {
    out.push_back("low threshold " + std::to_string(r.low_threshold) + " exceeds band upper " +
                  std::to_string(r.band_upper));
  }
  if (r.low_threshold < 0.0 || r.band_upper > 1.0) out.push_back("refine thresholds must lie in [0,1]");
  if (r.lof_k < 1) out.push_back("lof_k must be >= 1");
  try {
    validate(cfg.train);
  } catch (const Error& e) {
    out.push_back(std::string("training: ") + e.what());
  }
  if (!(cfg.holdout >= 0.0 && cfg.holdout < 1.0)) out.push_back("holdout must lie in [0,1)");
  if (!(cfg.predict_threshold >= 0.0 && cfg.predict_threshold <= 1.0)) out.push_back("threshold must lie in [0,1]");
  if (!(cfg.agreement_threshold >= 0.0 && cfg.agreement_threshold <= 1.0)) {
    out.push_back("agreement_threshold must lie in [0,1]");
  }
  return out;
}

class PhaseError : public Error {
 public:
  PhaseError(std::string phase, const std::string& msg) : Error(phase + ": " + msg), phase_(std::move(phase)) {}
  const std::string& phase() const { return phase_; }

 private:
  std::string phase_;
};

// ---------------------------------------------------------------------------
// Phase building blocks (also used by the individual subcommands)

inline std::set<std::string> read_word_list(const fs::path& file) {
  std::set<std::string> out;
  std::istringstream in(read_file(file));
  std::string line;
  while (std::getline(in, line)) {
    auto t = detail::trim(line);
    if (!t.empty() && t[0] != '#') out.insert(t);
  }
  return out;
}

// Cleans every regular file of `in_dir` (sorted by name) into
// `out_dir/<name>.txt`, one sentence per line.
inline Json clean_corpus(const fs::path& in_dir, const fs::path& out_dir, const CleanConfig& cfg,
                         std::optional<DocFormat> format = std::nullopt) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(in_dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  fs::create_directories(out_dir);

  Json report{{"files", Json::array()}, {"sentences", 0}, {"dropped", 0}};
  std::size_t kept = 0, dropped = 0;
  for (const auto& f : files) {
    RawDocument doc{read_file(f), format.value_or(format_from_extension(f)), f.filename().string()};
    auto cleaned = clean(doc, cfg);
    std::string text;
    for (const auto& s : cleaned.sentences) text += s + "\n";
    write_file(out_dir / (f.filename().string() + ".txt"), text);
    report["files"].push_back({{"file", doc.origin},
                               {"format", std::string(format_name(doc.format))},
                               {"sentences", cleaned.sentences.size()},
                               {"dropped", cleaned.dropped_segments}});
    kept += cleaned.sentences.size();
    dropped += cleaned.dropped_segments;
  }
  report["sentences"] = kept;
  report["dropped"] = dropped;
  return report;
}

// Reference ontology for correction: axioms plus reference facts.
inline OntologySchema load_reference(const std::optional<fs::path>& axioms, const std::optional<fs::path>& facts) {
  OntologySchema ref;
  if (axioms) ref = load_schema(*axioms);
  if (facts) ref.merge(load_schema(*facts));
  return ref;
}

struct HoldoutSplit {
  std::vector<Triple> train;
  std::vector<Triple> test;
};

// Holds out about `fraction` of the non-type triples for evaluation, never
// removing the last training occurrence of an entity or relation, so every
// test triple stays rankable.
inline HoldoutSplit holdout_split(std::vector<Triple> triples, double fraction, std::uint64_t seed) {
  std::sort(triples.begin(), triples.end());
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
  HoldoutSplit out;

  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    if (!is_type_assertion(triples[i])) candidates.push_back(i);
  }
  std::mt19937_64 rng(seed);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  const auto target = static_cast<std::size_t>(fraction * static_cast<double>(candidates.size()));

  std::map<std::string, std::size_t> entity_uses, relation_uses;
  for (const auto& t : triples) {
    ++entity_uses[embedding_key(t.subject)];
    ++entity_uses[embedding_key(t.object)];
    ++relation_uses[embedding_key(t.predicate)];
  }
  std::vector<bool> held(triples.size(), false);
  std::size_t taken = 0;
  for (auto i : candidates) {
    if (taken == target) break;
    const auto& t = triples[i];
    auto h = embedding_key(t.subject), o = embedding_key(t.object), r = embedding_key(t.predicate);
    std::size_t need_h = h == o ? 3 : 2;
    if (entity_uses[h] < need_h || entity_uses[o] < 2 || relation_uses[r] < 2) continue;
    --entity_uses[h];
    --entity_uses[o];
    --relation_uses[r];
    held[i] = true;
    ++taken;
  }
  for (std::size_t i = 0; i < triples.size(); ++i) (held[i] ? out.test : out.train).push_back(triples[i]);
  return out;
}

inline std::string label_of(const Term& t) {
  return t.is_iri() ? std::string(vocab::local_name(t.value)) : t.value;
}

// Re-predicts the object of every existing (s, relation, o) statement and
// compares labels with the asserted one.
inline Json reassignment_agreement(const EmbeddingModel& m, const KnowledgeGraph& kg, const std::string& relation,
                                   double sim_threshold) {
  Json j{{"relation", relation}, {"pairs", 0}, {"agreement", 1.0}, {"disagreements", Json::array()}};
  if (!m.has_relation(relation)) return j;
  const std::size_t r = m.relation(relation);
  std::set<std::size_t> objects;
  std::vector<Triple> existing;
  for (const auto& [t, _] : kg.statements()) {
    if (t.predicate.value != relation) continue;
    existing.push_back(t);
    auto o = m.entity_index.find(embedding_key(t.object));
    if (o != m.entity_index.end()) objects.insert(o->second);
  }
  std::vector<std::string> old_labels, new_labels;
  for (const auto& t : existing) {
    auto s = m.entity_index.find(embedding_key(t.subject));
    if (s == m.entity_index.end()) continue;
    auto scores = tail_scores(m, s->second, r);
    std::optional<std::size_t> best;
    for (auto o : objects) {
      if (o == s->second) continue;
      if (!best || scores[o] > scores[*best]) best = o;
    }
    if (!best) continue;
    old_labels.push_back(label_of(t.object));
    new_labels.push_back(std::string(vocab::local_name(m.entity_names[*best])));
    if (agreement_check({old_labels.back()}, {new_labels.back()}, sim_threshold) < 1.0) {
      j["disagreements"].push_back(
          {{"subject", to_ntriples(t.subject)}, {"old", old_labels.back()}, {"new", new_labels.back()}});
    }
  }
  j["pairs"] = old_labels.size();
  j["agreement"] = agreement_check(old_labels, new_labels, sim_threshold);
  return j;
}

struct CompletionOutcome {
  KnowledgeGraph graph;
  Json report;
  std::optional<EmbeddingModel> model;
};

inline CompletionOutcome complete_graph(const KnowledgeGraph& kg, const std::vector<Triple>& extra,
                                        const TrainConfig& train_cfg, const std::vector<std::string>& relations,
                                        double threshold, std::size_t top_k, double holdout,
                                        double agreement_threshold) {
  CompletionOutcome out;
  out.graph = kg;
  auto triples = training_triples(kg);
  triples.insert(triples.end(), extra.begin(), extra.end());
  Json& rep = out.report;
  rep["predictions"] = Json::array();
  if (triples.empty()) {
    rep["skipped"] = "no training triples";
    rep["training_triples"] = 0;
    return out;
  }

  auto split = holdout_split(triples, holdout, train_cfg.seed);
  auto trained = train(split.train, train_cfg);
  const auto& m = trained.model;

  rep["training_triples"] = split.train.size();
  rep["heldout_triples"] = split.test.size();
  rep["entities"] = m.num_entities();
  rep["relations"] = m.num_relations();
  rep["loss_history"] = trained.epoch_loss;
  rep["batch_loss_history"] = trained.batch_loss;
  rep["skipped_negatives"] = trained.skipped_negatives;
  std::vector<Triple> known = split.train;
  known.insert(known.end(), split.test.begin(), split.test.end());
  rep["metrics"] = to_json(evaluate(m, split.test, known));

  auto predicted = predict_missing(m, kg, relations, threshold, top_k);
  for (const auto& st : predicted) {
    out.graph.add(st);
    rep["predictions"].push_back(scored_entry(st));
  }
  rep["predicted"] = predicted.size();
  rep["agreement"] = Json::array();
  for (const auto& r : relations) rep["agreement"].push_back(reassignment_agreement(m, kg, r, agreement_threshold));
  out.model = std::move(trained.model);
  return out;
}

// ---------------------------------------------------------------------------
// Whole run

struct PipelineResult {
  KnowledgeGraph ontology;
  Json manifest;
  Json timing;
};

// clean -> ingest -> refine -> correct -> complete -> map. Artifacts land in
// cfg.output; every phase writes reports/<phase>.json. manifest.json holds
// only reproducible content; wall times go to timing.json.
inline PipelineResult run(const PipelineConfig& cfg) {
  using Clock = std::chrono::steady_clock;
  const fs::path out_dir = cfg.output;
  const fs::path reports = out_dir / "reports";
  PipelineResult result;
  Json phases = Json::array();
  Json timing = Json::object();

  auto phase = [&](const std::string& name, auto&& body) {
    auto t0 = Clock::now();
    Json counts;
    try {
      counts = body();
    } catch (const PhaseError&) {
      throw;
    } catch (const std::exception& e) {
      throw PhaseError(name, e.what());
    }
    timing[name] = std::chrono::duration<double>(Clock::now() - t0).count();
    counts["phase"] = name;
    phases.push_back(counts);
  };
  auto write_report = [&](const std::string& name, const Json& j) {
    write_file(reports / (name + ".json"), j.dump(2) + "\n");
  };

  fs::create_directories(reports);

  phase("clean", [&] {
    Json rep{{"files", Json::array()}, {"sentences", 0}, {"dropped", 0}};
    if (cfg.corpus) {
      CleanConfig cc = cfg.clean;
      if (cfg.denylist) cc.denylist = read_word_list(*cfg.denylist);
      rep = clean_corpus(*cfg.corpus, out_dir / "cleaned", cc, cfg.corpus_format);
    } else {
      fs::create_directories(out_dir / "cleaned");
    }
    write_report("clean", rep);
    return Json{{"files", rep["files"].size()}, {"sentences", rep["sentences"]}, {"dropped", rep["dropped"]}};
  });

  KnowledgeGraph raw;
  phase("ingest", [&] {
    Json rep{{"diagnostics", Json::array()}};
    if (cfg.triples) {
      auto loaded = load_graph(*cfg.triples);
      raw = std::move(loaded.graph);
      for (const auto& d : loaded.diagnostics) rep["diagnostics"].push_back({{"line", d.line}, {"message", d.message}});
      rep["source"] = cfg.triples->filename().string();
    }
    rep["triples"] = raw.size();
    write_graph(out_dir / "kg-raw.nt", raw);
    write_report("ingest", rep);
    return Json{{"output", raw.size()}, {"diagnostics", rep["diagnostics"].size()}};
  });

  KnowledgeGraph refined;
  phase("refine", [&] {
    OntologySchema schema;
    if (cfg.refine_schema) {
      schema = load_schema(*cfg.refine_schema);
    } else if (cfg.axioms) {
      schema = load_schema(*cfg.axioms);
    }
    auto r = refine(raw, schema, cfg.refine);
    refined = std::move(r.graph);
    write_graph(out_dir / "kg-refined.nt", refined);
    write_report("refine", to_json(r.report));
    return Json{{"input", r.report.input},
                {"output", refined.size()},
                {"removed_by_threshold", r.report.removed_by_threshold.size()},
                {"removed_by_lof", r.report.removed_by_lof.size()},
                {"removed_implausible", r.report.removed_implausible.size()},
                {"removed_disconnected", r.report.removed_disconnected.size()}};
  });

  KnowledgeGraph corrected;
  phase("correct", [&] {
    auto reference = load_reference(cfg.axioms, cfg.reference);
    CorrectionConfig cc = cfg.correct;
    cc.functional.insert(reference.functional_properties().begin(), reference.functional_properties().end());
    auto r = correct(refined, reference, cc);
    corrected = std::move(r.graph);
    write_graph(out_dir / "kg-corrected.nt", corrected);
    write_report("correct", to_json(r.report));
    return Json{{"input", refined.size()},
                {"output", corrected.size()},
                {"violations", r.report.violations.size()},
                {"deleted", r.report.deleted.size()},
                {"replaced", r.report.replaced.size()}};
  });

  KnowledgeGraph completed;
  phase("complete", [&] {
    std::vector<Triple> extra;
    if (cfg.train_extra) extra = parse_tsv_triples(read_file(*cfg.train_extra));
    TrainConfig tc = cfg.train;
    tc.seed = cfg.seed;
    auto c = complete_graph(corrected, extra, tc, cfg.predict_relations, cfg.predict_threshold, cfg.predict_top_k,
                            cfg.holdout, cfg.agreement_threshold);
    completed = std::move(c.graph);
    if (c.model) write_file(out_dir / "model.ogcx", save_model(*c.model));
    write_graph(out_dir / "kg-completed.nt", completed);
    write_report("complete", c.report);
    return Json{{"input", corrected.size()}, {"output", completed.size()}, {"predicted", c.report.value("predicted", 0)}};
  });

  phase("map", [&] {
    OntologySchema on;
    if (cfg.domain) on = load_schema(*cfg.domain);
    auto m = map_to_domain(completed, on);
    result.ontology = std::move(m.graph);
    write_graph(out_dir / "ontology.nt", result.ontology);
    write_file(out_dir / "ontology.dot", export_dot(result.ontology));
    write_report("map", to_json(m.report));
    return Json{{"input", completed.size()}, {"output", result.ontology.size()}, {"epsilon", m.report.epsilon_total}};
  });

  result.manifest = Json{{"config_hash", config_hash(cfg)},
                         {"seed", cfg.seed},
                         {"phases", phases},
                         {"artifacts",
                          {"cleaned/", "kg-raw.nt", "kg-refined.nt", "kg-corrected.nt", "kg-completed.nt",
                           "ontology.nt", "ontology.dot"}}};
  result.timing = timing;
  write_file(out_dir / "manifest.json", result.manifest.dump(2) + "\n");
  write_file(out_dir / "timing.json", timing.dump(2) + "\n");
  return result;
}

}  // namespace ontogen
