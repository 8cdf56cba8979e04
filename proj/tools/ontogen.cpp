#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ontogen/ontogen.hpp"

namespace fs = std::filesystem;
using namespace ontogen;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kPhaseFailed = 2;

void write_json(const fs::path& path, const Json& j) { write_file(path, j.dump(2) + "\n"); }

std::vector<std::string> read_list(const std::string& file) {
  auto words = read_word_list(file);
  return {words.begin(), words.end()};
}

KnowledgeGraph load_or_throw(const fs::path& path, Json* diagnostics = nullptr) {
  auto loaded = load_graph(path);
  for (const auto& d : loaded.diagnostics) {
    std::cerr << path.string() << ":" << d.line << ": " << d.message << "\n";
    if (diagnostics) diagnostics->push_back({{"line", d.line}, {"message", d.message}});
  }
  return std::move(loaded.graph);
}

struct CleanArgs {
  std::string in, out, format, denylist, report;
  std::size_t min_words = CleanConfig{}.min_words;
};

struct RefineArgs {
  std::string in, schema, out, report;
  RefineConfig cfg;
};

struct CorrectArgs {
  std::string in, axioms, reference, functional, out, report;
  double sim_threshold = 1.0;
};

struct CompleteArgs {
  std::string in, train_extra, predict_relations, out, metrics, model;
  TrainConfig cfg;
  double threshold = 0.5;
  std::size_t top_k = 1;
  double holdout = 0.1;
  double agreement = 0.8;
  std::string loss = "logistic";
};

struct MapArgs {
  std::string in, domain, out, report, dot;
};

struct RunArgs {
  std::string config, output;
  std::vector<std::string> overrides;
  bool validate_only = false;
};

int do_clean(const CleanArgs& a) {
  CleanConfig cfg;
  cfg.min_words = a.min_words;
  if (!a.denylist.empty()) cfg.denylist = read_word_list(a.denylist);
  std::optional<DocFormat> format;
  if (!a.format.empty()) format = parse_format(a.format);
  auto summary = clean_corpus(a.in, a.out, cfg, format);
  write_json(a.report.empty() ? fs::path(a.out) / "summary.json" : fs::path(a.report), summary);
  std::cout << "kept " << summary["sentences"] << " sentences, dropped " << summary["dropped"] << "\n";
  return kOk;
}

int do_ingest(const std::string& in, const std::string& out, const std::string& report) {
  Json diags = Json::array();
  auto kg = load_or_throw(in, &diags);
  write_graph(out, kg);
  if (!report.empty()) write_json(report, {{"source", in}, {"triples", kg.size()}, {"diagnostics", diags}});
  std::cout << kg.size() << " triples\n";
  return kOk;
}

int do_refine(const RefineArgs& a) {
  auto kg = load_or_throw(a.in);
  OntologySchema schema;
  if (!a.schema.empty()) schema = load_schema(a.schema);
  auto r = refine(kg, schema, a.cfg);
  write_graph(a.out, r.graph);
  if (!a.report.empty()) write_json(a.report, to_json(r.report));
  std::cout << r.report.input << " -> " << r.report.kept << " triples\n";
  return kOk;
}

int do_correct(const CorrectArgs& a) {
  auto kg = load_or_throw(a.in);
  std::optional<fs::path> axioms, facts;
  if (!a.axioms.empty()) axioms = a.axioms;
  if (!a.reference.empty()) facts = a.reference;
  auto reference = load_reference(axioms, facts);
  CorrectionConfig cfg;
  cfg.sim_threshold = a.sim_threshold;
  cfg.functional = reference.functional_properties();
  if (!a.functional.empty()) {
    for (const auto& p : read_list(a.functional)) cfg.functional.insert(p);
  }
  auto r = correct(kg, reference, cfg);
  write_graph(a.out, r.graph);
  if (!a.report.empty()) write_json(a.report, to_json(r.report));
  std::cout << r.report.violations.size() << " violations, " << r.report.deleted.size() << " deleted, "
            << r.report.replaced.size() << " replaced\n";
  return kOk;
}

int do_complete(CompleteArgs a) {
  if (a.loss == "margin") {
    a.cfg.loss = LossKind::kMarginRanking;
  } else if (a.loss != "logistic") {
    throw Error("loss must be logistic or margin");
  }
  auto kg = load_or_throw(a.in);
  std::vector<Triple> extra;
  if (!a.train_extra.empty()) extra = parse_tsv_triples(read_file(a.train_extra));
  std::vector<std::string> relations;
  if (!a.predict_relations.empty()) relations = read_list(a.predict_relations);
  auto c = complete_graph(kg, extra, a.cfg, relations, a.threshold, a.top_k, a.holdout, a.agreement);
  write_graph(a.out, c.graph);
  if (!a.metrics.empty()) write_json(a.metrics, c.report);
  if (!a.model.empty() && c.model) write_file(a.model, save_model(*c.model));
  std::cout << kg.size() << " -> " << c.graph.size() << " triples";
  if (c.report.contains("metrics")) std::cout << ", " << c.report["metrics"].dump();
  std::cout << "\n";
  return kOk;
}

int do_map(const MapArgs& a) {
  auto kg = load_or_throw(a.in);
  auto on = load_schema(a.domain);
  auto m = map_to_domain(kg, on);
  write_graph(a.out, m.graph);
  if (!a.report.empty()) write_json(a.report, to_json(m.report));
  if (!a.dot.empty()) write_file(a.dot, export_dot(m.graph));
  std::cout << "epsilon " << m.report.epsilon_total << ", retained " << m.report.retained << " of "
            << m.report.input << "\n";
  return kOk;
}

int do_run(const RunArgs& a) {
  PipelineConfig cfg;
  try {
    cfg = load_config(a.config);
    for (const auto& kv : a.overrides) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw Error("--set expects key=value, got '" + kv + "'");
      apply_setting(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (!a.output.empty()) cfg.output = a.output;
  } catch (const Error& e) {
    std::cerr << "config: " << e.what() << "\n";
    return kInvalid;
  }
  auto problems = validate(cfg);
  for (const auto& p : problems) std::cerr << "invalid: " << p << "\n";
  if (!problems.empty()) return kInvalid;
  if (a.validate_only) {
    std::cout << "config ok\n";
    return kOk;
  }
  try {
    auto result = run(cfg);
    for (const auto& p : result.manifest["phases"]) std::cout << p.dump() << "\n";
    std::cout << "ontology: " << result.ontology.size() << " triples in " << cfg.output.string() << "\n";
  } catch (const PhaseError& e) {
    std::cerr << "phase failed: " << e.what() << "\n";
    return kPhaseFailed;
  }
  return kOk;
}

int do_report(const std::string& dir) {
  auto manifest = Json::parse(read_file(fs::path(dir) / "manifest.json"));
  std::cout << "config " << manifest["config_hash"].get<std::string>() << ", seed " << manifest["seed"] << "\n";
  for (const auto& p : manifest["phases"]) {
    std::cout << "  " << p["phase"].get<std::string>();
    for (const auto& [k, v] : p.items()) {
      if (k != "phase") std::cout << "  " << k << "=" << v.dump();
    }
    std::cout << "\n";
  }
  auto timing = fs::path(dir) / "timing.json";
  if (fs::exists(timing)) {
    auto t = Json::parse(read_file(timing));
    double total = 0.0;
    for (const auto& [_, v] : t.items()) total += v.get<double>();
    std::cout << "wall time " << total << " s\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ontology generation pipeline: clean, ingest, refine, correct, complete, map"};
  app.require_subcommand(1);

  CleanArgs clean_args;
  auto* clean_cmd = app.add_subcommand("clean", "extract sentences from HTML/RSS/XML/plain documents");
  clean_cmd->add_option("--in", clean_args.in, "input directory")->required();
  clean_cmd->add_option("--out", clean_args.out, "output directory")->required();
  clean_cmd->add_option("--format", clean_args.format, "html|rss|xml|plain (default: by extension)");
  clean_cmd->add_option("--denylist", clean_args.denylist, "ad/boilerplate words, one per line");
  clean_cmd->add_option("--min-words", clean_args.min_words, "minimum tokens per sentence");
  clean_cmd->add_option("--report", clean_args.report, "summary JSON (default: <out>/summary.json)");

  std::string ingest_in, ingest_out, ingest_report;
  auto* ingest_cmd = app.add_subcommand("ingest", "load scored triples (.jsonl/.nt/.ttl) into a graph");
  ingest_cmd->add_option("--in", ingest_in)->required();
  ingest_cmd->add_option("--out", ingest_out)->required();
  ingest_cmd->add_option("--report", ingest_report);

  RefineArgs refine_args;
  auto* refine_cmd = app.add_subcommand("refine", "threshold, LOF, implausible links, disconnected nodes");
  refine_cmd->add_option("--in", refine_args.in)->required();
  refine_cmd->add_option("--schema", refine_args.schema);
  refine_cmd->add_option("--out", refine_args.out)->required();
  refine_cmd->add_option("--report", refine_args.report);
  refine_cmd->add_option("--low", refine_args.cfg.low_threshold);
  refine_cmd->add_option("--high", refine_args.cfg.band_upper);
  refine_cmd->add_option("--lof-k", refine_args.cfg.lof_k);
  refine_cmd->add_option("--lof-threshold", refine_args.cfg.lof_threshold);
  refine_cmd->add_option("--workers", refine_args.cfg.workers);
  refine_cmd->add_flag("!--keep-disconnected", refine_args.cfg.prune_disconnected);

  CorrectArgs correct_args;
  auto* correct_cmd = app.add_subcommand("correct", "fix disjointness violations and reference conflicts");
  correct_cmd->add_option("--in", correct_args.in)->required();
  correct_cmd->add_option("--axioms", correct_args.axioms);
  correct_cmd->add_option("--reference", correct_args.reference);
  correct_cmd->add_option("--functional", correct_args.functional, "functional properties, one per line");
  correct_cmd->add_option("--sim-threshold", correct_args.sim_threshold);
  correct_cmd->add_option("--out", correct_args.out)->required();
  correct_cmd->add_option("--report", correct_args.report);

  CompleteArgs complete_args;
  auto* complete_cmd = app.add_subcommand("complete", "train ComplEx embeddings and predict missing triples");
  complete_cmd->add_option("--in", complete_args.in)->required();
  complete_cmd->add_option("--train-extra", complete_args.train_extra, "extra 3-column training triples");
  complete_cmd->add_option("--dim", complete_args.cfg.dimension);
  complete_cmd->add_option("--epochs", complete_args.cfg.epochs);
  complete_cmd->add_option("--batch-size", complete_args.cfg.batch_size);
  complete_cmd->add_option("--learning-rate", complete_args.cfg.learning_rate);
  complete_cmd->add_option("--l2", complete_args.cfg.l2_lambda);
  complete_cmd->add_option("--negatives", complete_args.cfg.negatives);
  complete_cmd->add_option("--seed", complete_args.cfg.seed);
  complete_cmd->add_option("--threads", complete_args.cfg.threads);
  complete_cmd->add_option("--loss", complete_args.loss, "logistic|margin");
  complete_cmd->add_flag("--real-relations", complete_args.cfg.real_relations, "DistMult control");
  complete_cmd->add_option("--predict-relations", complete_args.predict_relations, "relations, one per line");
  complete_cmd->add_option("--threshold", complete_args.threshold);
  complete_cmd->add_option("--top-k", complete_args.top_k);
  complete_cmd->add_option("--holdout", complete_args.holdout);
  complete_cmd->add_option("--agreement-threshold", complete_args.agreement);
  complete_cmd->add_option("--out", complete_args.out)->required();
  complete_cmd->add_option("--metrics", complete_args.metrics);
  complete_cmd->add_option("--model", complete_args.model, "write the trained model here");

  MapArgs map_args;
  auto* map_cmd = app.add_subcommand("map", "trim the graph to a domain ontology");
  map_cmd->add_option("--in", map_args.in)->required();
  map_cmd->add_option("--domain", map_args.domain)->required();
  map_cmd->add_option("--out", map_args.out)->required();
  map_cmd->add_option("--report", map_args.report);
  map_cmd->add_option("--dot", map_args.dot, "also write the ontology as a Graphviz digraph");

  RunArgs run_args;
  auto* run_cmd = app.add_subcommand("run", "run every phase from a key=value config file");
  run_cmd->add_option("--config", run_args.config)->required();
  run_cmd->add_option("--output", run_args.output, "override the output directory");
  run_cmd->add_option("--set", run_args.overrides, "override a config value (key=value)");
  run_cmd->add_flag("--validate-only", run_args.validate_only);

  std::string report_dir;
  auto* report_cmd = app.add_subcommand("report", "summarize a finished run");
  report_cmd->add_option("--run", report_dir, "run output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInvalid;
  }

  try {
    if (*clean_cmd) return do_clean(clean_args);
    if (*ingest_cmd) return do_ingest(ingest_in, ingest_out, ingest_report);
    if (*refine_cmd) return do_refine(refine_args);
    if (*correct_cmd) return do_correct(correct_args);
    if (*complete_cmd) return do_complete(complete_args);
    if (*map_cmd) return do_map(map_args);
    if (*run_cmd) return do_run(run_args);
    if (*report_cmd) return do_report(report_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPhaseFailed;
  }
  return kOk;
}
