#pragma once

#include <array>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "ontogen/error.hpp"
#include "ontogen/knowledge_graph.hpp"
#include "ontogen/lof.hpp"
#include "ontogen/ontology_schema.hpp"

namespace ontogen {

struct RefineConfig {
  double low_threshold = 0.3;
  double band_upper = 0.5;
  std::size_t lof_k = 5;
  double lof_threshold = 1.5;
  std::size_t min_combo_support = 2;
  // A rare combination is only implausible next to a combination of the same
  // predicate seen at least this often.
  std::size_t dominant_combo_support = 10;
  bool prune_disconnected = true;
  // Upper bound on kept triples sampled as LOF context for the band.
  std::size_t context_pool = 500;
  unsigned workers = 1;
};

inline void validate(const RefineConfig& cfg) {
  if (!(cfg.low_threshold >= 0.0 && cfg.low_threshold <= cfg.band_upper && cfg.band_upper <= 1.0)) {
    throw Error("refine thresholds must satisfy 0 <= low <= high <= 1");
  }
  if (cfg.lof_k < 1) throw Error("lof-k must be >= 1");
}

// ---------------------------------------------------------------------------
// Confidence thresholding

struct ThresholdResult {
  KnowledgeGraph kept;                // confidence > band_upper
  std::vector<ScoredTriple> removed;  // confidence < low_threshold
  std::vector<ScoredTriple> band;     // low_threshold <= confidence <= band_upper
};

inline ThresholdResult threshold_filter(const KnowledgeGraph& kg, const RefineConfig& cfg) {
  ThresholdResult out;
  for (const auto& st : kg.scored()) {
    if (st.confidence < cfg.low_threshold) {
      out.removed.push_back(st);
    } else if (st.confidence <= cfg.band_upper) {
      out.band.push_back(st);
    } else {
      out.kept.add(st);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Features for LOF

struct TripleFeatures {
  double confidence = 0.0;
  double subject_degree = 0.0;
  double object_degree = 0.0;
  double predicate_frequency = 0.0;
  double type_combo_frequency = 0.0;

  Point as_point() const {
    return {confidence, subject_degree, object_degree, predicate_frequency, type_combo_frequency};
  }
};

using TypeCombo = std::tuple<std::string, std::string, std::string>;

namespace detail {

inline const std::string kUntyped = "(untyped)";
inline const std::string kLiteralClass = "(literal)";

// Smallest directly asserted class of a node, or a placeholder.
inline std::string primary_class(const Term& node, const std::map<Term, std::set<std::string>>& classes) {
  if (node.is_literal()) return kLiteralClass;
  auto it = classes.find(node);
  if (it == classes.end() || it->second.empty()) return kUntyped;
  return *it->second.begin();
}

inline TypeCombo combo_of(const Triple& t, const std::map<Term, std::set<std::string>>& classes) {
  return {primary_class(t.subject, classes), t.predicate.value, primary_class(t.object, classes)};
}

}  // namespace detail

// Statistics of the graph that features are measured against.
class FeatureContext {
 public:
  explicit FeatureContext(const KnowledgeGraph& graph) : classes_(graph.class_assertions()) {
    for (const auto& [t, _] : graph.statements()) {
      ++degree_[t.subject];
      ++degree_[t.object];
      ++predicate_[t.predicate.value];
      ++combo_[detail::combo_of(t, classes_)];
    }
  }

  TripleFeatures features(const ScoredTriple& st) const {
    auto log_count = [](const auto& map, const auto& key) {
      auto it = map.find(key);
      return std::log1p(static_cast<double>(it == map.end() ? 0 : it->second));
    };
    TripleFeatures f;
    f.confidence = st.confidence;
    f.subject_degree = log_count(degree_, st.triple.subject);
    f.object_degree = log_count(degree_, st.triple.object);
    f.predicate_frequency = log_count(predicate_, st.triple.predicate.value);
    f.type_combo_frequency = log_count(combo_, detail::combo_of(st.triple, classes_));
    return f;
  }

 private:
  std::map<Term, std::set<std::string>> classes_;
  std::map<Term, std::size_t> degree_;
  std::map<std::string, std::size_t> predicate_;
  std::map<TypeCombo, std::size_t> combo_;
};

// Per-dimension min-max scaling to [0,1]; constant dimensions become 0.
inline void min_max_normalize(std::vector<Point>& points) {
  if (points.empty()) return;
  const std::size_t dim = points.front().size();
  for (std::size_t d = 0; d < dim; ++d) {
    double lo = points.front()[d], hi = lo;
    for (const auto& p : points) {
      lo = std::min(lo, p[d]);
      hi = std::max(hi, p[d]);
    }
    double span = hi - lo;
    for (auto& p : points) p[d] = span > 0.0 ? (p[d] - lo) / span : 0.0;
  }
}

// ---------------------------------------------------------------------------
// Band validation

struct ScoredRemoval {
  ScoredTriple triple;
  double score = 0.0;
};

struct BandResult {
  std::vector<ScoredTriple> kept;
  std::vector<ScoredRemoval> removed;
  std::vector<std::string> warnings;
};

// `kg` is the post-threshold graph (kept plus band). Band triples are scored
// by LOF among themselves plus an evenly spaced sample of the kept
// population; scores above lof_threshold are removed.
inline BandResult validate_band(const std::vector<ScoredTriple>& band, const KnowledgeGraph& kg,
                                const RefineConfig& cfg) {
  BandResult out;
  if (band.empty()) return out;
  if (band.size() <= cfg.lof_k) {
    out.kept = band;
    out.warnings.push_back("band has " + std::to_string(band.size()) +
                           " triples, not more than lof-k; LOF skipped and band kept");
    return out;
  }

  std::set<Triple> in_band;
  for (const auto& st : band) in_band.insert(st.triple);
  std::vector<ScoredTriple> context;
  for (const auto& st : kg.scored()) {
    if (!in_band.count(st.triple) && st.confidence > cfg.band_upper) context.push_back(st);
  }
  if (context.size() > cfg.context_pool && cfg.context_pool > 0) {
    std::vector<ScoredTriple> sample;
    sample.reserve(cfg.context_pool);
    for (std::size_t i = 0; i < cfg.context_pool; ++i) {
      sample.push_back(context[i * context.size() / cfg.context_pool]);
    }
    context = std::move(sample);
  }

  FeatureContext features(kg);
  std::vector<Point> points;
  points.reserve(band.size() + context.size());
  for (const auto& st : band) points.push_back(features.features(st).as_point());
  for (const auto& st : context) points.push_back(features.features(st).as_point());
  min_max_normalize(points);

  auto scores = lof_scores(points, cfg.lof_k, cfg.workers);
  for (std::size_t i = 0; i < band.size(); ++i) {
    if (scores[i] > cfg.lof_threshold) {
      out.removed.push_back({band[i], scores[i]});
    } else {
      out.kept.push_back(band[i]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Implausible links

struct FlaggedLink {
  ScoredTriple triple;
  TypeCombo combo;
  std::size_t combo_count = 0;
  std::size_t dominant_count = 0;
};

// Counts (subject class, predicate, object class) combinations over data
// statements. A triple is flagged when its combination occurs fewer than
// min_combo_support times while another combination of the same predicate
// occurs at least dominant_combo_support times. Classes come from the graph's
// type assertions, falling back to type facts in `schema`.
inline std::vector<FlaggedLink> implausible_links(const KnowledgeGraph& kg, const OntologySchema& schema,
                                                  const RefineConfig& cfg) {
  auto classes = kg.class_assertions();
  std::map<Term, std::set<std::string>> fallback;
  for (const auto& [t, _] : schema.facts()) {
    if (is_type_assertion(t) && !vocab::is_meta_class(t.object.value) && !classes.count(t.subject)) {
      fallback[t.subject].insert(t.object.value);
    }
  }
  classes.merge(fallback);

  auto data = kg.data_statements();
  std::map<TypeCombo, std::size_t> counts;
  std::map<std::string, std::size_t> best_for_predicate;
  for (const auto& st : data) ++counts[detail::combo_of(st.triple, classes)];
  for (const auto& [combo, n] : counts) {
    auto& best = best_for_predicate[std::get<1>(combo)];
    best = std::max(best, n);
  }

  std::vector<FlaggedLink> out;
  for (const auto& st : data) {
    auto combo = detail::combo_of(st.triple, classes);
    std::size_t n = counts[combo];
    if (n >= cfg.min_combo_support) continue;
    // The dominant combination is necessarily a different one: n is rare.
    std::size_t dominant = best_for_predicate[std::get<1>(combo)];
    if (dominant >= cfg.dominant_combo_support && dominant != n) {
      out.push_back({st, combo, n, dominant});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Disconnected nodes

struct PruneResult {
  KnowledgeGraph graph;
  std::vector<Term> removed_nodes;
  std::vector<ScoredTriple> removed_triples;
};

// Keeps only the largest connected component (ties: the one holding the
// smallest term) and drops every statement touching another component.
inline PruneResult prune_disconnected(const KnowledgeGraph& kg) {
  PruneResult out;
  auto components = connected_components(kg);
  if (components.size() <= 1) {
    out.graph = kg;
    return out;
  }
  std::set<Term> main(components.front().begin(), components.front().end());
  for (std::size_t i = 1; i < components.size(); ++i) {
    out.removed_nodes.insert(out.removed_nodes.end(), components[i].begin(), components[i].end());
  }
  std::sort(out.removed_nodes.begin(), out.removed_nodes.end());
  for (const auto& st : kg.scored()) {
    if (main.count(st.triple.subject)) {
      out.graph.add(st);
    } else {
      out.removed_triples.push_back(st);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Whole phase

struct RefinementReport {
  std::vector<ScoredTriple> removed_by_threshold;
  std::vector<ScoredRemoval> removed_by_lof;
  std::vector<FlaggedLink> removed_implausible;
  std::vector<ScoredTriple> removed_disconnected;
  std::vector<Term> disconnected_nodes;
  std::vector<std::string> warnings;
  std::size_t band_size = 0;
  std::size_t input = 0;
  std::size_t kept = 0;
};

struct RefineResult {
  KnowledgeGraph graph;
  RefinementReport report;
};

// threshold -> LOF on the band -> implausible links -> disconnected pruning.
inline RefineResult refine(const KnowledgeGraph& kg, const OntologySchema& schema, const RefineConfig& cfg) {
  validate(cfg);
  RefineResult out;
  auto& rep = out.report;
  rep.input = kg.size();

  auto th = threshold_filter(kg, cfg);
  rep.removed_by_threshold = std::move(th.removed);
  rep.band_size = th.band.size();

  KnowledgeGraph post_threshold = th.kept;
  for (const auto& st : th.band) post_threshold.add(st);

  auto band = validate_band(th.band, post_threshold, cfg);
  rep.removed_by_lof = std::move(band.removed);
  rep.warnings = std::move(band.warnings);

  KnowledgeGraph graph = std::move(th.kept);
  for (const auto& st : band.kept) graph.add(st);

  rep.removed_implausible = implausible_links(graph, schema, cfg);
  for (const auto& f : rep.removed_implausible) graph.erase(f.triple.triple);

  if (cfg.prune_disconnected) {
    auto pruned = prune_disconnected(graph);
    graph = std::move(pruned.graph);
    rep.removed_disconnected = std::move(pruned.removed_triples);
    rep.disconnected_nodes = std::move(pruned.removed_nodes);
  }
  rep.kept = graph.size();
  out.graph = std::move(graph);
  return out;
}

}  // namespace ontogen
