#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "ontogen/complex_model.hpp"
#include "ontogen/error.hpp"
#include "ontogen/knowledge_graph.hpp"
#include "ontogen/similarity.hpp"

namespace ontogen {

enum class LossKind { kLogistic, kMarginRanking };

struct TrainConfig {
  std::size_t dimension = 50;
  std::size_t epochs = 200;
  std::size_t batch_size = 128;
  double learning_rate = 0.05;
  double l2_lambda = 1e-3;
  std::size_t negatives = 5;
  std::uint64_t seed = 42;
  double init_sigma = 0.1;
  LossKind loss = LossKind::kLogistic;
  double margin = 1.0;
  // Imaginary relation parts pinned at zero: the symmetric DistMult control.
  bool real_relations = false;
  unsigned threads = 1;
};

inline void validate(const TrainConfig& cfg) {
  if (cfg.dimension == 0) throw Error("dimension must be positive");
  if (cfg.epochs == 0) throw Error("epochs must be positive");
  if (cfg.batch_size == 0) throw Error("batch size must be positive");
  if (cfg.negatives == 0) throw Error("negatives per positive must be positive");
  if (!(cfg.learning_rate > 0.0) || !std::isfinite(cfg.learning_rate)) throw Error("learning rate must be positive");
  if (!(cfg.l2_lambda >= 0.0) || !std::isfinite(cfg.l2_lambda)) throw Error("l2 lambda must be >= 0");
  if (!(cfg.init_sigma > 0.0)) throw Error("init sigma must be positive");
  if (!(cfg.margin > 0.0)) throw Error("margin must be positive");
  if (cfg.threads == 0) throw Error("threads must be positive");
}

// Triples an embedding is trained on: data statements and class
// assertions with a non-literal object.
inline std::vector<Triple> training_triples(const KnowledgeGraph& kg) {
  std::vector<Triple> out;
  for (const auto& [t, _] : kg.statements()) {
    if (t.object.is_literal()) continue;
    if (is_schema_triple(t) && !is_type_assertion(t)) continue;
    out.push_back(t);
  }
  return out;
}

struct TrainResult {
  EmbeddingModel model;
  // Objective per example after each epoch, measured on the training
  // positives plus a negative set drawn once before training.
  std::vector<double> epoch_loss;
  // Mean loss per example over each epoch's sampled batches.
  std::vector<double> batch_loss;
  std::size_t skipped_negatives = 0;
};

namespace detail {

struct IndexedTriple {
  std::size_t h, r, t;
  friend bool operator==(const IndexedTriple&, const IndexedTriple&) = default;
};

struct IndexedTripleHash {
  std::size_t operator()(const IndexedTriple& x) const {
    std::uint64_t k = x.h * 0x9E3779B97F4A7C15ULL;
    k ^= x.r + 0x632BE59BD9B4E019ULL + (k << 6) + (k >> 2);
    k ^= x.t + 0x85EBCA77C2B2AE63ULL + (k << 6) + (k >> 2);
    return static_cast<std::size_t>(k);
  }
};

using KnownSet = std::unordered_set<IndexedTriple, IndexedTripleHash>;

inline IndexedTriple index_of(const EmbeddingModel& m, const Triple& t) {
  return {m.entity(embedding_key(t.subject)), m.relation(embedding_key(t.predicate)),
          m.entity(embedding_key(t.object))};
}

class Adagrad {
 public:
  Adagrad(const EmbeddingModel& m, double lr)
      : lr_(lr),
        ent_re_(m.entity_re.size(), 0.0),
        ent_im_(m.entity_im.size(), 0.0),
        rel_re_(m.relation_re.size(), 0.0),
        rel_im_(m.relation_im.size(), 0.0) {}

  void apply(EmbeddingModel& m, const Gradients& g) {
    const std::size_t d = m.dim;
    for (const auto& [k, row] : g.entity) {
      step(&m.entity_re[k * d], &ent_re_[k * d], &row[0], d);
      step(&m.entity_im[k * d], &ent_im_[k * d], &row[d], d);
    }
    for (const auto& [k, row] : g.relation) {
      step(&m.relation_re[k * d], &rel_re_[k * d], &row[0], d);
      step(&m.relation_im[k * d], &rel_im_[k * d], &row[d], d);
    }
  }

 private:
  void step(double* p, double* acc, const double* g, std::size_t d) const {
    for (std::size_t i = 0; i < d; ++i) {
      if (g[i] == 0.0) continue;
      acc[i] += g[i] * g[i];
      p[i] -= lr_ * g[i] / (std::sqrt(acc[i]) + 1e-10);
    }
  }

  double lr_;
  std::vector<double> ent_re_, ent_im_, rel_re_, rel_im_;
};

inline double squared_norms(const EmbeddingModel& m, const LabeledTriple& x) {
  const std::size_t d = m.dim;
  double s = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    s += m.entity_re[x.head * d + i] * m.entity_re[x.head * d + i] +
         m.entity_im[x.head * d + i] * m.entity_im[x.head * d + i];
    s += m.relation_re[x.relation * d + i] * m.relation_re[x.relation * d + i] +
         m.relation_im[x.relation * d + i] * m.relation_im[x.relation * d + i];
    s += m.entity_re[x.tail * d + i] * m.entity_re[x.tail * d + i] +
         m.entity_im[x.tail * d + i] * m.entity_im[x.tail * d + i];
  }
  return s;
}

// Training objective per example over the positives and a fixed set of
// (positive, negative) pairs, in the form of the configured loss.
inline double monitor_objective(const EmbeddingModel& m, const std::vector<IndexedTriple>& positives,
                                const std::vector<RankingPair>& pairs, const TrainConfig& cfg) {
  double total = 0.0;
  auto term = [&](const LabeledTriple& x) {
    return softplus(-x.label * score(m, x.head, x.relation, x.tail)) + cfg.l2_lambda * squared_norms(m, x);
  };
  if (cfg.loss == LossKind::kLogistic) {
    for (const auto& p : positives) total += term({p.h, p.r, p.t, 1.0});
    for (const auto& [_, neg] : pairs) total += term(neg);
    std::size_t n = positives.size() + pairs.size();
    return n ? total / static_cast<double>(n) : 0.0;
  }
  for (const auto& [pos, neg] : pairs) {
    double v = cfg.margin - score(m, pos.head, pos.relation, pos.tail) + score(m, neg.head, neg.relation, neg.tail);
    total += std::max(0.0, v) + cfg.l2_lambda * (squared_norms(m, pos) + squared_norms(m, neg));
  }
  return pairs.empty() ? 0.0 : total / static_cast<double>(pairs.size());
}

// Splits `n` items into `parts` contiguous chunks, evaluates `fn(begin, end)`
// on each (in threads when parts > 1) and merges the results in chunk order.
template <typename Fn>
LossAndGradient chunked(std::size_t n, unsigned parts, Fn fn) {
  if (parts <= 1 || n < 2 * parts) return fn(0, n);
  std::vector<LossAndGradient> results(parts);
  std::vector<std::thread> pool;
  std::size_t chunk = (n + parts - 1) / parts;
  for (unsigned p = 0; p < parts; ++p) {
    std::size_t b = std::min(n, p * chunk), e = std::min(n, b + chunk);
    pool.emplace_back([&, p, b, e] { results[p] = fn(b, e); });
  }
  for (auto& t : pool) t.join();
  LossAndGradient out;
  for (auto& r : results) {
    out.loss += r.loss;
    out.regularization += r.regularization;
    out.gradients.merge(r.gradients);
  }
  return out;
}

}  // namespace detail

// Trains ComplEx embeddings. Entities and relations are indexed in sorted key
// order; all randomness flows from cfg.seed. With threads > 1 each batch's
// gradient is computed in chunks, which changes floating-point summation
// order relative to the single-threaded run.
inline TrainResult train(const std::vector<Triple>& triples, const TrainConfig& cfg) {
  validate(cfg);
  if (triples.empty()) throw Error("training needs at least one triple");

  std::set<std::string> entities, relations;
  for (const auto& t : triples) {
    entities.insert(embedding_key(t.subject));
    entities.insert(embedding_key(t.object));
    relations.insert(embedding_key(t.predicate));
  }
  TrainResult out;
  out.model = make_model({entities.begin(), entities.end()}, {relations.begin(), relations.end()}, cfg.dimension);
  auto& m = out.model;

  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> init(0.0, cfg.init_sigma);
  for (auto& x : m.entity_re) x = init(rng);
  for (auto& x : m.entity_im) x = init(rng);
  for (auto& x : m.relation_re) x = init(rng);
  if (!cfg.real_relations) {
    for (auto& x : m.relation_im) x = init(rng);
  }

  std::vector<detail::IndexedTriple> positives;
  detail::KnownSet known;
  for (const auto& t : triples) {
    auto it = detail::index_of(m, t);
    if (known.insert(it).second) positives.push_back(it);
  }

  const std::size_t n_e = m.num_entities();
  std::uniform_int_distribution<std::size_t> pick_entity(0, n_e - 1);
  std::bernoulli_distribution corrupt_head(0.5);
  auto sample_negative = [&](std::mt19937_64& gen, const detail::IndexedTriple& pos, detail::IndexedTriple& neg) {
    for (int attempt = 0; attempt < 100; ++attempt) {
      neg = pos;
      if (corrupt_head(gen)) {
        neg.h = pick_entity(gen);
      } else {
        neg.t = pick_entity(gen);
      }
      if (!known.count(neg)) return true;
    }
    return false;
  };

  // Fixed monitoring set. Its generator is separate from the training one,
  // so it does not change the training trajectory.
  std::mt19937_64 monitor_rng(cfg.seed ^ 0x9E3779B97F4A7C15ULL);
  std::vector<RankingPair> monitor;
  for (const auto& p : positives) {
    for (std::size_t k = 0; k < cfg.negatives; ++k) {
      detail::IndexedTriple n{};
      if (sample_negative(monitor_rng, p, n)) monitor.push_back({{p.h, p.r, p.t, 1.0}, {n.h, n.r, n.t, -1.0}});
    }
  }
  auto objective = [&] {
    return detail::monitor_objective(m, positives, monitor, cfg);
  };

  detail::Adagrad opt(m, cfg.learning_rate);
  std::vector<std::size_t> order(positives.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    double epoch_loss = 0.0;
    std::size_t examples = 0;

    for (std::size_t b = 0; b < order.size(); b += cfg.batch_size) {
      std::size_t e = std::min(order.size(), b + cfg.batch_size);
      std::vector<LabeledTriple> batch;
      std::vector<RankingPair> pairs;
      for (std::size_t i = b; i < e; ++i) {
        const auto& p = positives[order[i]];
        LabeledTriple pos{p.h, p.r, p.t, 1.0};
        if (cfg.loss == LossKind::kLogistic) batch.push_back(pos);
        for (std::size_t k = 0; k < cfg.negatives; ++k) {
          detail::IndexedTriple n{};
          if (!sample_negative(rng, p, n)) {
            ++out.skipped_negatives;
            continue;
          }
          LabeledTriple neg{n.h, n.r, n.t, -1.0};
          if (cfg.loss == LossKind::kLogistic) {
            batch.push_back(neg);
          } else {
            pairs.emplace_back(pos, neg);
          }
        }
      }

      LossAndGradient lg;
      if (cfg.loss == LossKind::kLogistic) {
        lg = detail::chunked(batch.size(), cfg.threads, [&](std::size_t lo, std::size_t hi) {
          return loss_and_gradient(m, std::span<const LabeledTriple>(batch).subspan(lo, hi - lo), cfg.l2_lambda,
                                   cfg.real_relations);
        });
        examples += batch.size();
      } else {
        lg = detail::chunked(pairs.size(), cfg.threads, [&](std::size_t lo, std::size_t hi) {
          return margin_loss_and_gradient(m, std::span<const RankingPair>(pairs).subspan(lo, hi - lo), cfg.margin,
                                          cfg.l2_lambda, cfg.real_relations);
        });
        examples += pairs.size();
      }
      epoch_loss += lg.loss;
      opt.apply(m, lg.gradients);
    }
    out.batch_loss.push_back(examples ? epoch_loss / static_cast<double>(examples) : 0.0);
    out.epoch_loss.push_back(objective());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Filtered ranking

struct RankMetrics {
  double mrr = 0.0;
  std::map<int, double> hits_at{{1, 0.0}, {3, 0.0}, {10, 0.0}};
  std::size_t evaluated = 0;  // test triples; each is ranked twice
};

namespace detail {

// Pessimistic filtered rank: 1 + number of candidates, other than the true
// one and other known positives, scoring at least as high.
inline std::size_t filtered_rank(const std::vector<double>& scores, std::size_t truth,
                                 const std::vector<bool>& filtered) {
  std::size_t rank = 1;
  const double s = scores[truth];
  for (std::size_t e = 0; e < scores.size(); ++e) {
    if (e != truth && !filtered[e] && scores[e] >= s) ++rank;
  }
  return rank;
}

}  // namespace detail

// Scores of (h, r, e) for every entity e.
inline std::vector<double> tail_scores(const EmbeddingModel& m, std::size_t h, std::size_t r) {
  const std::size_t d = m.dim;
  // f(h, r, e) = sum Re(w) Re(e) + Im(w) Im(e) with w = r * h.
  std::vector<double> wr(d), wi(d);
  for (std::size_t i = 0; i < d; ++i) {
    double a = m.entity_re[h * d + i], b = m.entity_im[h * d + i];
    double c = m.relation_re[r * d + i], dd = m.relation_im[r * d + i];
    wr[i] = c * a - dd * b;
    wi[i] = c * b + dd * a;
  }
  std::vector<double> out(m.num_entities());
  for (std::size_t e = 0; e < out.size(); ++e) {
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i) s += wr[i] * m.entity_re[e * d + i] + wi[i] * m.entity_im[e * d + i];
    out[e] = s;
  }
  return out;
}

// Scores of (e, r, t) for every entity e.
inline std::vector<double> head_scores(const EmbeddingModel& m, std::size_t r, std::size_t t) {
  const std::size_t d = m.dim;
  // f(e, r, t) = Re(sum e * u) with u = r * conj(t).
  std::vector<double> ur(d), ui(d);
  for (std::size_t i = 0; i < d; ++i) {
    double c = m.relation_re[r * d + i], dd = m.relation_im[r * d + i];
    double e = m.entity_re[t * d + i], f = m.entity_im[t * d + i];
    ur[i] = c * e + dd * f;
    ui[i] = dd * e - c * f;
  }
  std::vector<double> out(m.num_entities());
  for (std::size_t x = 0; x < out.size(); ++x) {
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i) s += m.entity_re[x * d + i] * ur[i] - m.entity_im[x * d + i] * ui[i];
    out[x] = s;
  }
  return out;
}

// Filtered MRR and Hits@{1,3,10} over head and tail corruption. Known
// triples mentioning names outside the model are ignored.
inline RankMetrics evaluate(const EmbeddingModel& m, const std::vector<Triple>& test,
                            const std::vector<Triple>& known) {
  RankMetrics out;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> tails_of, heads_of;
  for (const auto& t : known) {
    auto h = m.entity_index.find(embedding_key(t.subject));
    auto r = m.relation_index.find(embedding_key(t.predicate));
    auto o = m.entity_index.find(embedding_key(t.object));
    if (h == m.entity_index.end() || r == m.relation_index.end() || o == m.entity_index.end()) continue;
    tails_of[{h->second, r->second}].push_back(o->second);
    heads_of[{r->second, o->second}].push_back(h->second);
  }

  double rr_sum = 0.0;
  std::map<int, double> hit_sum{{1, 0.0}, {3, 0.0}, {10, 0.0}};
  std::vector<bool> filtered(m.num_entities());
  auto account = [&](std::size_t rank) {
    rr_sum += 1.0 / static_cast<double>(rank);
    for (auto& [k, v] : hit_sum) {
      if (rank <= static_cast<std::size_t>(k)) v += 1.0;
    }
  };

  for (const auto& t : test) {
    auto x = detail::index_of(m, t);

    std::fill(filtered.begin(), filtered.end(), false);
    for (auto e : tails_of[{x.h, x.r}]) filtered[e] = true;
    account(detail::filtered_rank(tail_scores(m, x.h, x.r), x.t, filtered));

    std::fill(filtered.begin(), filtered.end(), false);
    for (auto e : heads_of[{x.r, x.t}]) filtered[e] = true;
    account(detail::filtered_rank(head_scores(m, x.r, x.t), x.h, filtered));

    ++out.evaluated;
  }
  if (out.evaluated) {
    double n = 2.0 * static_cast<double>(out.evaluated);
    out.mrr = rr_sum / n;
    for (auto& [k, v] : hit_sum) out.hits_at[k] = v / n;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Prediction

// For every relation r in `relations`: entities that are subjects in `kg`,
// share an asserted class with some existing subject of r (any subject when
// those are untyped) and have no r-triple yet get the top_k objects among
// r's observed objects, with sigmoid(score) strictly above `threshold` as
// confidence. Existing statements are never overwritten.
inline std::vector<ScoredTriple> predict_missing(const EmbeddingModel& m, const KnowledgeGraph& kg,
                                                 const std::vector<std::string>& relations, double threshold,
                                                 std::size_t top_k) {
  std::vector<ScoredTriple> out;
  if (top_k == 0) return out;
  auto classes = kg.class_assertions();

  std::map<std::string, Term> term_of;
  std::set<Term> subjects;
  for (const auto& [t, _] : kg.statements()) {
    term_of.emplace(embedding_key(t.subject), t.subject);
    term_of.emplace(embedding_key(t.object), t.object);
    subjects.insert(t.subject);
  }

  for (const auto& rel : relations) {
    if (!m.has_relation(rel)) continue;
    const std::size_t r = m.relation(rel);

    std::set<Term> has_r;
    std::set<std::size_t> objects;
    std::set<std::string> subject_classes;
    for (const auto& [t, _] : kg.statements()) {
      if (t.predicate.value != rel) continue;
      has_r.insert(t.subject);
      auto o = m.entity_index.find(embedding_key(t.object));
      if (o != m.entity_index.end()) objects.insert(o->second);
      auto c = classes.find(t.subject);
      if (c != classes.end()) subject_classes.insert(c->second.begin(), c->second.end());
    }
    if (objects.empty()) {
      for (std::size_t e = 0; e < m.num_entities(); ++e) objects.insert(e);
    }

    for (const auto& s : subjects) {
      if (has_r.count(s)) continue;
      auto hi = m.entity_index.find(embedding_key(s));
      if (hi == m.entity_index.end()) continue;
      if (!subject_classes.empty()) {
        auto c = classes.find(s);
        if (c == classes.end()) continue;
        bool shares = std::any_of(c->second.begin(), c->second.end(),
                                  [&](const std::string& x) { return subject_classes.count(x) > 0; });
        if (!shares) continue;
      }

      auto scores = tail_scores(m, hi->second, r);
      std::vector<std::pair<double, std::size_t>> ranked;
      for (auto o : objects) {
        if (o == hi->second) continue;
        ranked.emplace_back(scores[o], o);
      }
      std::sort(ranked.begin(), ranked.end(), [&](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return m.entity_names[a.second] < m.entity_names[b.second];
      });

      std::size_t emitted = 0;
      for (const auto& [f, o] : ranked) {
        if (emitted == top_k) break;
        double conf = sigmoid(f);
        if (!(conf > threshold)) break;
        auto term = term_of.find(m.entity_names[o]);
        if (term == term_of.end()) continue;
        Triple t{s, iri(rel), term->second};
        if (kg.contains(t)) continue;
        out.push_back(ScoredTriple{t, conf, std::nullopt, true});
        ++emitted;
      }
    }
  }
  return out;
}

// Fraction of pairs whose labels agree: equal after ASCII case folding or
// label similarity >= sim_threshold. Empty input agrees vacuously.
inline double agreement_check(const std::vector<std::string>& old_labels, const std::vector<std::string>& new_labels,
                              double sim_threshold) {
  if (old_labels.size() != new_labels.size()) {
    throw Error("agreement check needs paired lists (" + std::to_string(old_labels.size()) + " vs " +
                std::to_string(new_labels.size()) + ")");
  }
  if (old_labels.empty()) return 1.0;
  std::size_t agree = 0;
  for (std::size_t i = 0; i < old_labels.size(); ++i) {
    if (fold_case(old_labels[i]) == fold_case(new_labels[i]) ||
        label_similarity(old_labels[i], new_labels[i]) >= sim_threshold) {
      ++agree;
    }
  }
  return static_cast<double>(agree) / static_cast<double>(old_labels.size());
}

// ---------------------------------------------------------------------------
// Model files
//
//   OGCX 1 <n_e> <n_r> <d>
//   E\t<key>\t<re_0> ... <re_{d-1}> <im_0> ... <im_{d-1}>     (n_e lines)
//   R\t<key>\t...                                              (n_r lines)
//
// Numbers are written with 17 significant digits so a save/load round trip
// is exact.

inline std::string save_model(const EmbeddingModel& m) {
  std::string out = "OGCX 1 " + std::to_string(m.num_entities()) + " " + std::to_string(m.num_relations()) + " " +
                    std::to_string(m.dim) + "\n";
  char buf[32];
  auto rows = [&](char tag, const std::vector<std::string>& names, const std::vector<double>& re,
                  const std::vector<double>& im) {
    for (std::size_t k = 0; k < names.size(); ++k) {
      out += tag;
      out += '\t';
      out += names[k];
      out += '\t';
      for (std::size_t i = 0; i < 2 * m.dim; ++i) {
        double v = i < m.dim ? re[k * m.dim + i] : im[k * m.dim + i - m.dim];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        if (i) out += ' ';
        out += buf;
      }
      out += '\n';
    }
  };
  rows('E', m.entity_names, m.entity_re, m.entity_im);
  rows('R', m.relation_names, m.relation_re, m.relation_im);
  return out;
}

inline EmbeddingModel load_model(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(in, line)) throw ParseError("empty model file", 1);
  std::istringstream header(line);
  std::string magic;
  int version = 0;
  std::size_t n_e = 0, n_r = 0, d = 0;
  if (!(header >> magic >> version >> n_e >> n_r >> d) || magic != "OGCX") {
    throw ParseError("bad model header", 1);
  }
  if (version != 1) throw ParseError("unsupported model version " + std::to_string(version), 1);
  if (d == 0) throw ParseError("model dimension must be positive", 1);

  std::vector<std::string> ents, rels;
  std::vector<std::vector<double>> ent_rows, rel_rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto t1 = line.find('\t');
    auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos || t1 != 1 || (line[0] != 'E' && line[0] != 'R')) {
      throw ParseError("expected 'E' or 'R' row", lineno);
    }
    std::string key = line.substr(t1 + 1, t2 - t1 - 1);
    std::istringstream nums(line.substr(t2 + 1));
    std::vector<double> row;
    double v;
    while (nums >> v) row.push_back(v);
    if (!nums.eof() || row.size() != 2 * d) {
      throw ParseError("expected " + std::to_string(2 * d) + " numbers", lineno);
    }
    for (double x : row) {
      if (!std::isfinite(x)) throw ParseError("non-finite embedding value", lineno);
    }
    (line[0] == 'E' ? ents : rels).push_back(std::move(key));
    (line[0] == 'E' ? ent_rows : rel_rows).push_back(std::move(row));
  }
  if (ents.size() != n_e || rels.size() != n_r) throw ParseError("row count does not match header", lineno);

  EmbeddingModel m = make_model(ents, rels, d);
  if (m.num_entities() != n_e || m.num_relations() != n_r) throw ParseError("duplicate key in model file", lineno);
  for (std::size_t k = 0; k < n_e; ++k) {
    std::copy(ent_rows[k].begin(), ent_rows[k].begin() + d, m.entity_re.begin() + k * d);
    std::copy(ent_rows[k].begin() + d, ent_rows[k].end(), m.entity_im.begin() + k * d);
  }
  for (std::size_t k = 0; k < n_r; ++k) {
    std::copy(rel_rows[k].begin(), rel_rows[k].begin() + d, m.relation_re.begin() + k * d);
    std::copy(rel_rows[k].begin() + d, rel_rows[k].end(), m.relation_im.begin() + k * d);
  }
  return m;
}

}  // namespace ontogen
