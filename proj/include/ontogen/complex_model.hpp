#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ontogen/error.hpp"
#include "ontogen/ntriples.hpp"
#include "ontogen/term.hpp"

namespace ontogen {

// Name under which a term is indexed in an embedding model: the IRI itself,
// "_:label" for blank nodes, the N-Triples form for literals.
inline std::string embedding_key(const Term& t) {
  switch (t.kind) {
    case TermKind::kIri: return t.value;
    case TermKind::kBlank: return "_:" + t.value;
    case TermKind::kLiteral: return to_ntriples(t);
  }
  return t.value;
}

// Complex-valued entity and relation embeddings. Row i of an n x d block
// lives at [i*d, (i+1)*d); real and imaginary parts are stored separately.
struct EmbeddingModel {
  std::size_t dim = 0;
  std::vector<std::string> entity_names;
  std::vector<std::string> relation_names;
  std::map<std::string, std::size_t> entity_index;
  std::map<std::string, std::size_t> relation_index;
  std::vector<double> entity_re, entity_im;
  std::vector<double> relation_re, relation_im;

  std::size_t num_entities() const { return entity_names.size(); }
  std::size_t num_relations() const { return relation_names.size(); }

  std::size_t entity(const std::string& name) const {
    auto it = entity_index.find(name);
    if (it == entity_index.end()) throw UnknownNameError("entity", name);
    return it->second;
  }

  std::size_t relation(const std::string& name) const {
    auto it = relation_index.find(name);
    if (it == relation_index.end()) throw UnknownNameError("relation", name);
    return it->second;
  }

  bool has_entity(const std::string& name) const { return entity_index.count(name) > 0; }
  bool has_relation(const std::string& name) const { return relation_index.count(name) > 0; }

  friend bool operator==(const EmbeddingModel&, const EmbeddingModel&) = default;
};

// Zero-initialized model over the given (deduplicated, order-preserving)
// names.
inline EmbeddingModel make_model(const std::vector<std::string>& entities,
                                 const std::vector<std::string>& relations, std::size_t dim) {
  if (dim == 0) throw Error("embedding dimension must be positive");
  EmbeddingModel m;
  m.dim = dim;
  for (const auto& e : entities) {
    if (m.entity_index.emplace(e, m.entity_names.size()).second) m.entity_names.push_back(e);
  }
  for (const auto& r : relations) {
    if (m.relation_index.emplace(r, m.relation_names.size()).second) m.relation_names.push_back(r);
  }
  m.entity_re.assign(m.entity_names.size() * dim, 0.0);
  m.entity_im.assign(m.entity_names.size() * dim, 0.0);
  m.relation_re.assign(m.relation_names.size() * dim, 0.0);
  m.relation_im.assign(m.relation_names.size() * dim, 0.0);
  return m;
}

// Re(sum_i r_i * h_i * conj(t_i)) for row indices.
inline double score(const EmbeddingModel& m, std::size_t h, std::size_t r, std::size_t t) {
  const std::size_t d = m.dim;
  const double* hr = &m.entity_re[h * d];
  const double* hi = &m.entity_im[h * d];
  const double* rr = &m.relation_re[r * d];
  const double* ri = &m.relation_im[r * d];
  const double* tr = &m.entity_re[t * d];
  const double* ti = &m.entity_im[t * d];
  double s = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    s += rr[i] * (hr[i] * tr[i] + hi[i] * ti[i]) + ri[i] * (hr[i] * ti[i] - hi[i] * tr[i]);
  }
  return s;
}

inline double score(const EmbeddingModel& m, const std::string& h, const std::string& r, const std::string& t) {
  return score(m, m.entity(h), m.relation(r), m.entity(t));
}

inline double sigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  double e = std::exp(x);
  return e / (1.0 + e);
}

// log(1 + exp(x)) without overflow.
inline double softplus(double x) { return std::max(x, 0.0) + std::log1p(std::exp(-std::abs(x))); }

struct LabeledTriple {
  std::size_t head = 0;
  std::size_t relation = 0;
  std::size_t tail = 0;
  double label = 1.0;  // +1 positive, -1 negative
};

// Sparse gradient: one 2d row (real parts, then imaginary parts) per touched
// entity / relation.
struct Gradients {
  std::map<std::size_t, std::vector<double>> entity;
  std::map<std::size_t, std::vector<double>> relation;

  void merge(const Gradients& other) {
    auto add = [](auto& into, const auto& from) {
      for (const auto& [k, v] : from) {
        auto& row = into[k];
        if (row.empty()) {
          row = v;
        } else {
          for (std::size_t i = 0; i < v.size(); ++i) row[i] += v[i];
        }
      }
    };
    add(entity, other.entity);
    add(relation, other.relation);
  }
};

struct LossAndGradient {
  double loss = 0.0;
  double regularization = 0.0;  // included in loss
  Gradients gradients;
};

namespace detail {

inline std::vector<double>& grad_row(std::map<std::size_t, std::vector<double>>& g, std::size_t k,
                                     std::size_t d) {
  auto& v = g[k];
  if (v.empty()) v.assign(2 * d, 0.0);
  return v;
}

// Adds weight * df/dtheta for one triple.
inline void add_score_gradient(const EmbeddingModel& m, const LabeledTriple& ex, double weight,
                               bool real_relations, Gradients& into) {
  const std::size_t d = m.dim;
  const double* a = &m.entity_re[ex.head * d];
  const double* b = &m.entity_im[ex.head * d];
  const double* c = &m.relation_re[ex.relation * d];
  const double* dd = &m.relation_im[ex.relation * d];
  const double* e = &m.entity_re[ex.tail * d];
  const double* f = &m.entity_im[ex.tail * d];
  auto& gh = grad_row(into.entity, ex.head, d);
  auto& gt = grad_row(into.entity, ex.tail, d);
  auto& gr = grad_row(into.relation, ex.relation, d);
  for (std::size_t i = 0; i < d; ++i) {
    gh[i] += weight * (c[i] * e[i] + dd[i] * f[i]);
    gh[d + i] += weight * (c[i] * f[i] - dd[i] * e[i]);
    gr[i] += weight * (a[i] * e[i] + b[i] * f[i]);
    if (!real_relations) gr[d + i] += weight * (a[i] * f[i] - b[i] * e[i]);
    gt[i] += weight * (c[i] * a[i] - dd[i] * b[i]);
    gt[d + i] += weight * (c[i] * b[i] + dd[i] * a[i]);
  }
}

// Adds l2 * (|h|^2 + |r|^2 + |t|^2) and its gradient; returns the term.
inline double add_l2(const EmbeddingModel& m, const LabeledTriple& ex, double l2, bool real_relations,
                     Gradients& into) {
  const std::size_t d = m.dim;
  double reg = 0.0;
  auto block = [&](std::map<std::size_t, std::vector<double>>& g, std::size_t k, const std::vector<double>& re,
                   const std::vector<double>& im, bool skip_im) {
    auto& row = grad_row(g, k, d);
    for (std::size_t i = 0; i < d; ++i) {
      double x = re[k * d + i], y = im[k * d + i];
      reg += x * x + y * y;
      row[i] += 2.0 * l2 * x;
      if (!skip_im) row[d + i] += 2.0 * l2 * y;
    }
  };
  block(into.entity, ex.head, m.entity_re, m.entity_im, false);
  block(into.relation, ex.relation, m.relation_re, m.relation_im, real_relations);
  block(into.entity, ex.tail, m.entity_re, m.entity_im, false);
  return l2 * reg;
}

}  // namespace detail

// Logistic loss sum_j log(1 + exp(-y_j f_j)) plus l2 * (|h|^2 + |r|^2 + |t|^2)
// per example, with analytic gradients. When `real_relations` is set the
// imaginary relation gradients are zero.
inline LossAndGradient loss_and_gradient(const EmbeddingModel& m, std::span<const LabeledTriple> batch,
                                         double l2, bool real_relations = false) {
  LossAndGradient out;
  for (const auto& ex : batch) {
    double fx = score(m, ex.head, ex.relation, ex.tail);
    out.loss += softplus(-ex.label * fx);
    detail::add_score_gradient(m, ex, -ex.label * sigmoid(-ex.label * fx), real_relations, out.gradients);
    out.regularization += detail::add_l2(m, ex, l2, real_relations, out.gradients);
  }
  out.loss += out.regularization;
  return out;
}

using RankingPair = std::pair<LabeledTriple, LabeledTriple>;  // (positive, negative)

// Pairwise margin ranking loss sum max(0, margin - f(pos) + f(neg)) plus the
// same l2 term over both triples of each pair.
inline LossAndGradient margin_loss_and_gradient(const EmbeddingModel& m, std::span<const RankingPair> pairs,
                                                double margin, double l2, bool real_relations = false) {
  LossAndGradient out;
  for (const auto& [pos, neg] : pairs) {
    double violation = margin - score(m, pos.head, pos.relation, pos.tail) + score(m, neg.head, neg.relation, neg.tail);
    if (violation > 0.0) {
      out.loss += violation;
      detail::add_score_gradient(m, pos, -1.0, real_relations, out.gradients);
      detail::add_score_gradient(m, neg, +1.0, real_relations, out.gradients);
    }
    out.regularization += detail::add_l2(m, pos, l2, real_relations, out.gradients);
    out.regularization += detail::add_l2(m, neg, l2, real_relations, out.gradients);
  }
  out.loss += out.regularization;
  return out;
}

}  // namespace ontogen
