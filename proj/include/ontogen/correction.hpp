#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ontogen/knowledge_graph.hpp"
#include "ontogen/ontology_schema.hpp"
#include "ontogen/similarity.hpp"

namespace ontogen {

enum class ViolationKind { kDisjointness, kReferenceConflict };

inline const char* kind_name(ViolationKind k) {
  return k == ViolationKind::kDisjointness ? "disjointness" : "reference-conflict";
}

// Why a triple was judged wrong. For disjointness: the type assertion, the
// declared domain/range class, and the axiom that separates them. For
// reference conflicts: the reference fact that disagrees.
struct Evidence {
  std::optional<Triple> type_assertion;
  std::string asserted_class;
  std::string declared_class;
  std::string position;  // "subject" (domain) or "object" (range)
  std::optional<ClassPair> axiom;
  std::optional<Triple> reference_fact;
  double reference_confidence = 1.0;
};

struct Violation {
  Triple triple;
  ViolationKind kind = ViolationKind::kDisjointness;
  Evidence evidence;
};

struct CorrectionConfig {
  // Only these predicates can conflict with a reference fact.
  std::set<std::string> functional;
  // Objects whose local names are at least this similar count as agreeing.
  double sim_threshold = 1.0;
  std::size_t max_rounds = 8;
};

struct CorrectionReport {
  std::vector<Violation> violations;
  std::vector<Triple> deleted;
  std::vector<std::pair<Triple, Triple>> replaced;
  std::size_t checked = 0;
  std::size_t rounds = 0;
};

// For every data triple (e, p, o) whose predicate has a declared domain in
// the reference: each class asserted for e that is disjoint (under subclass
// closure) with a domain class yields a violation. Same for o and the range.
// Classes unknown to the reference are skipped.
inline std::vector<Violation> detect_disjointness_violations(const KnowledgeGraph& kg,
                                                             const OntologySchema& reference) {
  std::vector<Violation> out;
  if (reference.disjointness_axioms().empty()) return out;
  auto classes = kg.class_assertions();

  auto check = [&](const Triple& t, const Term& node, const std::set<std::string>& declared,
                   const char* position) {
    auto it = classes.find(node);
    if (it == classes.end()) return;
    for (const auto& c : it->second) {
      if (!reference.has_class(c)) continue;
      for (const auto& d : declared) {
        auto axiom = reference.disjointness_witness(c, d);
        if (!axiom) continue;
        Violation v;
        v.triple = t;
        v.kind = ViolationKind::kDisjointness;
        v.evidence.type_assertion = Triple{node, iri(std::string(vocab::kType)), iri(c)};
        v.evidence.asserted_class = c;
        v.evidence.declared_class = d;
        v.evidence.position = position;
        v.evidence.axiom = axiom;
        out.push_back(std::move(v));
        break;
      }
    }
  };

  for (const auto& [t, _] : kg.statements()) {
    if (is_schema_triple(t)) continue;
    const PropertyDecl* decl = reference.property(t.predicate.value);
    if (!decl) continue;
    if (!decl->domain.empty()) check(t, t.subject, decl->domain, "subject");
    if (!decl->range.empty() && !t.object.is_literal()) check(t, t.object, decl->range, "object");
  }
  return out;
}

namespace detail {

inline std::string comparable_label(const Term& t) {
  return t.is_iri() ? std::string(vocab::local_name(t.value)) : t.value;
}

}  // namespace detail

// For every triple (s, p, o) with p functional: if the reference knows
// (s, p, o') but not (s, p, o), and no known o' is similar enough to o, the
// triple conflicts and the reference's value (highest confidence, then
// smallest) is proposed. Subjects the reference does not describe never
// conflict.
inline std::vector<Violation> reference_fact_check(const KnowledgeGraph& kg, const OntologySchema& reference,
                                                   const CorrectionConfig& cfg) {
  std::vector<Violation> out;
  if (cfg.functional.empty() || reference.facts().empty()) return out;

  std::map<std::pair<Term, std::string>, std::vector<std::pair<Term, double>>> index;
  for (const auto& [t, conf] : reference.facts()) {
    if (cfg.functional.count(t.predicate.value)) index[{t.subject, t.predicate.value}].emplace_back(t.object, conf);
  }

  for (const auto& [t, _] : kg.statements()) {
    if (!cfg.functional.count(t.predicate.value)) continue;
    auto it = index.find({t.subject, t.predicate.value});
    if (it == index.end()) continue;
    const auto& known = it->second;
    bool agrees = std::any_of(known.begin(), known.end(), [&](const auto& k) {
      return k.first == t.object ||
             label_similarity(detail::comparable_label(k.first), detail::comparable_label(t.object)) >=
                 cfg.sim_threshold;
    });
    if (agrees) continue;
    auto best = std::min_element(known.begin(), known.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
    Violation v;
    v.triple = t;
    v.kind = ViolationKind::kReferenceConflict;
    v.evidence.reference_fact = Triple{t.subject, t.predicate, best->first};
    v.evidence.reference_confidence = best->second;
    out.push_back(std::move(v));
  }
  return out;
}

// Re-derives a violation from its evidence alone.
inline bool evidence_holds(const Violation& v, const OntologySchema& reference, const CorrectionConfig& cfg) {
  const auto& e = v.evidence;
  if (v.kind == ViolationKind::kDisjointness) {
    if (!e.type_assertion || !e.axiom) return false;
    const PropertyDecl* decl = reference.property(v.triple.predicate.value);
    if (!decl) return false;
    const auto& declared = e.position == "subject" ? decl->domain : decl->range;
    if (!declared.count(e.declared_class)) return false;
    const Term& node = e.position == "subject" ? v.triple.subject : v.triple.object;
    if (e.type_assertion->subject != node || e.type_assertion->object.value != e.asserted_class) return false;
    if (!reference.disjointness_axioms().count(*e.axiom)) return false;
    auto up_a = reference.ancestors_or_self(e.asserted_class);
    auto up_d = reference.ancestors_or_self(e.declared_class);
    const auto& [x, y] = *e.axiom;
    return (up_a.count(x) && up_d.count(y)) || (up_a.count(y) && up_d.count(x));
  }
  if (!e.reference_fact || !cfg.functional.count(v.triple.predicate.value)) return false;
  const auto& f = *e.reference_fact;
  return reference.facts().count(f) && f.subject == v.triple.subject && f.predicate == v.triple.predicate &&
         f.object != v.triple.object && !reference.facts().count(v.triple);
}

struct CorrectionResult {
  KnowledgeGraph graph;
  CorrectionReport report;
};

// Disjointness violations delete the lower-confidence member of {type
// assertion, offending triple} (ties delete the offending triple). Reference
// conflicts replace the object with the reference value at the reference
// confidence. Repeats until nothing changes, so the result is a fixpoint.
inline CorrectionResult correct(const KnowledgeGraph& kg, const OntologySchema& reference,
                                const CorrectionConfig& cfg = {}) {
  CorrectionResult out;
  out.graph = kg;
  auto& g = out.graph;
  auto& rep = out.report;
  rep.checked = kg.size();

  for (std::size_t round = 0; round < cfg.max_rounds; ++round) {
    bool changed = false;

    for (auto& v : detect_disjointness_violations(g, reference)) {
      const Statement* prop = g.find(v.triple);
      const Statement* type = g.find(*v.evidence.type_assertion);
      if (prop && type) {
        const Triple& victim = type->confidence < prop->confidence ? *v.evidence.type_assertion : v.triple;
        rep.deleted.push_back(victim);
        g.erase(victim);
        changed = true;
      }
      rep.violations.push_back(std::move(v));
    }

    for (auto& v : reference_fact_check(g, reference, cfg)) {
      const Statement* cur = g.find(v.triple);
      if (cur) {
        Statement old = *cur;
        g.erase(v.triple);
        g.add(ScoredTriple{*v.evidence.reference_fact, v.evidence.reference_confidence,
                           old.source_id, false});
        rep.replaced.emplace_back(v.triple, *v.evidence.reference_fact);
        changed = true;
      }
      rep.violations.push_back(std::move(v));
    }

    rep.rounds = round + 1;
    if (!changed) break;
  }
  return out;
}

}  // namespace ontogen
