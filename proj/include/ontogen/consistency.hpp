#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ontogen/knowledge_graph.hpp"
#include "ontogen/ontology_schema.hpp"

namespace ontogen {

namespace detail {

// Subclass closure read straight off a graph's rdfs:subClassOf statements.
// Cycles are tolerated.
class GraphHierarchy {
 public:
  explicit GraphHierarchy(const KnowledgeGraph& kg) {
    for (const auto& [t, _] : kg.statements()) {
      if (t.predicate.value == vocab::kSubClassOf && t.subject.is_iri() && t.object.is_iri()) {
        parents_[t.subject.value].insert(t.object.value);
      }
    }
  }

  std::set<std::string> ancestors_or_self(const std::string& c) const {
    std::set<std::string> seen{c};
    std::vector<std::string> todo{c};
    while (!todo.empty()) {
      auto cur = todo.back();
      todo.pop_back();
      auto it = parents_.find(cur);
      if (it == parents_.end()) continue;
      for (const auto& p : it->second) {
        if (seen.insert(p).second) todo.push_back(p);
      }
    }
    return seen;
  }

  std::set<std::string> classes() const {
    std::set<std::string> out;
    for (const auto& [c, ps] : parents_) {
      out.insert(c);
      out.insert(ps.begin(), ps.end());
    }
    return out;
  }

 private:
  std::map<std::string, std::set<std::string>> parents_;
};

// Instances of c in the graph: nodes asserted c or any subclass of c.
inline std::set<Term> instances_of(const KnowledgeGraph& okg, const std::string& c) {
  GraphHierarchy h(okg);
  std::set<Term> out;
  for (const auto& [node, classes] : okg.class_assertions()) {
    for (const auto& a : classes) {
      if (h.ancestors_or_self(a).count(c)) {
        out.insert(node);
        break;
      }
    }
  }
  return out;
}

}  // namespace detail

// Data predicates used on any instance of c (directly or via a subclass).
// Schema predicates such as rdf:type are not properties of a concept.
inline std::set<std::string> concept_properties(const KnowledgeGraph& okg, const std::string& c,
                                                std::vector<std::string>* warnings = nullptr) {
  std::set<std::string> out;
  auto instances = detail::instances_of(okg, c);
  if (instances.empty()) {
    if (warnings) warnings->push_back("concept has no instances: " + c);
    return out;
  }
  for (const auto& [t, _] : okg.statements()) {
    if (!is_schema_triple(t) && instances.count(t.subject)) out.insert(t.predicate.value);
  }
  return out;
}

// Properties On allows on c: declared without a domain, or with a domain
// containing c or one of its On-ancestors.
inline std::set<std::string> allowed_properties(const OntologySchema& on, const std::string& c) {
  std::set<std::string> out;
  auto up = on.lenient_ancestors_or_self(c);
  for (const auto& [p, decl] : on.properties()) {
    if (decl.domain.empty()) {
      out.insert(p);
      continue;
    }
    for (const auto& d : decl.domain) {
      if (up.count(d)) {
        out.insert(p);
        break;
      }
    }
  }
  return out;
}

struct ConceptInconsistency {
  std::string concept_iri;
  std::set<std::string> offending_properties;
  std::size_t epsilon_c = 0;
  std::vector<Triple> affected_triples;
};

// epsilon(c): properties of c in the generated graph that On does not allow
// on c, and the instance triples that use them.
inline ConceptInconsistency epsilon_for_concept(const KnowledgeGraph& okg, const OntologySchema& on,
                                                const std::string& c) {
  ConceptInconsistency out;
  out.concept_iri = c;
  auto allowed = allowed_properties(on, c);
  for (const auto& p : concept_properties(okg, c)) {
    if (!allowed.count(p)) out.offending_properties.insert(p);
  }
  out.epsilon_c = out.offending_properties.size();
  if (out.epsilon_c == 0) return out;
  auto instances = detail::instances_of(okg, c);
  for (const auto& [t, _] : okg.statements()) {
    if (instances.count(t.subject) && out.offending_properties.count(t.predicate.value)) {
      out.affected_triples.push_back(t);
    }
  }
  return out;
}

struct DomainRangeViolation {
  Triple triple;
  std::string position;  // "domain" or "range"
  std::set<std::string> declared;
  std::set<std::string> asserted;
};

// A data triple (x, p, y) violates the domain of p when On declares one and
// none of x's asserted classes (closed upward in On) is in it; likewise for
// the range and y. Literal objects violate a range that names only classes;
// typed resources violate a range that admits only literals. Untyped
// resources are never checked.
inline std::vector<DomainRangeViolation> domain_range_check(const KnowledgeGraph& okg, const OntologySchema& on) {
  std::vector<DomainRangeViolation> out;
  auto classes = okg.class_assertions();
  auto fits = [&](const std::set<std::string>& asserted, const std::set<std::string>& declared) {
    for (const auto& a : asserted) {
      for (const auto& up : on.lenient_ancestors_or_self(a)) {
        if (declared.count(up)) return true;
      }
    }
    return false;
  };

  for (const auto& [t, _] : okg.statements()) {
    if (is_schema_triple(t)) continue;
    const PropertyDecl* decl = on.property(t.predicate.value);
    if (!decl) continue;

    if (!decl->domain.empty()) {
      auto it = classes.find(t.subject);
      if (it != classes.end() && !fits(it->second, decl->domain)) {
        out.push_back({t, "domain", decl->domain, it->second});
      }
    }

    if (!decl->has_range()) continue;
    if (t.object.is_literal()) {
      if (!decl->literal_range) out.push_back({t, "range", decl->range, {}});
      continue;
    }
    auto it = classes.find(t.object);
    if (it == classes.end()) continue;
    if (!fits(it->second, decl->range)) out.push_back({t, "range", decl->range, it->second});
  }
  return out;
}

struct RemovedTriple {
  Triple triple;
  // "offending", "domain", "range", "vocabulary" or "blank"
  std::string reason;
};

struct ConsistencyReport {
  std::vector<ConceptInconsistency> per_concept;
  std::size_t epsilon_total = 0;
  std::vector<DomainRangeViolation> violations;
  std::vector<RemovedTriple> removed_triples;
  std::size_t input = 0;
  std::size_t retained = 0;
};

struct MappingResult {
  KnowledgeGraph graph;  // domainOnT
  ConsistencyReport report;
};

// Trims the generated graph to the target ontology: removes the affected
// triples of every concept with epsilon(c) > 0, every domain/range
// violation, every triple whose predicate On does not declare, and every
// triple touching a blank node. Type assertions survive when their class is
// in On; other schema statements are dropped.
inline MappingResult map_to_domain(const KnowledgeGraph& okg, const OntologySchema& on) {
  MappingResult out;
  auto& rep = out.report;
  rep.input = okg.size();

  std::set<std::string> concepts = detail::GraphHierarchy(okg).classes();
  for (const auto& [_, cs] : okg.class_assertions()) concepts.insert(cs.begin(), cs.end());

  std::map<Triple, std::string> reason;
  for (const auto& c : concepts) {
    auto ci = epsilon_for_concept(okg, on, c);
    if (ci.epsilon_c == 0) continue;
    rep.epsilon_total += ci.epsilon_c;
    for (const auto& t : ci.affected_triples) reason.emplace(t, "offending");
    rep.per_concept.push_back(std::move(ci));
  }

  rep.violations = domain_range_check(okg, on);
  for (const auto& v : rep.violations) reason.emplace(v.triple, v.position);

  for (const auto& [t, _] : okg.statements()) {
    if (reason.count(t)) continue;
    if (t.subject.is_blank() || t.object.is_blank()) {
      reason.emplace(t, "blank");
    } else if (is_type_assertion(t)) {
      if (!on.has_class(t.object.value)) reason.emplace(t, "vocabulary");
    } else if (is_schema_triple(t) || !on.has_property(t.predicate.value)) {
      reason.emplace(t, "vocabulary");
    }
  }

  for (const auto& st : okg.scored()) {
    auto it = reason.find(st.triple);
    if (it == reason.end()) {
      out.graph.add(st);
    } else {
      rep.removed_triples.push_back({st.triple, it->second});
    }
  }
  rep.retained = out.graph.size();
  return out;
}

}  // namespace ontogen
