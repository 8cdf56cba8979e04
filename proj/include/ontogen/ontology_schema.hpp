#pragma once

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ontogen/error.hpp"
#include "ontogen/term.hpp"
#include "ontogen/vocab.hpp"

namespace ontogen {

struct PropertyDecl {
  std::set<std::string> domain;
  std::set<std::string> range;
  // rdfs:Literal or an xsd datatype was given as range.
  bool literal_range = false;

  bool has_range() const { return literal_range || !range.empty(); }
};

using ClassPair = std::pair<std::string, std::string>;

// Classes, a subclass DAG, property signatures, disjointness axioms and a
// set of reference facts. Used both for reference ontologies (axioms + facts)
// and for the target domain ontology.
class OntologySchema {
 public:
  void add_class(const std::string& c) { classes_.insert(c); }

  void add_subclass(const std::string& child, const std::string& parent) {
    add_class(child);
    add_class(parent);
    if (child == parent) return;
    parents_[child].insert(parent);
  }

  void add_disjoint(const std::string& a, const std::string& b) {
    add_class(a);
    add_class(b);
    disjointness_.insert(normalized(a, b));
  }

  PropertyDecl& declare_property(const std::string& p) { return properties_[p]; }

  void add_domain(const std::string& p, const std::string& c) {
    add_class(c);
    properties_[p].domain.insert(c);
  }

  void add_range(const std::string& p, const std::string& c) {
    if (c == vocab::kRdfsLiteral || c.rfind(vocab::kXsd, 0) == 0) {
      properties_[p].literal_range = true;
      return;
    }
    add_class(c);
    properties_[p].range.insert(c);
  }

  void add_functional(const std::string& p) {
    declare_property(p);
    functional_.insert(p);
  }

  void add_fact(const Triple& t, double confidence = 1.0) {
    auto [it, inserted] = facts_.try_emplace(t, confidence);
    if (!inserted && confidence > it->second) it->second = confidence;
  }

  const std::set<std::string>& classes() const { return classes_; }
  const std::map<std::string, PropertyDecl>& properties() const { return properties_; }
  const std::set<ClassPair>& disjointness_axioms() const { return disjointness_; }
  const std::set<std::string>& functional_properties() const { return functional_; }
  const std::map<Triple, double>& facts() const { return facts_; }

  std::set<ClassPair> subclass_edges() const {
    std::set<ClassPair> out;
    for (const auto& [child, parents] : parents_) {
      for (const auto& p : parents) out.emplace(child, p);
    }
    return out;
  }

  bool has_class(const std::string& c) const { return classes_.count(c) > 0; }
  bool has_property(const std::string& p) const { return properties_.count(p) > 0; }

  const PropertyDecl* property(const std::string& p) const {
    auto it = properties_.find(p);
    return it == properties_.end() ? nullptr : &it->second;
  }

  // Transitive superclasses of c, excluding c.
  std::set<std::string> ancestors(const std::string& c) const {
    if (!has_class(c)) throw UnknownNameError("class", c);
    return closure(c);
  }

  std::set<std::string> ancestors_or_self(const std::string& c) const {
    auto out = ancestors(c);
    out.insert(c);
    return out;
  }

  // Ancestors-or-self for a class that may be unknown (returns {c} then).
  std::set<std::string> lenient_ancestors_or_self(const std::string& c) const {
    auto out = closure(c);
    out.insert(c);
    return out;
  }

  // Disjointness inherits downward: true iff an ancestor-or-self of c1 and
  // an ancestor-or-self of c2 form a declared pair. Never true for c1 == c2.
  bool disjoint(const std::string& c1, const std::string& c2) const {
    return disjointness_witness(c1, c2).has_value();
  }

  // The declared axiom that makes c1 and c2 disjoint, if any.
  std::optional<ClassPair> disjointness_witness(const std::string& c1, const std::string& c2) const {
    if (!has_class(c1)) throw UnknownNameError("class", c1);
    if (!has_class(c2)) throw UnknownNameError("class", c2);
    if (c1 == c2 || disjointness_.empty()) return std::nullopt;
    auto up1 = ancestors_or_self(c1);
    auto up2 = ancestors_or_self(c2);
    for (const auto& a : up1) {
      for (const auto& b : up2) {
        auto key = normalized(a, b);
        if (disjointness_.count(key)) return key;
      }
    }
    return std::nullopt;
  }

  // Throws Error if the subclass graph has a cycle, or a class is declared
  // disjoint with itself or one of its ancestors.
  void validate() const {
    // Kahn's algorithm over child -> parent edges.
    std::map<std::string, int> indegree;
    for (const auto& c : classes_) indegree[c] = 0;
    for (const auto& [child, parents] : parents_) {
      for (const auto& p : parents) ++indegree[p];
      (void)child;
    }
    std::deque<std::string> ready;
    for (const auto& [c, d] : indegree) {
      if (d == 0) ready.push_back(c);
    }
    std::size_t seen = 0;
    while (!ready.empty()) {
      auto c = ready.front();
      ready.pop_front();
      ++seen;
      auto it = parents_.find(c);
      if (it == parents_.end()) continue;
      for (const auto& p : it->second) {
        if (--indegree[p] == 0) ready.push_back(p);
      }
    }
    if (seen != indegree.size()) throw Error("subclass edges contain a cycle");
    for (const auto& [a, b] : disjointness_) {
      if (a == b) throw Error("class declared disjoint with itself: " + a);
      if (closure(a).count(b) || closure(b).count(a)) {
        throw Error("class declared disjoint with its own ancestor: " + a + " / " + b);
      }
    }
  }

  // Merges another schema into this one.
  void merge(const OntologySchema& other) {
    for (const auto& c : other.classes_) add_class(c);
    for (const auto& [child, parents] : other.parents_) {
      for (const auto& p : parents) add_subclass(child, p);
    }
    for (const auto& [p, decl] : other.properties_) {
      auto& mine = properties_[p];
      mine.domain.insert(decl.domain.begin(), decl.domain.end());
      mine.range.insert(decl.range.begin(), decl.range.end());
      mine.literal_range = mine.literal_range || decl.literal_range;
    }
    disjointness_.insert(other.disjointness_.begin(), other.disjointness_.end());
    functional_.insert(other.functional_.begin(), other.functional_.end());
    for (const auto& [t, c] : other.facts_) add_fact(t, c);
  }

  // Interprets RDFS/OWL vocabulary; any other triple becomes a fact.
  static OntologySchema from_triples(const std::vector<Triple>& triples) {
    OntologySchema s;
    for (const auto& t : triples) s.absorb(t);
    return s;
  }

  void absorb(const Triple& t, double confidence = 1.0) {
    const auto& p = t.predicate.value;
    bool iri_pair = t.subject.is_iri() && t.object.is_iri();
    if (iri_pair && p == vocab::kType) {
      const auto& o = t.object.value;
      if (o == vocab::kOwlClass || o == vocab::kRdfsClass) {
        add_class(t.subject.value);
        return;
      }
      if (o == vocab::kProperty || o == vocab::kObjectProperty || o == vocab::kDatatypeProperty) {
        declare_property(t.subject.value);
        return;
      }
      if (o == vocab::kFunctionalProperty) {
        add_functional(t.subject.value);
        return;
      }
    } else if (iri_pair && p == vocab::kSubClassOf) {
      add_subclass(t.subject.value, t.object.value);
      return;
    } else if (iri_pair && p == vocab::kDomain) {
      add_domain(t.subject.value, t.object.value);
      return;
    } else if (iri_pair && p == vocab::kRange) {
      add_range(t.subject.value, t.object.value);
      return;
    } else if (iri_pair && p == vocab::kDisjointWith) {
      add_disjoint(t.subject.value, t.object.value);
      return;
    }
    add_fact(t, confidence);
  }

 private:
  static ClassPair normalized(const std::string& a, const std::string& b) {
    return a < b ? ClassPair{a, b} : ClassPair{b, a};
  }

  std::set<std::string> closure(const std::string& c) const {
    std::set<std::string> out;
    std::vector<std::string> stack{c};
    while (!stack.empty()) {
      auto cur = std::move(stack.back());
      stack.pop_back();
      auto it = parents_.find(cur);
      if (it == parents_.end()) continue;
      for (const auto& p : it->second) {
        if (p != c && out.insert(p).second) stack.push_back(p);
      }
    }
    return out;
  }

  std::set<std::string> classes_;
  std::map<std::string, std::set<std::string>> parents_;
  std::map<std::string, PropertyDecl> properties_;
  std::set<ClassPair> disjointness_;
  std::set<std::string> functional_;
  std::map<Triple, double> facts_;
};

inline std::set<std::string> ancestors(const OntologySchema& schema, const std::string& c) {
  return schema.ancestors(c);
}

inline bool disjoint(const OntologySchema& schema, const std::string& c1, const std::string& c2) {
  return schema.disjoint(c1, c2);
}

}  // namespace ontogen
