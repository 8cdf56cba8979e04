#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ontogen/term.hpp"
#include "ontogen/vocab.hpp"

namespace ontogen {

// Per-triple payload stored in a KnowledgeGraph.
struct Statement {
  double confidence = 1.0;
  std::optional<std::string> source_id;
  bool predicted = false;

  friend bool operator==(const Statement&, const Statement&) = default;
};

inline bool is_schema_triple(const Triple& t) {
  return t.predicate.is_iri() && vocab::is_schema_predicate(t.predicate.value);
}

inline bool is_type_assertion(const Triple& t) {
  return t.predicate.is_iri() && t.predicate.value == vocab::kType && t.object.is_iri();
}

// Set of scored triples with max-confidence merging. Statements whose
// predicate is rdf:type / rdfs:subClassOf / rdfs:domain / rdfs:range /
// rdfs:subPropertyOf / owl:disjointWith form the schema part (G_s); the rest
// form the data part (G_d). Type assertions keep a confidence like any other
// statement so that later phases can weigh them.
class KnowledgeGraph {
 public:
  using Map = std::map<Triple, Statement>;

  KnowledgeGraph() = default;

  // Inserts or merges. Returns true when the triple was not present before.
  bool add(const ScoredTriple& st) {
    check_well_formed(st.triple);
    if (!(st.confidence >= 0.0 && st.confidence <= 1.0)) {
      throw Error("confidence out of [0,1]: " + std::to_string(st.confidence));
    }
    auto [it, inserted] = statements_.try_emplace(
        st.triple, Statement{st.confidence, st.source_id, st.predicted});
    if (inserted) return true;
    Statement& cur = it->second;
    if (st.confidence > cur.confidence) {
      cur.confidence = st.confidence;
      if (st.source_id) cur.source_id = st.source_id;
    }
    // An asserted copy outranks a predicted one.
    cur.predicted = cur.predicted && st.predicted;
    return false;
  }

  bool add(const Triple& t, double confidence = 1.0) {
    return add(ScoredTriple{t, confidence, std::nullopt, false});
  }

  bool erase(const Triple& t) { return statements_.erase(t) > 0; }

  bool contains(const Triple& t) const { return statements_.count(t) > 0; }

  const Statement* find(const Triple& t) const {
    auto it = statements_.find(t);
    return it == statements_.end() ? nullptr : &it->second;
  }

  std::size_t size() const { return statements_.size(); }
  bool empty() const { return statements_.empty(); }

  const Map& statements() const { return statements_; }

  std::vector<Triple> triples() const {
    std::vector<Triple> out;
    out.reserve(statements_.size());
    for (const auto& [t, _] : statements_) out.push_back(t);
    return out;
  }

  std::vector<ScoredTriple> scored() const {
    std::vector<ScoredTriple> out;
    out.reserve(statements_.size());
    for (const auto& [t, s] : statements_) {
      out.push_back(ScoredTriple{t, s.confidence, s.source_id, s.predicted});
    }
    return out;
  }

  std::vector<Triple> schema_statements() const {
    std::vector<Triple> out;
    for (const auto& [t, _] : statements_) {
      if (is_schema_triple(t)) out.push_back(t);
    }
    return out;
  }

  std::vector<ScoredTriple> data_statements() const {
    std::vector<ScoredTriple> out;
    for (const auto& [t, s] : statements_) {
      if (!is_schema_triple(t)) out.push_back(ScoredTriple{t, s.confidence, s.source_id, s.predicted});
    }
    return out;
  }

  std::map<Triple, std::string> provenance() const {
    std::map<Triple, std::string> out;
    for (const auto& [t, s] : statements_) {
      if (s.source_id) out.emplace(t, *s.source_id);
    }
    return out;
  }

  // All subject and object terms.
  std::set<Term> nodes() const {
    std::set<Term> out;
    for (const auto& [t, _] : statements_) {
      out.insert(t.subject);
      out.insert(t.object);
    }
    return out;
  }

  // Entity -> directly asserted classes (meta-class declarations excluded).
  std::map<Term, std::set<std::string>> class_assertions() const {
    std::map<Term, std::set<std::string>> out;
    for (const auto& [t, _] : statements_) {
      if (is_type_assertion(t) && !vocab::is_meta_class(t.object.value)) {
        out[t.subject].insert(t.object.value);
      }
    }
    return out;
  }

  // Classes used by type assertions that the graph's own schema statements
  // never declare (neither as owl:Class / rdfs:Class nor in a subclass edge).
  std::set<std::string> unknown_classes() const {
    std::set<std::string> declared;
    for (const auto& [t, _] : statements_) {
      if (!t.predicate.is_iri()) continue;
      if (t.predicate.value == vocab::kSubClassOf) {
        if (t.subject.is_iri()) declared.insert(t.subject.value);
        if (t.object.is_iri()) declared.insert(t.object.value);
      } else if (is_type_assertion(t) &&
                 (t.object.value == vocab::kOwlClass || t.object.value == vocab::kRdfsClass)) {
        declared.insert(t.subject.value);
      }
    }
    std::set<std::string> unknown;
    for (const auto& [_, classes] : class_assertions()) {
      for (const auto& c : classes) {
        if (!declared.count(c)) unknown.insert(c);
      }
    }
    return unknown;
  }

  friend bool operator==(const KnowledgeGraph&, const KnowledgeGraph&) = default;

 private:
  Map statements_;
};

inline KnowledgeGraph add_triple(KnowledgeGraph kg, const ScoredTriple& t) {
  kg.add(t);
  return kg;
}

inline KnowledgeGraph graph_from(const std::vector<ScoredTriple>& triples) {
  KnowledgeGraph kg;
  for (const auto& t : triples) kg.add(t);
  return kg;
}

inline KnowledgeGraph graph_from(const std::vector<Triple>& triples, double confidence = 1.0) {
  KnowledgeGraph kg;
  for (const auto& t : triples) kg.add(t, confidence);
  return kg;
}

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
};

}  // namespace detail

// Partition of all subject/object nodes by undirected reachability. Each
// component is sorted; components are ordered by size descending, then by
// their smallest member.
inline std::vector<std::vector<Term>> connected_components(const KnowledgeGraph& kg) {
  std::vector<Term> nodes;
  {
    auto set = kg.nodes();
    nodes.assign(set.begin(), set.end());
  }
  auto index_of = [&](const Term& t) {
    return static_cast<std::size_t>(
        std::lower_bound(nodes.begin(), nodes.end(), t) - nodes.begin());
  };
  detail::UnionFind uf(nodes.size());
  for (const auto& [t, _] : kg.statements()) uf.unite(index_of(t.subject), index_of(t.object));

  std::map<std::size_t, std::vector<Term>> groups;
  for (std::size_t i = 0; i < nodes.size(); ++i) groups[uf.find(i)].push_back(nodes[i]);

  std::vector<std::vector<Term>> out;
  out.reserve(groups.size());
  for (auto& [_, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  return out;
}

}  // namespace ontogen
