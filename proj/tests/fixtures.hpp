// Generated graphs with known ground truth for the correction and
// consistency tests.
#pragma once

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ontogen/knowledge_graph.hpp"
#include "ontogen/ontology_schema.hpp"

namespace fixtures {

using namespace ontogen;

inline std::string ns(const std::string& local) { return "http://fx.org/" + local; }
inline Term node(const std::string& local) { return iri(ns(local)); }
inline Triple type_of(const std::string& e, const std::string& c) {
  return Triple{node(e), iri(std::string(vocab::kType)), node(c)};
}
inline Triple rel(const std::string& s, const std::string& p, const std::string& o) {
  return Triple{node(s), node(p), node(o)};
}

// ---------------------------------------------------------------------------
// Disjointness fixture

inline OntologySchema correction_reference() {
  OntologySchema s;
  for (auto c : {"Agent", "Person", "Organisation", "Location", "City", "Country"}) s.add_class(ns(c));
  s.add_subclass(ns("Person"), ns("Agent"));
  s.add_subclass(ns("Organisation"), ns("Agent"));
  s.add_subclass(ns("City"), ns("Location"));
  s.add_subclass(ns("Country"), ns("Location"));
  s.add_disjoint(ns("Agent"), ns("Location"));
  s.add_domain(ns("worksFor"), ns("Person"));
  s.add_range(ns("worksFor"), ns("Organisation"));
  s.add_domain(ns("headquarteredIn"), ns("Organisation"));
  s.add_range(ns("headquarteredIn"), ns("City"));
  s.add_domain(ns("partOf"), ns("Location"));
  s.add_range(ns("partOf"), ns("Location"));
  return s;
}

struct CorrectionFixture {
  KnowledgeGraph graph;
  std::set<Triple> planted;
};

// At least `clean_target` consistent statements plus k planted triples that
// put a Person or Organisation where the reference requires a Location (or
// the reverse). Type assertions carry higher confidence than any planted
// triple, so the planted triple is always the one to go.
inline CorrectionFixture correction_fixture(std::uint64_t seed, std::size_t k, std::size_t clean_target = 500) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> conf(0.6, 0.9);
  CorrectionFixture f;
  auto& g = f.graph;
  const std::size_t people = 120, orgs = 30, cities = 25, countries = 6;
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  auto P = [](std::size_t i) { return "person" + std::to_string(i); };
  auto O = [](std::size_t i) { return "org" + std::to_string(i); };
  auto C = [](std::size_t i) { return "city" + std::to_string(i); };
  auto N = [](std::size_t i) { return "country" + std::to_string(i); };

  for (std::size_t i = 0; i < people; ++i) g.add(type_of(P(i), "Person"), 0.97);
  for (std::size_t i = 0; i < orgs; ++i) g.add(type_of(O(i), "Organisation"), 0.97);
  for (std::size_t i = 0; i < cities; ++i) g.add(type_of(C(i), "City"), 0.97);
  for (std::size_t i = 0; i < countries; ++i) g.add(type_of(N(i), "Country"), 0.97);
  for (std::size_t i = 0; i < cities; ++i) g.add(rel(C(i), "partOf", N(pick(countries))), conf(rng));
  for (std::size_t i = 0; i < orgs; ++i) g.add(rel(O(i), "headquarteredIn", C(pick(cities))), conf(rng));
  while (g.size() < clean_target) {
    g.add(rel(P(pick(people)), "worksFor", O(pick(orgs))), conf(rng));
    // Untyped extras and predicates the reference does not constrain.
    g.add(rel(P(pick(people)), "knows", P(pick(people))), conf(rng));
  }

  while (f.planted.size() < k) {
    Triple t;
    switch (rng() % 4) {
      case 0: t = rel(P(pick(people)), "partOf", N(pick(countries))); break;      // domain
      case 1: t = rel(P(pick(people)), "worksFor", C(pick(cities))); break;       // range
      case 2: t = rel(C(pick(cities)), "headquarteredIn", C(pick(cities))); break;  // domain
      default: t = rel(O(pick(orgs)), "partOf", O(pick(orgs))); break;            // both
    }
    if (g.contains(t)) continue;
    g.add(t, conf(rng));
    f.planted.insert(t);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Consistency fixture

struct ConsistencyFixture {
  KnowledgeGraph okg;
  OntologySchema on;
  // Ground truth kept apart from the library's own views.
  std::map<std::string, std::string> parent;             // OKG subclass tree, child -> parent
  std::map<std::string, std::string> on_parent;          // On subclass tree
  std::map<std::string, std::set<std::string>> domain;   // On property -> domain classes
  std::set<std::string> on_classes;
  std::map<std::string, std::string> instance_class;     // entity -> asserted class
};

inline ConsistencyFixture consistency_fixture(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  ConsistencyFixture f;

  const std::size_t n_classes = 4 + pick(6);
  std::vector<std::string> classes;
  for (std::size_t i = 0; i < n_classes; ++i) classes.push_back(ns("C" + std::to_string(i)));
  for (std::size_t i = 1; i < n_classes; ++i) {
    if (rng() % 3) f.parent[classes[i]] = classes[pick(i)];
  }

  // On shares some of the classes and mirrors part of the hierarchy.
  for (const auto& c : classes) {
    if (rng() % 4) f.on_classes.insert(c);
  }
  for (const auto& [child, par] : f.parent) {
    if (f.on_classes.count(child) && f.on_classes.count(par) && rng() % 2) f.on_parent[child] = par;
  }

  const std::size_t n_props = 3 + pick(8);
  std::vector<std::string> props;
  for (std::size_t i = 0; i < n_props; ++i) props.push_back(ns("p" + std::to_string(i)));
  std::vector<std::string> on_class_list(f.on_classes.begin(), f.on_classes.end());
  for (const auto& p : props) {
    if (rng() % 5 == 0) continue;  // not in On at all
    auto& d = f.domain[p];
    if (!on_class_list.empty() && rng() % 3) {
      d.insert(on_class_list[pick(on_class_list.size())]);
      if (rng() % 4 == 0) d.insert(on_class_list[pick(on_class_list.size())]);
    }
  }

  for (const auto& c : f.on_classes) f.on.add_class(c);
  for (const auto& [child, par] : f.on_parent) f.on.add_subclass(child, par);
  for (const auto& [p, d] : f.domain) {
    f.on.declare_property(p);
    for (const auto& c : d) f.on.add_domain(p, c);
  }

  for (const auto& [child, par] : f.parent) f.okg.add(Triple{iri(child), iri(std::string(vocab::kSubClassOf)), iri(par)});
  const std::size_t n_entities = 10 + pick(30);
  std::vector<std::string> entities;
  for (std::size_t i = 0; i < n_entities; ++i) {
    auto e = ns("e" + std::to_string(i));
    entities.push_back(e);
    if (rng() % 6) {
      auto c = classes[pick(n_classes)];
      f.instance_class[e] = c;
      f.okg.add(Triple{iri(e), iri(std::string(vocab::kType)), iri(c)}, 0.9);
    }
  }
  const std::size_t n_triples = 20 + pick(80);
  for (std::size_t i = 0; i < n_triples; ++i) {
    Term s = iri(entities[pick(n_entities)]);
    Term p = iri(props[pick(n_props)]);
    Term o = rng() % 3 ? iri(entities[pick(n_entities)]) : literal("v" + std::to_string(pick(5)));
    f.okg.add(Triple{s, p, o}, 0.8);
  }
  return f;
}

// Offending (concept, property) pairs counted from the fixture's own tables.
inline std::size_t brute_force_epsilon(const ConsistencyFixture& f) {
  auto up = [](const std::map<std::string, std::string>& parent, std::string c) {
    std::set<std::string> out{c};
    for (auto it = parent.find(c); it != parent.end(); it = parent.find(it->second)) out.insert(it->second);
    return out;
  };
  std::set<std::string> concepts;
  for (const auto& [child, par] : f.parent) {
    concepts.insert(child);
    concepts.insert(par);
  }
  for (const auto& [_, c] : f.instance_class) concepts.insert(c);

  std::size_t total = 0;
  for (const auto& c : concepts) {
    std::set<std::string> used;
    for (const auto& [t, _] : f.okg.statements()) {
      if (t.predicate.value == vocab::kType || t.predicate.value == vocab::kSubClassOf) continue;
      auto it = f.instance_class.find(t.subject.value);
      if (it != f.instance_class.end() && up(f.parent, it->second).count(c)) used.insert(t.predicate.value);
    }
    auto c_up = f.on_classes.count(c) ? up(f.on_parent, c) : std::set<std::string>{c};
    for (const auto& p : used) {
      auto d = f.domain.find(p);
      bool allowed = false;
      if (d != f.domain.end()) {
        allowed = d->second.empty();
        for (const auto& x : d->second) allowed = allowed || c_up.count(x);
      }
      if (!allowed) ++total;
    }
  }
  return total;
}

}  // namespace fixtures
