#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ontogen/completion.hpp"
#include "ontogen/consistency.hpp"
#include "ontogen/correction.hpp"
#include "ontogen/ntriples.hpp"
#include "ontogen/refinement.hpp"

namespace ontogen {

using Json = nlohmann::json;

inline std::string statement_text(const Triple& t) {
  return to_ntriples(t.subject) + " " + to_ntriples(t.predicate) + " " + to_ntriples(t.object) + " .";
}

inline Json scored_entry(const ScoredTriple& st) {
  Json j{{"triple", statement_text(st.triple)}, {"confidence", st.confidence}};
  if (st.source_id) j["id"] = *st.source_id;
  return j;
}

inline Json to_json(const RefinementReport& r) {
  Json j;
  j["input"] = r.input;
  j["kept"] = r.kept;
  j["band_size"] = r.band_size;
  j["warnings"] = r.warnings;

  j["removed_by_threshold"] = Json::array();
  for (const auto& st : r.removed_by_threshold) j["removed_by_threshold"].push_back(scored_entry(st));

  j["removed_by_lof"] = Json::array();
  for (const auto& x : r.removed_by_lof) {
    auto e = scored_entry(x.triple);
    e["lof"] = x.score;
    j["removed_by_lof"].push_back(e);
  }

  j["removed_implausible"] = Json::array();
  for (const auto& f : r.removed_implausible) {
    auto e = scored_entry(f.triple);
    e["combo"] = {std::get<0>(f.combo), std::get<1>(f.combo), std::get<2>(f.combo)};
    e["combo_count"] = f.combo_count;
    e["dominant_count"] = f.dominant_count;
    j["removed_implausible"].push_back(e);
  }

  j["removed_disconnected"] = Json::array();
  for (const auto& st : r.removed_disconnected) j["removed_disconnected"].push_back(scored_entry(st));
  j["disconnected_nodes"] = Json::array();
  for (const auto& n : r.disconnected_nodes) j["disconnected_nodes"].push_back(to_ntriples(n));
  return j;
}

inline Json to_json(const Violation& v) {
  Json j{{"triple", statement_text(v.triple)}, {"kind", kind_name(v.kind)}};
  Json ev = Json::object();
  const auto& e = v.evidence;
  if (v.kind == ViolationKind::kDisjointness) {
    if (e.type_assertion) ev["type_assertion"] = statement_text(*e.type_assertion);
    ev["asserted_class"] = e.asserted_class;
    ev["declared_class"] = e.declared_class;
    ev["position"] = e.position;
    if (e.axiom) ev["axiom"] = {e.axiom->first, e.axiom->second};
  } else {
    if (e.reference_fact) ev["reference_fact"] = statement_text(*e.reference_fact);
    ev["reference_confidence"] = e.reference_confidence;
  }
  j["evidence"] = ev;
  return j;
}

inline Json to_json(const CorrectionReport& r) {
  Json j;
  j["checked"] = r.checked;
  j["rounds"] = r.rounds;
  j["violations"] = Json::array();
  for (const auto& v : r.violations) j["violations"].push_back(to_json(v));
  j["deleted"] = Json::array();
  for (const auto& t : r.deleted) j["deleted"].push_back(statement_text(t));
  j["replaced"] = Json::array();
  for (const auto& [from, to] : r.replaced) {
    j["replaced"].push_back({{"old", statement_text(from)}, {"new", statement_text(to)}});
  }
  return j;
}

inline Json to_json(const RankMetrics& m) {
  Json j{{"mrr", m.mrr}, {"evaluated", m.evaluated}};
  for (const auto& [k, v] : m.hits_at) j["hits@" + std::to_string(k)] = v;
  return j;
}

inline Json to_json(const ConsistencyReport& r) {
  Json j;
  j["input"] = r.input;
  j["retained"] = r.retained;
  j["epsilon_total"] = r.epsilon_total;
  j["per_concept"] = Json::array();
  for (const auto& c : r.per_concept) {
    j["per_concept"].push_back({{"concept", c.concept_iri},
                                {"epsilon_c", c.epsilon_c},
                                {"offending_properties", c.offending_properties},
                                {"affected_triples", c.affected_triples.size()}});
  }
  j["violations"] = Json::array();
  for (const auto& v : r.violations) {
    j["violations"].push_back(
        {{"triple", statement_text(v.triple)}, {"position", v.position}, {"declared", v.declared}});
  }
  j["removed"] = Json::array();
  for (const auto& x : r.removed_triples) {
    j["removed"].push_back({{"triple", statement_text(x.triple)}, {"reason", x.reason}});
  }
  return j;
}

}  // namespace ontogen
