#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ontogen/knowledge_graph.hpp"
#include "ontogen/ntriples.hpp"
#include "ontogen/term.hpp"

namespace ontogen {

// Line-delimited scored-triple records, one JSON object per line:
//
//   {"s": "...", "p": "...", "o": "...", "o_kind": "iri"|"literal"|"blank",
//    "conf": 0.917, "id": "optional", "o_dt": "optional datatype IRI",
//    "o_lang": "optional tag", "predicted": optional bool}
//
// A subject starting with "_:" is a blank node, otherwise an IRI.
struct ScoredJsonlResult {
  std::vector<ScoredTriple> triples;
  std::vector<Diagnostic> diagnostics;
};

namespace detail {

inline Term node_from_string(const std::string& v) {
  if (v.rfind("_:", 0) == 0) return blank(v.substr(2));
  return iri(v);
}

inline ScoredTriple parse_scored_record(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error("record is not a JSON object");
  auto str = [&](const char* key) -> std::string {
    auto it = j.find(key);
    if (it == j.end()) throw Error(std::string("missing key '") + key + "'");
    if (!it->is_string()) throw Error(std::string("key '") + key + "' must be a string");
    return it->get<std::string>();
  };
  auto conf_it = j.find("conf");
  if (conf_it == j.end()) throw Error("missing key 'conf'");
  if (!conf_it->is_number()) throw Error("key 'conf' must be a number");
  double conf = conf_it->get<double>();
  if (!(conf >= 0.0 && conf <= 1.0)) throw Error("confidence " + conf_it->dump() + " outside [0,1]");

  Term s = node_from_string(str("s"));
  Term p = iri(str("p"));
  std::string o = str("o");
  std::string kind = str("o_kind");
  Term obj;
  if (kind == "iri") {
    obj = iri(o);
  } else if (kind == "blank") {
    obj = blank(o.rfind("_:", 0) == 0 ? o.substr(2) : o);
  } else if (kind == "literal") {
    if (j.contains("o_dt") && j.contains("o_lang")) throw Error("literal has both o_dt and o_lang");
    if (j.contains("o_dt")) {
      obj = typed_literal(o, str("o_dt"));
    } else if (j.contains("o_lang")) {
      obj = lang_literal(o, str("o_lang"));
    } else {
      obj = literal(o);
    }
  } else {
    throw Error("o_kind must be 'iri', 'literal' or 'blank', got '" + kind + "'");
  }

  ScoredTriple st{Triple{std::move(s), std::move(p), std::move(obj)}, conf, std::nullopt, false};
  check_well_formed(st.triple);
  if (auto it = j.find("id"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) throw Error("key 'id' must be a string");
    st.source_id = it->get<std::string>();
  }
  if (auto it = j.find("predicted"); it != j.end()) {
    if (!it->is_boolean()) throw Error("key 'predicted' must be a boolean");
    st.predicted = it->get<bool>();
  }
  return st;
}

}  // namespace detail

inline ScoredJsonlResult parse_scored_jsonl(std::string_view bytes) {
  ScoredJsonlResult result;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= bytes.size()) {
    auto end = bytes.find('\n', start);
    if (end == std::string_view::npos) end = bytes.size();
    std::string_view line = bytes.substr(start, end - start);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") != std::string_view::npos) {
      try {
        result.triples.push_back(detail::parse_scored_record(line));
      } catch (const Error& e) {
        result.diagnostics.push_back({line_no, e.what()});
      }
    }
    if (end == bytes.size()) break;
    start = end + 1;
  }
  return result;
}

inline nlohmann::json to_json(const ScoredTriple& st) {
  nlohmann::json j;
  const auto& t = st.triple;
  j["s"] = t.subject.is_blank() ? "_:" + t.subject.value : t.subject.value;
  j["p"] = t.predicate.value;
  j["o"] = t.object.value;
  j["o_kind"] = t.object.is_iri() ? "iri" : t.object.is_blank() ? "blank" : "literal";
  if (t.object.datatype) j["o_dt"] = *t.object.datatype;
  if (t.object.language) j["o_lang"] = *t.object.language;
  j["conf"] = st.confidence;
  if (st.source_id) j["id"] = *st.source_id;
  if (st.predicted) j["predicted"] = true;
  return j;
}

// Records sorted by their N-Triples statement text.
inline std::string serialize_scored_jsonl(const std::vector<ScoredTriple>& triples) {
  std::vector<std::pair<std::string, const ScoredTriple*>> keyed;
  keyed.reserve(triples.size());
  for (const auto& st : triples) keyed.emplace_back(to_ntriples(st.triple), &st);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out;
  for (const auto& [_, st] : keyed) {
    out += to_json(*st).dump();
    out += '\n';
  }
  return out;
}

inline std::string serialize_scored_jsonl(const KnowledgeGraph& kg) {
  return serialize_scored_jsonl(kg.scored());
}

}  // namespace ontogen
