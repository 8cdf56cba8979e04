#pragma once

#include <map>
#include <string>

#include "ontogen/knowledge_graph.hpp"
#include "ontogen/vocab.hpp"

namespace ontogen {

namespace detail {

inline std::string dot_escape(const std::string& v) {
  std::string out;
  out.reserve(v.size());
  for (char c : v) {
    if (c == '"' || c == '\\') {
      out.push_back('\\');
      out.push_back(c);
    } else if (c == '\n') {
      out += "\\n";
    } else if (c == '\r') {
      out += "\\r";
    } else {
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace detail

// Graphviz digraph. One node per distinct subject/object term (labelled with
// the term value, in term order), one edge per statement (labelled with the
// predicate's local name, in statement order).
inline std::string export_dot(const KnowledgeGraph& kg) {
  std::map<Term, std::size_t> ids;
  for (const auto& node : kg.nodes()) ids.emplace(node, ids.size());

  std::string out = "digraph kg {\n";
  for (const auto& [node, id] : ids) {
    out += "  n" + std::to_string(id) + " [label=\"" + detail::dot_escape(node.value) + "\"";
    if (node.is_literal()) out += ", shape=box";
    out += "];\n";
  }
  for (const auto& [t, _] : kg.statements()) {
    out += "  n" + std::to_string(ids.at(t.subject)) + " -> n" + std::to_string(ids.at(t.object)) +
           " [label=\"" + detail::dot_escape(std::string(vocab::local_name(t.predicate.value))) + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace ontogen
