#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ontogen/dot_export.hpp"
#include "ontogen/error.hpp"
#include "ontogen/knowledge_graph.hpp"
#include "ontogen/ntriples.hpp"
#include "ontogen/ontology_schema.hpp"
#include "ontogen/scored_jsonl.hpp"
#include "ontogen/turtle.hpp"

namespace ontogen {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
  if (!out) throw Error("write failed for " + path.string());
}

struct LoadedGraph {
  KnowledgeGraph graph;
  std::vector<Diagnostic> diagnostics;
};

// Loads a graph by extension: .jsonl (scored records), .nt (confidence 1.0),
// .ttl (confidence 1.0).
inline LoadedGraph load_graph(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  auto bytes = read_file(path);
  LoadedGraph out;
  if (ext == ".jsonl") {
    auto r = parse_scored_jsonl(bytes);
    for (const auto& st : r.triples) out.graph.add(st);
    out.diagnostics = std::move(r.diagnostics);
  } else if (ext == ".nt") {
    auto r = parse_ntriples(bytes);
    for (const auto& t : r.triples) out.graph.add(t);
    out.diagnostics = std::move(r.diagnostics);
  } else if (ext == ".ttl") {
    for (const auto& t : parse_turtle(bytes)) out.graph.add(t);
  } else {
    throw Error("unsupported graph format '" + ext + "' for " + path.string());
  }
  return out;
}

// Loads and validates an ontology from .ttl, .nt or .jsonl. Reference facts
// loaded from .jsonl keep their confidence.
inline OntologySchema load_schema(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  OntologySchema schema;
  if (ext == ".ttl") {
    schema = OntologySchema::from_triples(parse_turtle(read_file(path)));
  } else {
    auto loaded = load_graph(path);
    if (!loaded.diagnostics.empty()) {
      const auto& d = loaded.diagnostics.front();
      throw ParseError(path.string() + ": " + d.message, d.line);
    }
    for (const auto& [t, s] : loaded.graph.statements()) schema.absorb(t, s.confidence);
  }
  schema.validate();
  return schema;
}

// Three whitespace-separated columns per line: head, relation, tail
// (WN18 / FB15k layout). Names become IRIs as written.
inline std::vector<Triple> parse_tsv_triples(std::string_view text) {
  std::vector<Triple> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::istringstream fields(line);
    std::string h, r, t, extra;
    if (!(fields >> h >> r >> t) || (fields >> extra)) {
      throw ParseError("expected 3 columns", line_no);
    }
    try {
      out.push_back(make_triple(h, r, t));
    } catch (const Error& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return out;
}

// Writes `<stem>.nt` and `<stem>.jsonl` next to each other.
inline void write_graph(const std::filesystem::path& nt_path, const KnowledgeGraph& kg) {
  write_file(nt_path, serialize_ntriples(kg.triples()));
  auto jsonl = nt_path;
  jsonl.replace_extension(".jsonl");
  write_file(jsonl, serialize_scored_jsonl(kg));
}

}  // namespace ontogen
