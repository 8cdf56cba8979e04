#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "ontogen/error.hpp"

namespace ontogen {

enum class TermKind { kIri = 0, kBlank = 1, kLiteral = 2 };

// An RDF term. Construct through the factory functions so that the
// per-kind invariants hold.
struct Term {
  TermKind kind = TermKind::kIri;
  std::string value;
  std::optional<std::string> datatype;  // literals only
  std::optional<std::string> language;  // literals only

  bool is_iri() const { return kind == TermKind::kIri; }
  bool is_blank() const { return kind == TermKind::kBlank; }
  bool is_literal() const { return kind == TermKind::kLiteral; }

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

// Characters that may not appear inside an IRI reference.
inline bool is_iri_forbidden(unsigned char c) {
  if (c <= 0x20) return true;
  switch (c) {
    case '<': case '>': case '"': case '{': case '}':
    case '|': case '^': case '`': case '\\':
      return true;
    default:
      return false;
  }
}

inline bool is_valid_iri(std::string_view v) {
  if (v.empty()) return false;
  for (unsigned char c : v) {
    if (is_iri_forbidden(c)) return false;
  }
  return true;
}

inline bool is_valid_blank_label(std::string_view v) {
  if (v.empty()) return false;
  auto ok = [](unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.';
  };
  for (unsigned char c : v) {
    if (!ok(c)) return false;
  }
  return v.front() != '-' && v.front() != '.' && v.back() != '.';
}

inline bool is_valid_language_tag(std::string_view v) {
  if (v.empty()) return false;
  bool first_segment = true;
  std::size_t segment_len = 0;
  for (unsigned char c : v) {
    if (c == '-') {
      if (segment_len == 0) return false;
      first_segment = false;
      segment_len = 0;
      continue;
    }
    bool alpha = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    bool digit = c >= '0' && c <= '9';
    if (!(alpha || (digit && !first_segment))) return false;
    ++segment_len;
  }
  return segment_len > 0;
}

inline Term iri(std::string value) {
  if (!is_valid_iri(value)) throw Error("invalid IRI: '" + value + "'");
  return Term{TermKind::kIri, std::move(value), std::nullopt, std::nullopt};
}

inline Term iri(std::string_view value) { return iri(std::string(value)); }
inline Term iri(const char* value) { return iri(std::string(value)); }

inline Term blank(std::string label) {
  if (!is_valid_blank_label(label)) {
    throw Error("invalid blank node label: '" + label + "'");
  }
  return Term{TermKind::kBlank, std::move(label), std::nullopt, std::nullopt};
}

inline Term literal(std::string value) {
  return Term{TermKind::kLiteral, std::move(value), std::nullopt, std::nullopt};
}

inline Term typed_literal(std::string value, std::string datatype) {
  if (!is_valid_iri(datatype)) throw Error("invalid datatype IRI: '" + datatype + "'");
  return Term{TermKind::kLiteral, std::move(value), std::move(datatype), std::nullopt};
}

inline Term lang_literal(std::string value, std::string language) {
  if (!is_valid_language_tag(language)) {
    throw Error("invalid language tag: '" + language + "'");
  }
  return Term{TermKind::kLiteral, std::move(value), std::nullopt, std::move(language)};
}

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// Throws Error when the triple breaks a positional rule.
inline void check_well_formed(const Triple& t) {
  if (t.subject.is_literal()) throw Error("literal in subject position: \"" + t.subject.value + "\"");
  if (!t.predicate.is_iri()) throw Error("predicate must be an IRI: '" + t.predicate.value + "'");
  if (t.subject.is_iri() && !is_valid_iri(t.subject.value)) throw Error("invalid subject IRI");
  if (t.predicate.is_iri() && !is_valid_iri(t.predicate.value)) throw Error("invalid predicate IRI");
  if (t.object.is_iri() && !is_valid_iri(t.object.value)) throw Error("invalid object IRI");
  if (t.object.is_literal() && t.object.datatype && t.object.language) {
    throw Error("literal has both datatype and language tag");
  }
}

inline Triple make_triple(Term s, Term p, Term o) {
  Triple t{std::move(s), std::move(p), std::move(o)};
  check_well_formed(t);
  return t;
}

// Convenience for the common all-IRI case.
inline Triple make_triple(std::string_view s, std::string_view p, std::string_view o) {
  return make_triple(iri(s), iri(p), iri(o));
}

struct ScoredTriple {
  Triple triple;
  double confidence = 1.0;
  std::optional<std::string> source_id;
  bool predicted = false;
};

inline ScoredTriple make_scored(Triple t, double confidence,
                                std::optional<std::string> source = std::nullopt) {
  if (!(confidence >= 0.0 && confidence <= 1.0)) {
    throw Error("confidence out of [0,1]: " + std::to_string(confidence));
  }
  return ScoredTriple{std::move(t), confidence, std::move(source), false};
}

}  // namespace ontogen
