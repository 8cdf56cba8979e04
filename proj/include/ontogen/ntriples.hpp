#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "ontogen/error.hpp"
#include "ontogen/term.hpp"
#include "ontogen/utf8.hpp"

namespace ontogen {

struct Diagnostic {
  std::size_t line = 0;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct NTriplesResult {
  std::vector<Triple> triples;
  std::vector<Diagnostic> diagnostics;
};

// ---------------------------------------------------------------------------
// Term serialization

inline void append_escaped_literal(std::string& out, std::string_view v) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  for (char ch : v) {
    auto c = static_cast<unsigned char>(ch);
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20 || c == 0x7F) {
          out += "\\u00";
          out.push_back(kHex[c >> 4]);
          out.push_back(kHex[c & 0xF]);
        } else {
          out.push_back(ch);
        }
    }
  }
}

inline std::string to_ntriples(const Term& t) {
  std::string out;
  switch (t.kind) {
    case TermKind::kIri:
      out.reserve(t.value.size() + 2);
      out += '<';
      out += t.value;
      out += '>';
      break;
    case TermKind::kBlank:
      out = "_:" + t.value;
      break;
    case TermKind::kLiteral:
      out += '"';
      append_escaped_literal(out, t.value);
      out += '"';
      if (t.datatype) {
        out += "^^<";
        out += *t.datatype;
        out += '>';
      } else if (t.language) {
        out += '@';
        out += *t.language;
      }
      break;
  }
  return out;
}

inline std::string to_ntriples(const Triple& t) {
  return to_ntriples(t.subject) + ' ' + to_ntriples(t.predicate) + ' ' + to_ntriples(t.object) + " .";
}

// Canonical form: duplicates removed, sorted by the serialized
// (subject, predicate, object) strings, one statement per line.
inline std::string serialize_ntriples(const std::vector<Triple>& triples) {
  using Key = std::array<std::string, 3>;
  std::vector<Key> keys;
  keys.reserve(triples.size());
  for (const auto& t : triples) {
    keys.push_back({to_ntriples(t.subject), to_ntriples(t.predicate), to_ntriples(t.object)});
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::string out;
  for (const auto& k : keys) {
    out += k[0];
    out += ' ';
    out += k[1];
    out += ' ';
    out += k[2];
    out += " .\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

// Cursor over one statement. Methods throw Error with a reason; the caller
// converts that into a line diagnostic.
class TermCursor {
 public:
  explicit TermCursor(std::string_view s) : s_(s) {}

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  std::size_t pos() const { return pos_; }

  void skip_ws() {
    while (!at_end() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  void expect(char c) {
    if (peek() != c) {
      throw Error(std::string("expected '") + c + "' at column " + std::to_string(pos_ + 1));
    }
    ++pos_;
  }

  std::string read_iri_ref() {
    expect('<');
    auto end = s_.find('>', pos_);
    if (end == std::string_view::npos) throw Error("unterminated IRI");
    std::string v(s_.substr(pos_, end - pos_));
    if (!is_valid_iri(v)) throw Error("invalid IRI <" + v + ">");
    pos_ = end + 1;
    return v;
  }

  std::string read_blank_label() {
    expect('_');
    expect(':');
    std::size_t start = pos_;
    while (!at_end()) {
      auto c = static_cast<unsigned char>(s_[pos_]);
      bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                c == '_' || c == '-' || c == '.';
      if (!ok) break;
      ++pos_;
    }
    // A trailing '.' terminates the statement rather than the label.
    while (pos_ > start && s_[pos_ - 1] == '.') --pos_;
    std::string v(s_.substr(start, pos_ - start));
    if (!is_valid_blank_label(v)) throw Error("invalid blank node label '" + v + "'");
    return v;
  }

  static int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  }

  std::uint32_t read_hex(std::size_t digits) {
    if (pos_ + digits > s_.size()) throw Error("truncated unicode escape");
    std::uint32_t cp = 0;
    for (std::size_t i = 0; i < digits; ++i) {
      int h = hex_value(s_[pos_ + i]);
      if (h < 0) throw Error("bad hex digit in unicode escape");
      cp = (cp << 4) | static_cast<std::uint32_t>(h);
    }
    pos_ += digits;
    if ((cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) throw Error("invalid code point in escape");
    return cp;
  }

  std::string read_quoted() {
    expect('"');
    std::string v;
    while (true) {
      if (at_end()) throw Error("unterminated literal");
      char c = s_[pos_++];
      if (c == '"') break;
      if (c != '\\') {
        v.push_back(c);
        continue;
      }
      if (at_end()) throw Error("dangling escape");
      char e = s_[pos_++];
      switch (e) {
        case 't': v.push_back('\t'); break;
        case 'b': v.push_back('\b'); break;
        case 'n': v.push_back('\n'); break;
        case 'r': v.push_back('\r'); break;
        case 'f': v.push_back('\f'); break;
        case '"': v.push_back('"'); break;
        case '\'': v.push_back('\''); break;
        case '\\': v.push_back('\\'); break;
        case 'u': utf8::append(v, read_hex(4)); break;
        case 'U': utf8::append(v, read_hex(8)); break;
        default: throw Error(std::string("unknown escape \\") + e);
      }
    }
    return v;
  }

  Term read_literal() {
    std::string v = read_quoted();
    if (peek() == '^') {
      expect('^');
      expect('^');
      return typed_literal(std::move(v), read_iri_ref());
    }
    if (peek() == '@') {
      ++pos_;
      std::size_t start = pos_;
      while (!at_end()) {
        auto c = static_cast<unsigned char>(s_[pos_]);
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-';
        if (!ok) break;
        ++pos_;
      }
      return lang_literal(std::move(v), std::string(s_.substr(start, pos_ - start)));
    }
    return literal(std::move(v));
  }

  Term read_term() {
    switch (peek()) {
      case '<': return iri(read_iri_ref());
      case '_': return blank(read_blank_label());
      case '"': return read_literal();
      case '\0': throw Error("unexpected end of statement");
      default:
        throw Error(std::string("unexpected character '") + peek() + "' at column " +
                    std::to_string(pos_ + 1));
    }
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

inline Triple parse_ntriples_statement(std::string_view line) {
  TermCursor cur(line);
  cur.skip_ws();
  Term s = cur.read_term();
  if (s.is_literal()) throw Error("literal in subject position");
  cur.skip_ws();
  if (cur.peek() != '<') throw Error("predicate must be an IRI");
  Term p = cur.read_term();
  cur.skip_ws();
  Term o = cur.read_term();
  cur.skip_ws();
  cur.expect('.');
  cur.skip_ws();
  if (!cur.at_end() && cur.peek() != '#') throw Error("trailing content after '.'");
  return Triple{std::move(s), std::move(p), std::move(o)};
}

}  // namespace detail

// Parses an N-Triples document. Invalid lines become diagnostics; only
// invalid UTF-8 is a hard error (ParseError).
inline NTriplesResult parse_ntriples(std::string_view bytes) {
  if (auto bad = utf8::first_invalid(bytes)) {
    std::size_t line = 1 + static_cast<std::size_t>(std::count(bytes.begin(), bytes.begin() + *bad, '\n'));
    throw ParseError("input is not valid UTF-8 (byte offset " + std::to_string(*bad) + ")", line);
  }
  NTriplesResult result;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= bytes.size()) {
    auto end = bytes.find('\n', start);
    if (end == std::string_view::npos) end = bytes.size();
    std::string_view line = bytes.substr(start, end - start);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') {
      try {
        result.triples.push_back(detail::parse_ntriples_statement(line));
      } catch (const Error& e) {
        result.diagnostics.push_back({line_no, e.what()});
      }
    }
    if (end == bytes.size()) break;
    start = end + 1;
  }
  return result;
}

}  // namespace ontogen
