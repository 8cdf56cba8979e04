#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ontogen/error.hpp"
#include "ontogen/ntriples.hpp"
#include "ontogen/term.hpp"
#include "ontogen/utf8.hpp"
#include "ontogen/vocab.hpp"

namespace ontogen {

namespace detail {

// Read-only Turtle subset: @prefix / PREFIX, prefixed names, 'a', IRI refs,
// blank node labels, quoted literals with datatype or language, bare
// numbers and booleans, and ';' / ',' lists. No collections, no '[ ]',
// no @base, no long strings.
class TurtleParser {
 public:
  explicit TurtleParser(std::string_view s) : s_(s) {}

  std::vector<Triple> parse() {
    while (true) {
      skip();
      if (at_end()) break;
      if (starts_with_keyword("@prefix")) {
        pos_ += 7;
        prefix_directive(true);
      } else if (starts_with_keyword("PREFIX") || starts_with_keyword("prefix")) {
        pos_ += 6;
        prefix_directive(false);
      } else if (starts_with_keyword("@base") || starts_with_keyword("BASE")) {
        fail("@base is not supported");
      } else {
        statement();
      }
    }
    return std::move(out_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_); }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (s_[pos_] == '\n') ++line_;
    ++pos_;
  }

  void skip() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  bool starts_with_keyword(std::string_view kw) const {
    if (s_.substr(pos_, kw.size()) != kw) return false;
    char after = pos_ + kw.size() < s_.size() ? s_[pos_ + kw.size()] : ' ';
    return after == ' ' || after == '\t' || after == '\n' || after == '\r';
  }

  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  static bool is_pn_char(char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || c == '_' || c == '-' || c == '.' || u >= 0x80;
  }

  void prefix_directive(bool dotted) {
    skip();
    std::size_t start = pos_;
    while (!at_end() && peek() != ':' && is_pn_char(peek())) advance();
    if (peek() != ':') fail("expected ':' in prefix declaration");
    std::string name(s_.substr(start, pos_ - start));
    advance();
    skip();
    prefixes_[name] = iri_ref();
    if (dotted) expect('.');
  }

  std::string iri_ref() {
    if (peek() != '<') fail("expected '<'");
    advance();
    std::size_t start = pos_;
    while (!at_end() && peek() != '>') {
      if (peek() == '\n') fail("newline inside IRI");
      advance();
    }
    if (at_end()) fail("unterminated IRI");
    std::string v(s_.substr(start, pos_ - start));
    advance();
    if (!is_valid_iri(v)) fail("invalid IRI <" + v + ">");
    return v;
  }

  std::string prefixed_name() {
    std::size_t start = pos_;
    while (!at_end() && peek() != ':' && is_pn_char(peek())) advance();
    if (peek() != ':') fail("expected prefixed name");
    std::string prefix(s_.substr(start, pos_ - start));
    advance();
    std::size_t lstart = pos_;
    while (!at_end() && (is_pn_char(peek()) || peek() == ':' || peek() == '%')) advance();
    while (pos_ > lstart && s_[pos_ - 1] == '.') --pos_;
    std::string local(s_.substr(lstart, pos_ - lstart));
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) fail("undeclared prefix '" + prefix + ":'");
    std::string full = it->second + local;
    if (!is_valid_iri(full)) fail("invalid IRI from prefixed name " + prefix + ":" + local);
    return full;
  }

  std::string iri_or_pname() {
    skip();
    if (peek() == '<') return iri_ref();
    return prefixed_name();
  }

  Term subject() {
    skip();
    if (peek() == '_' && peek(1) == ':') return blank_node();
    if (peek() == '"' || peek() == '\'') fail("literal in subject position");
    if (peek() == '[' || peek() == '(') fail("anonymous nodes and collections are not supported");
    return iri(iri_or_pname());
  }

  Term blank_node() {
    advance();
    advance();
    std::size_t start = pos_;
    while (!at_end() && is_pn_char(peek())) advance();
    while (pos_ > start && s_[pos_ - 1] == '.') --pos_;
    std::string label(s_.substr(start, pos_ - start));
    if (!is_valid_blank_label(label)) fail("invalid blank node label '" + label + "'");
    return blank(label);
  }

  Term verb() {
    skip();
    if (peek() == 'a') {
      char after = peek(1);
      if (after == ' ' || after == '\t' || after == '\n' || after == '\r' || after == '<') {
        advance();
        return iri(std::string(vocab::kType));
      }
    }
    return iri(iri_or_pname());
  }

  std::string quoted() {
    char q = peek();
    advance();
    std::string v;
    while (true) {
      if (at_end()) fail("unterminated literal");
      char c = peek();
      if (c == '\n') fail("newline inside literal");
      advance();
      if (c == q) break;
      if (c != '\\') {
        v.push_back(c);
        continue;
      }
      if (at_end()) fail("dangling escape");
      char e = peek();
      advance();
      switch (e) {
        case 't': v.push_back('\t'); break;
        case 'b': v.push_back('\b'); break;
        case 'n': v.push_back('\n'); break;
        case 'r': v.push_back('\r'); break;
        case 'f': v.push_back('\f'); break;
        case '"': v.push_back('"'); break;
        case '\'': v.push_back('\''); break;
        case '\\': v.push_back('\\'); break;
        case 'u':
        case 'U': {
          std::size_t digits = e == 'u' ? 4 : 8;
          std::uint32_t cp = 0;
          for (std::size_t i = 0; i < digits; ++i) {
            int h = TermCursor::hex_value(peek());
            if (h < 0) fail("bad unicode escape");
            cp = (cp << 4) | static_cast<std::uint32_t>(h);
            advance();
          }
          if ((cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) fail("invalid code point");
          utf8::append(v, cp);
          break;
        }
        default:
          fail(std::string("unknown escape \\") + e);
      }
    }
    return v;
  }

  Term object() {
    skip();
    char c = peek();
    if (c == '_' && peek(1) == ':') return blank_node();
    if (c == '<') return iri(iri_ref());
    if (c == '"' || c == '\'') {
      std::string v = quoted();
      if (peek() == '^' && peek(1) == '^') {
        advance();
        advance();
        return typed_literal(std::move(v), iri_or_pname());
      }
      if (peek() == '@') {
        advance();
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-')) advance();
        std::string tag(s_.substr(start, pos_ - start));
        if (!is_valid_language_tag(tag)) fail("invalid language tag '" + tag + "'");
        return lang_literal(std::move(v), tag);
      }
      return literal(std::move(v));
    }
    if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) return number();
    if (starts_with_word("true") || starts_with_word("false")) {
      std::string v = peek() == 't' ? "true" : "false";
      pos_ += v.size();
      return typed_literal(v, std::string(vocab::kXsdBoolean));
    }
    if (c == '[' || c == '(') fail("anonymous nodes and collections are not supported");
    return iri(prefixed_name());
  }

  bool starts_with_word(std::string_view w) const {
    if (s_.substr(pos_, w.size()) != w) return false;
    char after = peek(w.size());
    return !(std::isalnum(static_cast<unsigned char>(after)) || after == ':' || after == '_');
  }

  Term number() {
    std::size_t start = pos_;
    if (peek() == '+' || peek() == '-') advance();
    bool digits = false, dot = false, exp = false;
    while (std::isdigit(static_cast<unsigned char>(peek()))) { advance(); digits = true; }
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      dot = true;
      advance();
      while (std::isdigit(static_cast<unsigned char>(peek()))) { advance(); digits = true; }
    }
    if (digits && (peek() == 'e' || peek() == 'E')) {
      exp = true;
      advance();
      if (peek() == '+' || peek() == '-') advance();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed exponent");
      while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
    }
    if (!digits) fail("malformed number");
    std::string v(s_.substr(start, pos_ - start));
    auto dt = exp ? vocab::kXsdDouble : dot ? vocab::kXsdDecimal : vocab::kXsdInteger;
    return typed_literal(v, std::string(dt));
  }

  void statement() {
    Term s = subject();
    while (true) {
      Term p = verb();
      while (true) {
        Term o = object();
        out_.push_back(Triple{s, p, std::move(o)});
        skip();
        if (peek() == ',') {
          advance();
          continue;
        }
        break;
      }
      skip();
      if (peek() == ';') {
        while (peek() == ';') {
          advance();
          skip();
        }
        if (peek() == '.') break;
        continue;
      }
      break;
    }
    expect('.');
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::map<std::string, std::string> prefixes_;
  std::vector<Triple> out_;
};

}  // namespace detail

// Parses the supported Turtle subset. Throws ParseError with a line number.
inline std::vector<Triple> parse_turtle(std::string_view text) {
  if (auto bad = utf8::first_invalid(text)) {
    throw ParseError("input is not valid UTF-8 (byte offset " + std::to_string(*bad) + ")");
  }
  return detail::TurtleParser(text).parse();
}

}  // namespace ontogen
