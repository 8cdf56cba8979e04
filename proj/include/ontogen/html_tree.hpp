#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ontogen/utf8.hpp"

namespace ontogen::html {

// Element or text node. The document root is an element named "#root".
struct Node {
  std::string tag;  // lower-case element name; empty for text nodes
  std::map<std::string, std::string> attrs;
  std::vector<Node> children;
  std::string text;  // text nodes only

  bool is_text() const { return tag.empty(); }

  std::string attr(const std::string& name) const {
    auto it = attrs.find(name);
    return it == attrs.end() ? std::string() : it->second;
  }

  friend bool operator==(const Node&, const Node&) = default;
};

enum class Dialect { kHtml, kXml };

inline std::string to_lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

inline bool iequals_prefix(std::string_view s, std::size_t pos, std::string_view prefix) {
  if (pos + prefix.size() > s.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(s[pos + i])) !=
        std::tolower(static_cast<unsigned char>(prefix[i]))) {
      return false;
    }
  }
  return true;
}

// Decodes the common named entities and all numeric references. Unknown
// entities are left as written.
inline std::string decode_entities(std::string_view s) {
  static const std::map<std::string, std::uint32_t, std::less<>> kNamed = {
      {"amp", '&'},     {"lt", '<'},       {"gt", '>'},      {"quot", '"'},
      {"apos", '\''},   {"nbsp", 0xA0},    {"ndash", 0x2013}, {"mdash", 0x2014},
      {"lsquo", 0x2018}, {"rsquo", 0x2019}, {"ldquo", 0x201C}, {"rdquo", 0x201D},
      {"hellip", 0x2026}, {"copy", 0xA9},  {"reg", 0xAE},     {"trade", 0x2122},
      {"euro", 0x20AC}, {"pound", 0xA3},   {"middot", 0xB7},  {"bull", 0x2022}};
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '&') {
      out.push_back(s[i++]);
      continue;
    }
    auto semi = s.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 12) {
      out.push_back(s[i++]);
      continue;
    }
    std::string_view name = s.substr(i + 1, semi - i - 1);
    std::uint32_t cp = 0;
    bool ok = false;
    if (!name.empty() && name[0] == '#') {
      bool hex = name.size() > 1 && (name[1] == 'x' || name[1] == 'X');
      std::string_view digits = name.substr(hex ? 2 : 1);
      ok = !digits.empty();
      for (char c : digits) {
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (hex && c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (hex && c >= 'A' && c <= 'F') v = c - 'A' + 10;
        else { ok = false; break; }
        cp = cp * (hex ? 16 : 10) + static_cast<std::uint32_t>(v);
        if (cp > 0x10FFFF) { ok = false; break; }
      }
      if (ok && ((cp >= 0xD800 && cp <= 0xDFFF) || cp == 0)) ok = false;
    } else if (auto it = kNamed.find(name); it != kNamed.end()) {
      cp = it->second;
      ok = true;
    }
    if (!ok) {
      out.push_back(s[i++]);
      continue;
    }
    utf8::append(out, cp == 0xA0 ? ' ' : cp);
    i = semi + 1;
  }
  return out;
}

namespace detail {

inline bool is_void_element(std::string_view tag) {
  static constexpr std::string_view kVoid[] = {"area", "base", "br", "col", "embed", "hr", "img",
                                               "input", "link", "meta", "param", "source", "track", "wbr"};
  return std::find(std::begin(kVoid), std::end(kVoid), tag) != std::end(kVoid);
}

inline bool is_raw_text_element(std::string_view tag) {
  return tag == "script" || tag == "style";
}

// Opening one of these implicitly closes an open <p>.
inline bool closes_paragraph(std::string_view tag) {
  static constexpr std::string_view kBlock[] = {
      "p", "div", "ul", "ol", "table", "section", "article", "aside", "blockquote", "h1", "h2",
      "h3", "h4", "h5", "h6", "header", "footer", "nav", "form", "pre", "hr", "dl", "figure"};
  return std::find(std::begin(kBlock), std::end(kBlock), tag) != std::end(kBlock);
}

class Parser {
 public:
  Parser(std::string_view s, Dialect dialect) : s_(s), dialect_(dialect) {
    root_.tag = "#root";
    stack_.push_back(&root_);
  }

  Node parse() {
    while (pos_ < s_.size()) {
      if (s_[pos_] == '<') {
        if (s_.compare(pos_, 4, "<!--") == 0) {
          skip_past("-->", pos_ + 4);
        } else if (s_.compare(pos_, 9, "<![CDATA[") == 0) {
          auto end = s_.find("]]>", pos_ + 9);
          std::size_t stop = end == std::string_view::npos ? s_.size() : end;
          add_text(std::string(s_.substr(pos_ + 9, stop - pos_ - 9)));
          pos_ = end == std::string_view::npos ? s_.size() : end + 3;
        } else if (pos_ + 1 < s_.size() && (s_[pos_ + 1] == '!' || s_[pos_ + 1] == '?')) {
          skip_past(">", pos_ + 2);
        } else if (pos_ + 1 < s_.size() && s_[pos_ + 1] == '/') {
          end_tag();
        } else if (pos_ + 1 < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_ + 1]))) {
          start_tag();
        } else {
          text_until_tag();
        }
      } else {
        text_until_tag();
      }
    }
    return std::move(root_);
  }

 private:
  void skip_past(std::string_view terminator, std::size_t from) {
    auto end = s_.find(terminator, from);
    pos_ = end == std::string_view::npos ? s_.size() : end + terminator.size();
  }

  Node& top() { return *stack_.back(); }

  void add_text(std::string text) {
    if (text.empty()) return;
    auto& kids = top().children;
    if (!kids.empty() && kids.back().is_text()) {
      kids.back().text += text;
      return;
    }
    Node n;
    n.text = std::move(text);
    kids.push_back(std::move(n));
  }

  void text_until_tag() {
    auto next = s_.find('<', pos_ + 1);
    if (next == std::string_view::npos) next = s_.size();
    add_text(decode_entities(s_.substr(pos_, next - pos_)));
    pos_ = next;
  }

  static bool is_name_char(char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || c == '-' || c == '_' || c == ':' || c == '.';
  }

  std::string read_name() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && is_name_char(s_[pos_])) ++pos_;
    return to_lower(s_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void end_tag() {
    pos_ += 2;
    std::string name = read_name();
    skip_past(">", pos_);
    for (std::size_t i = stack_.size(); i-- > 1;) {
      if (stack_[i]->tag == name) {
        stack_.resize(i);
        return;
      }
    }
    // Stray end tag: ignored.
  }

  void start_tag() {
    ++pos_;
    Node el;
    el.tag = read_name();
    bool self_closing = false;
    while (pos_ < s_.size()) {
      skip_space();
      if (pos_ >= s_.size()) break;
      char c = s_[pos_];
      if (c == '>') {
        ++pos_;
        break;
      }
      if (c == '/') {
        ++pos_;
        skip_space();
        if (pos_ < s_.size() && s_[pos_] == '>') {
          self_closing = true;
          ++pos_;
          break;
        }
        continue;
      }
      if (c == '<') break;  // unterminated tag; let the next tag start here
      std::string name = read_name();
      if (name.empty()) {
        ++pos_;
        continue;
      }
      skip_space();
      std::string value;
      if (pos_ < s_.size() && s_[pos_] == '=') {
        ++pos_;
        skip_space();
        if (pos_ < s_.size() && (s_[pos_] == '"' || s_[pos_] == '\'')) {
          char q = s_[pos_++];
          auto end = s_.find(q, pos_);
          if (end == std::string_view::npos) end = s_.size();
          value = decode_entities(s_.substr(pos_, end - pos_));
          pos_ = std::min(end + 1, s_.size());
        } else {
          std::size_t start = pos_;
          while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) &&
                 s_[pos_] != '>') {
            ++pos_;
          }
          value = decode_entities(s_.substr(start, pos_ - start));
        }
      }
      el.attrs.emplace(std::move(name), std::move(value));
    }

    bool html = dialect_ == Dialect::kHtml;
    if (html) {
      if (closes_paragraph(el.tag) && top().tag == "p") stack_.pop_back();
      if (el.tag == "li" && top().tag == "li") stack_.pop_back();
    }
    if (html && is_raw_text_element(el.tag) && !self_closing) {
      std::size_t end = pos_;
      while (end < s_.size()) {
        end = s_.find("</", end);
        if (end == std::string_view::npos) {
          end = s_.size();
          break;
        }
        if (iequals_prefix(s_, end + 2, el.tag)) break;
        end += 2;
      }
      Node text;
      text.text = std::string(s_.substr(pos_, end - pos_));
      if (!text.text.empty()) el.children.push_back(std::move(text));
      pos_ = end;
      if (pos_ < s_.size()) skip_past(">", pos_);
      top().children.push_back(std::move(el));
      return;
    }
    top().children.push_back(std::move(el));
    if (!self_closing && !(html && is_void_element(top().children.back().tag))) {
      stack_.push_back(&top().children.back());
    }
  }

  std::string_view s_;
  Dialect dialect_;
  std::size_t pos_ = 0;
  Node root_;
  std::vector<Node*> stack_;
};

inline bool is_inline_element(std::string_view tag) {
  static constexpr std::string_view kInline[] = {"a", "abbr", "b", "bdi", "cite", "code", "em", "i",
                                                 "mark", "q", "s", "small", "span", "strong", "sub",
                                                 "sup", "time", "u", "var"};
  return std::find(std::begin(kInline), std::end(kInline), tag) != std::end(kInline);
}

inline void collect_text(const Node& n, std::string& out) {
  if (n.is_text()) {
    out += n.text;
    return;
  }
  bool block = !is_inline_element(n.tag);
  if (block) out.push_back(' ');
  for (const auto& c : n.children) collect_text(c, out);
  if (block) out.push_back(' ');
}

}  // namespace detail

// Tolerant parse: unclosed elements are closed by their ancestors' end tags
// or at end of input, stray end tags are ignored, and attributes are read on
// a best-effort basis. In the HTML dialect, void elements never take
// children and <script>/<style> bodies are raw text.
inline Node parse(std::string_view text, Dialect dialect = Dialect::kHtml) {
  return detail::Parser(text, dialect).parse();
}

// Concatenated descendant text. Block-level boundaries become spaces.
inline std::string text_content(const Node& n) {
  std::string out;
  detail::collect_text(n, out);
  return out;
}

// Text of the direct text children only.
inline std::string own_text(const Node& n) {
  std::string out;
  for (const auto& c : n.children) {
    if (c.is_text()) {
      out += c.text;
      out.push_back(' ');
    }
  }
  return out;
}

inline std::size_t count_nodes(const Node& n) {
  std::size_t total = 1;
  for (const auto& c : n.children) total += count_nodes(c);
  return total;
}

}  // namespace ontogen::html
