#pragma once

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ontogen/error.hpp"
#include "ontogen/html_tree.hpp"
#include "ontogen/utf8.hpp"

namespace ontogen {

enum class DocFormat { kHtml, kRss, kXml, kPlain };

inline std::string_view format_name(DocFormat f) {
  switch (f) {
    case DocFormat::kHtml: return "html";
    case DocFormat::kRss: return "rss";
    case DocFormat::kXml: return "xml";
    case DocFormat::kPlain: return "plain";
  }
  return "plain";
}

inline DocFormat parse_format(std::string_view name) {
  if (name == "html") return DocFormat::kHtml;
  if (name == "rss") return DocFormat::kRss;
  if (name == "xml") return DocFormat::kXml;
  if (name == "plain") return DocFormat::kPlain;
  throw Error("unknown document format '" + std::string(name) + "'");
}

inline DocFormat format_from_extension(const std::filesystem::path& path) {
  auto ext = html::to_lower(path.extension().string());
  if (ext == ".html" || ext == ".htm" || ext == ".xhtml") return DocFormat::kHtml;
  if (ext == ".rss" || ext == ".atom") return DocFormat::kRss;
  if (ext == ".xml") return DocFormat::kXml;
  return DocFormat::kPlain;
}

inline std::set<std::string> default_ad_denylist() {
  return {"ad", "ads", "advert", "advertisement", "sponsored", "social", "share", "tracker",
          "banner", "promo", "cookie", "newsletter", "plugin"};
}

struct CleanConfig {
  std::size_t min_words = 4;
  std::size_t long_text_words = 12;
  double min_alpha_ratio = 0.6;
  std::set<std::string> denylist = default_ad_denylist();
};

struct RawDocument {
  std::string bytes;
  DocFormat format = DocFormat::kPlain;
  std::string origin;
};

struct CleanDocument {
  std::vector<std::string> sentences;
  std::string origin;
  std::size_t dropped_segments = 0;
};

// ---------------------------------------------------------------------------
// Sentence heuristic

namespace detail {

inline const std::set<std::string, std::less<>>& common_verbs() {
  static const std::set<std::string, std::less<>> kVerbs = {
      "is", "are", "was", "were", "be", "been", "being", "am", "has", "have", "had", "do", "does",
      "did", "will", "would", "can", "could", "shall", "should", "may", "might", "must", "said",
      "says", "say", "make", "makes", "made", "take", "takes", "took", "give", "gives", "gave",
      "get", "gets", "got", "go", "goes", "went", "come", "comes", "came", "see", "sees", "saw",
      "know", "knows", "knew", "think", "thinks", "thought", "find", "finds", "found", "tell",
      "tells", "told", "become", "becomes", "became", "show", "shows", "showed", "leave", "leaves",
      "left", "feel", "feels", "felt", "bring", "brings", "brought", "begin", "begins", "began",
      "keep", "keeps", "kept", "hold", "holds", "held", "write", "writes", "wrote", "stand",
      "stands", "stood", "run", "runs", "ran", "lead", "leads", "led", "grow", "grows", "grew",
      "lose", "loses", "lost", "pay", "pays", "paid", "meet", "meets", "met", "sell", "sells",
      "sold", "buy", "buys", "bought", "build", "builds", "built", "spend", "spends", "spent",
      "rise", "rises", "rose", "fall", "falls", "fell", "employ", "employs", "remain", "remains",
      "operate", "operates", "own", "owns", "rank", "ranks", "earn", "earns", "plan", "plans",
      "expect", "expects", "report", "reports", "produce", "produces", "provide", "provides",
      "include", "includes", "offer", "offers", "serve", "serves", "move", "moves", "use", "uses",
      "help", "helps", "need", "needs", "want", "wants", "seem", "seems", "hit", "hits", "set",
      "sets", "put", "puts", "cut", "cuts", "let", "lets", "means", "mean", "meant", "continue",
      "continues", "announce", "announces", "generate", "generates", "manufacture", "manufactures",
      "develop", "develops", "design", "designs", "focus", "focuses", "compete", "competes"};
  return kVerbs;
}

inline std::string strip_word(std::string_view tok) {
  std::string w;
  for (char c : tok) {
    auto u = static_cast<unsigned char>(c);
    if (std::isalpha(u) || u >= 0x80 || c == '\'' || c == '-') {
      w.push_back(static_cast<char>(std::tolower(u)));
    }
  }
  while (!w.empty() && (w.back() == '\'' || w.back() == '-')) w.pop_back();
  while (!w.empty() && (w.front() == '\'' || w.front() == '-')) w.erase(w.begin());
  return w;
}

inline bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

inline bool is_verb_like(std::string_view word, const std::set<std::string>& denylist) {
  if (word.empty() || denylist.count(std::string(word))) return false;
  if (common_verbs().count(word)) return true;
  if (word.size() < 5) return false;
  static constexpr std::string_view kSuffixes[] = {"ed", "ing", "izes", "ises", "ates", "ifies"};
  for (auto suf : kSuffixes) {
    if (ends_with(word, suf)) return true;
  }
  return false;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

inline bool has_tag_residue(std::string_view s) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == '<') {
      auto c = static_cast<unsigned char>(s[i + 1]);
      if (std::isalpha(c) || c == '/' || c == '!') return true;
    }
  }
  return false;
}

inline bool ends_with_sentence_punct(std::string_view s) {
  while (!s.empty() && (s.back() == '"' || s.back() == '\'' || s.back() == ')' ||
                        ends_with(s, "\xE2\x80\x9D") || ends_with(s, "\xE2\x80\x99"))) {
    if (s.back() == '"' || s.back() == '\'' || s.back() == ')') {
      s.remove_suffix(1);
    } else {
      s.remove_suffix(3);
    }
  }
  return !s.empty() && (s.back() == '.' || s.back() == '!' || s.back() == '?');
}

}  // namespace detail

// Collapses runs of whitespace to single spaces and trims.
inline std::string normalize_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool space = false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = !out.empty();
    } else {
      if (space) out.push_back(' ');
      space = false;
      out.push_back(c);
    }
  }
  return out;
}

// Deterministic stand-in for a sentence tagger. A string is a sentence when
//   - it has at least min_words whitespace tokens,
//   - some token is verb-like (bundled verb list, or a verbal suffix) and
//     not on the ad denylist,
//   - it ends with . ! or ? (closing quotes allowed) or is longer than
//     long_text_words tokens,
//   - letters make up at least min_alpha_ratio of its non-space characters,
//   - it carries no markup residue ('<' followed by a letter, '/' or '!').
inline bool is_sentence(std::string_view text, const CleanConfig& cfg = {}) {
  auto tokens = detail::split_ws(text);
  if (tokens.size() < cfg.min_words || tokens.empty()) return false;
  if (detail::has_tag_residue(text)) return false;

  bool verb = false;
  for (auto tok : tokens) {
    if (detail::is_verb_like(detail::strip_word(tok), cfg.denylist)) {
      verb = true;
      break;
    }
  }
  if (!verb) return false;

  std::string trimmed = normalize_whitespace(text);
  if (!detail::ends_with_sentence_punct(trimmed) && tokens.size() <= cfg.long_text_words) return false;

  std::size_t letters = 0, visible = 0;
  for (auto cp : utf8::decode(text)) {
    if (cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' || cp == '\v') continue;
    ++visible;
    if ((cp < 0x80 && std::isalpha(static_cast<int>(cp))) || cp >= 0xC0) ++letters;
  }
  return visible > 0 && static_cast<double>(letters) / static_cast<double>(visible) >= cfg.min_alpha_ratio;
}

// Splits normalized text at sentence boundaries: terminal punctuation
// (plus closing quotes), whitespace, then an upper-case letter, digit or
// opening quote. Common abbreviations and single-letter initials do not end
// a sentence. Splitting a piece again yields the piece itself.
inline std::vector<std::string> split_sentences(std::string_view text) {
  static const std::set<std::string, std::less<>> kAbbrev = {
      "mr", "mrs", "ms", "dr", "st", "jr", "sr", "inc", "corp", "co", "ltd", "no", "vs", "prof",
      "gen", "gov", "sen", "rep", "mt", "ft", "jan", "feb", "mar", "apr", "aug", "sep", "sept",
      "oct", "nov", "dec", "u.s", "e.g", "i.e", "etc"};
  std::string norm = normalize_whitespace(text);
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < norm.size(); ++i) {
    char c = norm[i];
    if (c != '.' && c != '!' && c != '?') continue;
    std::size_t j = i + 1;
    while (j < norm.size() && (norm[j] == '"' || norm[j] == '\'' || norm[j] == ')')) ++j;
    if (j + 1 >= norm.size() || norm[j] != ' ') continue;
    auto next = static_cast<unsigned char>(norm[j + 1]);
    if (!(std::isupper(next) || std::isdigit(next) || next == '"' || next == '\'' || next >= 0x80)) continue;
    if (c == '.') {
      std::size_t w = i;
      while (w > start && norm[w - 1] != ' ') --w;
      std::string word = html::to_lower(std::string_view(norm).substr(w, i - w));
      while (!word.empty() && (word.front() == '(' || word.front() == '"')) word.erase(word.begin());
      if (kAbbrev.count(word)) continue;
      if (word.size() == 1 && std::isalpha(static_cast<unsigned char>(word[0]))) continue;
    }
    out.push_back(norm.substr(start, j - start));
    start = j + 1;
    i = j;
  }
  if (start < norm.size()) out.push_back(norm.substr(start));
  return out;
}

// ---------------------------------------------------------------------------
// Ad / boilerplate container removal

namespace detail {

inline bool is_boilerplate_tag(std::string_view tag) {
  return tag == "script" || tag == "style" || tag == "iframe" || tag == "nav" ||
         tag == "footer" || tag == "header" || tag == "noscript";
}

inline bool attr_matches_denylist(const std::string& value, const std::set<std::string>& denylist) {
  std::string token;
  auto flush = [&]() {
    bool hit = !token.empty() && denylist.count(token);
    token.clear();
    return hit;
  };
  for (char c : value) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      token.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else if (flush()) {
      return true;
    }
  }
  return flush();
}

inline bool is_ad_container(const html::Node& n, const std::set<std::string>& denylist) {
  if (n.is_text()) return false;
  if (is_boilerplate_tag(n.tag) || denylist.count(n.tag)) return true;
  return attr_matches_denylist(n.attr("class"), denylist) ||
         attr_matches_denylist(n.attr("id"), denylist);
}

inline void strip_in_place(html::Node& n, const std::set<std::string>& denylist, std::size_t& removed) {
  auto& kids = n.children;
  auto keep = std::remove_if(kids.begin(), kids.end(), [&](const html::Node& c) {
    if (is_ad_container(c, denylist)) {
      ++removed;
      return true;
    }
    return false;
  });
  kids.erase(keep, kids.end());
  for (auto& c : kids) strip_in_place(c, denylist, removed);
}

}  // namespace detail

// Removes every subtree whose tag is script/style/iframe/nav/footer/header/
// noscript, or whose tag name, id or class contains a denylisted token
// (attribute values are tokenized on non-alphanumerics).
inline html::Node strip_ad_containers(html::Node tree, const std::set<std::string>& denylist,
                                      std::size_t* removed = nullptr) {
  std::size_t count = 0;
  if (detail::is_ad_container(tree, denylist)) {
    if (removed) *removed = 1;
    html::Node empty;
    empty.tag = "#root";
    return empty;
  }
  detail::strip_in_place(tree, denylist, count);
  if (removed) *removed = count;
  return tree;
}

// ---------------------------------------------------------------------------
// Document cleaning

namespace detail {

class Collector {
 public:
  Collector(const CleanConfig& cfg, CleanDocument& doc) : cfg_(cfg), doc_(doc) {}

  void offer(std::string_view text) {
    for (auto& s : split_sentences(text)) {
      if (is_sentence(s, cfg_)) {
        doc_.sentences.push_back(std::move(s));
      } else {
        ++doc_.dropped_segments;
      }
    }
  }

 private:
  const CleanConfig& cfg_;
  CleanDocument& doc_;
};

inline void for_each_element(const html::Node& n, const std::string& tag,
                             const std::function<void(const html::Node&)>& fn) {
  for (const auto& c : n.children) {
    if (c.is_text()) continue;
    if (c.tag == tag) {
      fn(c);
    } else {
      for_each_element(c, tag, fn);
    }
  }
}

inline void clean_html(std::string_view text, const CleanConfig& cfg, CleanDocument& doc) {
  std::size_t removed = 0;
  auto tree = strip_ad_containers(html::parse(text, html::Dialect::kHtml), cfg.denylist, &removed);
  doc.dropped_segments += removed;
  Collector out(cfg, doc);
  for_each_element(tree, "p", [&](const html::Node& p) { out.offer(html::text_content(p)); });
}

inline void clean_rss_fields(const html::Node& n, const CleanConfig& cfg, CleanDocument& doc) {
  Collector out(cfg, doc);
  for (const auto& c : n.children) {
    if (c.is_text()) continue;
    if (c.tag == "title") {
      out.offer(html::text_content(c));
    } else if (c.tag == "description" || c.tag == "summary") {
      // Description bodies are HTML (escaped or CDATA); strip that as well.
      std::size_t removed = 0;
      auto inner = strip_ad_containers(html::parse(html::text_content(c), html::Dialect::kHtml),
                                       cfg.denylist, &removed);
      doc.dropped_segments += removed;
      out.offer(html::text_content(inner));
    } else {
      clean_rss_fields(c, cfg, doc);
    }
  }
}

inline bool has_element(const html::Node& n, const std::string& tag) {
  for (const auto& c : n.children) {
    if (!c.is_text() && (c.tag == tag || has_element(c, tag))) return true;
  }
  return false;
}

inline void clean_rss(std::string_view text, const CleanConfig& cfg, CleanDocument& doc) {
  auto tree = html::parse(text, html::Dialect::kXml);
  std::string item_tag = has_element(tree, "item") ? "item" : has_element(tree, "entry") ? "entry" : "";
  if (item_tag.empty()) {
    clean_rss_fields(tree, cfg, doc);
    return;
  }
  for_each_element(tree, item_tag, [&](const html::Node& item) { clean_rss_fields(item, cfg, doc); });
}

inline void clean_xml_node(const html::Node& n, Collector& out) {
  for (const auto& c : n.children) {
    if (c.is_text()) continue;
    auto own = html::own_text(c);
    if (own.find_first_not_of(" \t\r\n") != std::string::npos) out.offer(own);
    clean_xml_node(c, out);
  }
}

inline void clean_xml(std::string_view text, const CleanConfig& cfg, CleanDocument& doc) {
  std::size_t removed = 0;
  auto tree = strip_ad_containers(html::parse(text, html::Dialect::kXml), cfg.denylist, &removed);
  doc.dropped_segments += removed;
  Collector out(cfg, doc);
  clean_xml_node(tree, out);
}

inline void clean_plain(std::string_view text, const CleanConfig& cfg, CleanDocument& doc) {
  Collector out(cfg, doc);
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) out.offer(line);
    start = end + 1;
  }
}

}  // namespace detail

// Keeps only sentence-bearing text, dispatching on the document format:
// html -> <p> elements outside ad/boilerplate containers; rss -> item titles
// and (HTML-stripped) descriptions; xml -> each element's own text; plain ->
// each line. Sentences keep document order.
inline CleanDocument clean(const RawDocument& doc, const CleanConfig& cfg = {}) {
  std::string_view text = doc.bytes;
  if (auto bad = utf8::first_invalid(text)) {
    throw Error("cannot decode " + doc.origin + ": invalid UTF-8 at byte " + std::to_string(*bad));
  }
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

  CleanDocument out;
  out.origin = doc.origin;
  switch (doc.format) {
    case DocFormat::kHtml: detail::clean_html(text, cfg, out); break;
    case DocFormat::kRss: detail::clean_rss(text, cfg, out); break;
    case DocFormat::kXml: detail::clean_xml(text, cfg, out); break;
    case DocFormat::kPlain: detail::clean_plain(text, cfg, out); break;
  }
  return out;
}

}  // namespace ontogen
