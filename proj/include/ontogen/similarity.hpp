#pragma once

#include <algorithm>
#include <cstdint>
#include <string_view>
#include <vector>

#include "ontogen/utf8.hpp"

namespace ontogen {

// ASCII case folding over code points.
inline std::vector<std::uint32_t> fold_case(std::string_view s) {
  auto cps = utf8::decode(s);
  for (auto& c : cps) {
    if (c >= 'A' && c <= 'Z') c = c - 'A' + 'a';
  }
  return cps;
}

inline std::size_t levenshtein(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

// 1 - levenshtein / max-length on case-folded code points; 1 for two empty
// strings.
inline double label_similarity(std::string_view a, std::string_view b) {
  auto fa = fold_case(a);
  auto fb = fold_case(b);
  std::size_t longest = std::max(fa.size(), fb.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(levenshtein(fa, fb)) / static_cast<double>(longest);
}

}  // namespace ontogen
