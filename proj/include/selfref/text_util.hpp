#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace selfref::text_util {

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !is_space(s[j])) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::vector<std::string_view> split_lines(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find('\n', start);
    if (end == std::string_view::npos) end = s.size();
    out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

// UTF-8 code points in s.
inline std::size_t codepoints(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

// Splits "lhs SEP rhs" on the first occurrence of any separator.
inline bool split_on(std::string_view s, std::initializer_list<std::string_view> seps,
                     std::string_view& lhs, std::string_view& rhs) {
  std::size_t best = std::string_view::npos;
  std::size_t width = 0;
  for (auto sep : seps) {
    std::size_t at = s.find(sep);
    if (at < best) {
      best = at;
      width = sep.size();
    }
  }
  if (best == std::string_view::npos) return false;
  lhs = trim(s.substr(0, best));
  rhs = trim(s.substr(best + width));
  return true;
}

}  // namespace selfref::text_util
