#pragma once

// Test-only reference implementations. They work on plain strings and
// brute force so that they share no code path with the library.

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Letters = std::vector<std::string>;
using EdgeSet = std::set<std::pair<std::string, std::string>>;

inline Letters split(const std::string& text) {
  Letters out;
  std::string cur;
  for (char c : text) {
    if (c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline bool alternate(const Letters& w, const std::string& x, const std::string& y) {
  std::string prev;
  for (const auto& c : w) {
    if (c != x && c != y) continue;
    if (c == prev) return false;
    prev = c;
  }
  return true;
}

/// Alphabet and alternating pairs (u < v) of a word.
inline std::pair<std::set<std::string>, EdgeSet> graph_of(const Letters& w) {
  std::set<std::string> nodes(w.begin(), w.end());
  EdgeSet edges;
  for (auto a = nodes.begin(); a != nodes.end(); ++a) {
    for (auto b = std::next(a); b != nodes.end(); ++b) {
      if (alternate(w, *a, *b)) edges.emplace(*a, *b);
    }
  }
  return {nodes, edges};
}

/// Every k-uniform word over `symbols` via std::next_permutation.
template <typename Visit>
void for_each_uniform_word(const std::vector<std::string>& symbols, std::size_t k, Visit visit) {
  Letters w;
  for (const auto& s : symbols) {
    for (std::size_t i = 0; i < k; ++i) w.push_back(s);
  }
  std::sort(w.begin(), w.end());
  do {
    visit(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

}  // namespace oracle
