#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

struct SearchOptions {
  /// Largest node_count * k the search will attempt.
  std::size_t budget = 24;
  /// Restrict the first letter to one representative per automorphism orbit.
  bool automorphism_reduction = false;
  /// Keep only one of each word / reversed-word pair, via the orbit of the
  /// first letter not exceeding the orbit of the last letter.
  bool reversal_reduction = false;
  /// Prefix pruning on edges and completion checks on non-edges. Turning it
  /// off enumerates every k-uniform word and checks only complete words.
  bool pruning = true;
  /// Worker threads over first-letter branches; results do not depend on it.
  std::size_t threads = 1;
  std::optional<std::chrono::milliseconds> time_limit;
};

enum class SearchResult { Witness, Exhausted, ResourceLimit };

const char* to_string(SearchResult r) noexcept;

struct SearchStats {
  std::uint64_t explored = 0;  // search-tree nodes visited
  std::uint64_t leaves = 0;    // complete words examined
  double millis = 0.0;
};

struct SearchOutcome {
  Graph graph;
  std::size_t k = 0;
  SearchResult result = SearchResult::Exhausted;
  /// Set iff result == Witness; always k-uniform and verified to represent
  /// the graph.
  std::optional<Word> witness;
  SearchStats stats;
  /// Why the search stopped early, for ResourceLimit.
  std::string note;
};

/// Depth-first search over k-uniform words on the graph's nodes, branching
/// on symbols in lexicographic order. Returns the first representant found
/// (identical for any thread count), Exhausted, or ResourceLimit when the
/// budget or time limit is exceeded.
///
/// Throws Error(InvalidInput) if k == 0 or the graph has no nodes, and
/// Error(ConstructionBug) if a witness fails re-verification.
SearchOutcome is_k_representable(const Graph& g, std::size_t k, const SearchOptions& options = {});

/// Smallest k <= k_max admitting a witness, or nullopt. Every per-k outcome
/// is appended to `trace` when given. Throws Error(ResourceLimit) if some
/// k is cut off before a witness is found.
std::optional<std::size_t> representation_number(const Graph& g, std::size_t k_max,
                                                  const SearchOptions& options = {},
                                                  std::vector<SearchOutcome>* trace = nullptr);

/// Number of k-uniform words (after any enabled reductions) that represent
/// g, together with search statistics. No budget applies.
std::uint64_t count_representants(const Graph& g, std::size_t k, const SearchOptions& options = {},
                                  SearchStats* stats = nullptr);

/// (n k)! / (k!)^n, the number of k-uniform words on n letters. Throws
/// Error(InvalidInput) on 64-bit overflow.
std::uint64_t uniform_word_count(std::size_t n, std::size_t k);

/// {"graph": {...}, "k": ..., "result": "witness"|"exhausted"|"resource-limit",
///  "word": "...", "explored": N, "millis": T}
std::string to_json(const SearchOutcome& outcome);

}  // namespace wordrep
