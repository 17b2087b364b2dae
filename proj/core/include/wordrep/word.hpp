#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordrep/symbol.hpp"

namespace wordrep {

/// Finite sequence of symbols. Occurrence statistics (alphabet, counts)
/// are computed once at construction; a Word is immutable afterwards.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Symbol> letters);

  /// Whitespace-separated tokens. An all-blank string yields the empty word.
  static Word parse(std::string_view text);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Symbol& operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Symbol>& letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// Distinct symbols in lexicographic order.
  const std::vector<Symbol>& alphabet() const noexcept { return alphabet_; }
  bool contains(const Symbol& s) const;
  /// Occurrences of s; 0 when s is absent.
  std::size_t count(const Symbol& s) const;
  /// Largest occurrence count over the alphabet (0 for the empty word).
  std::size_t max_count() const noexcept;

  Word reversed() const;
  std::string to_string() const;

  friend Word operator+(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }

 private:
  std::vector<Symbol> letters_;
  std::vector<Symbol> alphabet_;
  std::vector<std::size_t> counts_;  // parallel to alphabet_
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// One labelled letter: the `index`-th occurrence (1-based) of `symbol`.
struct Occurrence {
  Symbol symbol;
  std::size_t index;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

using LabelledWord = std::vector<Occurrence>;

/// Subsequence of w made of the letters in `keep`, order preserved.
Word restrict(const Word& w, const std::set<Symbol>& keep);

/// Whether x and y alternate in w, i.e. the restriction of w to {x, y}
/// has no two equal adjacent letters. Restrictions of length 0 or 1
/// alternate vacuously. Throws Error(InvalidQuery) when x == y.
bool alternates(const Word& w, const Symbol& x, const Symbol& y);

/// k when every letter of w occurs exactly k times, nullopt otherwise.
/// Throws Error(InvalidInput) on the empty word.
std::optional<std::size_t> uniformity(const Word& w);

LabelledWord label(const Word& w);
Word unlabel(const LabelledWord& labelled);

/// Per-symbol sorted position lists over an interned alphabet. Built once
/// per word, it answers alternation queries in O(count(x) + count(y)),
/// which is what makes all-pairs checks on large words affordable.
class PositionIndex {
 public:
  explicit PositionIndex(const Word& w);

  std::size_t symbol_count() const noexcept { return symbols_.size(); }
  /// Interned symbols; id i refers to symbols()[i] (lexicographic order).
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  std::optional<std::size_t> id_of(const Symbol& s) const;
  std::span<const std::size_t> positions(std::size_t id) const;

  bool alternates(std::size_t a, std::size_t b) const;

 private:
  std::vector<Symbol> symbols_;
  std::vector<std::size_t> offsets_;    // size symbol_count() + 1
  std::vector<std::size_t> positions_;  // concatenated per-symbol lists
};

/// Whether merging two sorted, disjoint position lists yields a sequence
/// with no two consecutive entries from the same list.
bool positions_alternate(std::span<const std::size_t> a,
                         std::span<const std::size_t> b) noexcept;

}  // namespace wordrep
