#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wordrep/word.hpp"

namespace wordrep {

/// Nonempty set of 1-based occurrence indices.
class IndexSet {
 public:
  /// Throws Error(InvalidInput) if empty or if it contains 0.
  explicit IndexSet(std::set<std::size_t> members);
  IndexSet(std::initializer_list<std::size_t> members);

  /// {1, ..., k}.
  static IndexSet full(std::size_t k);
  /// {lo, ..., hi}.
  static IndexSet range(std::size_t lo, std::size_t hi);

  const std::set<std::size_t>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  std::size_t max() const noexcept { return *members_.rbegin(); }
  bool contains(std::size_t i) const { return members_.contains(i); }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::set<std::size_t> members_;
};

/// Occurrence-based function: maps the i-th occurrence of letter x to a
/// fixed word h(x, i). The occurrence bound k is stored explicitly and the
/// table is total on domain_alphabet x {1..k}.
class OccurrenceBasedFunction {
 public:
  using Key = std::pair<Symbol, std::size_t>;
  using Rule = std::function<Word(const Symbol&, std::size_t)>;

  /// Throws Error(InvalidInput) if k == 0, if a key lies outside
  /// domain x {1..k}, or if some (x, i) is missing.
  OccurrenceBasedFunction(std::set<Symbol> domain, std::size_t bound,
                          std::map<Key, Word> table);

  /// Tabulates `rule` over domain x {1..k}.
  static OccurrenceBasedFunction from_rule(std::set<Symbol> domain,
                                           std::size_t bound, const Rule& rule);

  const std::set<Symbol>& domain() const noexcept { return domain_; }
  std::size_t bound() const noexcept { return bound_; }
  const std::map<Key, Word>& table() const noexcept { return table_; }

  /// h(x, i). Throws Error(DomainViolation) outside the domain.
  const Word& image(const Symbol& x, std::size_t i) const;

  /// Applies h to the labelled version of w. Throws Error(DomainViolation)
  /// on a symbol outside the domain or an occurrence beyond the bound.
  Word operator()(const Word& w) const;

 private:
  std::set<Symbol> domain_;
  std::size_t bound_;
  std::map<Key, Word> table_;
};

inline Word apply(const OccurrenceBasedFunction& h, const Word& w) { return h(w); }

/// p_A over `alphabet`: keeps occurrence i of each letter iff i is in A.
/// Throws Error(InvalidInput) if A has a member above k.
OccurrenceBasedFunction projection(const IndexSet& keep,
                                   const std::set<Symbol>& alphabet, std::size_t k);

/// p_A(w) for a word whose letters occur at most k times, with k taken
/// from the word itself.
Word project(const Word& w, const IndexSet& keep);

/// Concatenation p_{A_1}(w) ... p_{A_m}(w) for a k-uniform w.
///
/// The index sets must satisfy the chain condition: every j in 1..k-1 has
/// some A_i containing both j and j+1. Under that condition the result is
/// (sum |A_i|)-uniform and represents the same graph as w.
///
/// Throws Error(InvalidInput) if w is empty or not uniform, if fewer than
/// two sets are given, or if a set exceeds k; throws ChainConditionError
/// naming the smallest uncovered j.
Word lemma1_concat(const Word& w, const std::vector<IndexSet>& sets);

/// Smallest j in 1..k-1 not covered by any set, or 0 when all are.
std::size_t first_uncovered(const std::vector<IndexSet>& sets, std::size_t k);

/// p_{{i}}(w) . w, a (k+1)-uniform word representing the same graph as the
/// k-uniform w. Throws Error(InvalidInput) unless 1 <= i <= k.
Word extend_uniform(const Word& w, std::size_t i);

/// Text form: a "k=<bound>" header, then one "x i -> t1 t2 ... tn" line per
/// table entry (the right-hand side may be empty).
void write_obf(std::ostream& out, const OccurrenceBasedFunction& h);
OccurrenceBasedFunction read_obf(std::istream& in);

}  // namespace wordrep
