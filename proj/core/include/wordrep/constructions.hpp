#pragma once

#include <cstddef>

#include "wordrep/obf.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

// Copy j of a node x of G is named "x@j" in every product built here, which
// matches cartesian_product(G, complete(n)) naming.

/// The pair (f, g) whose concatenation f(w) g(w) represents G x K_2:
///   f(x, 1) = x@1,  f(x, i) = x@2 x@1          (1 < i <= k)
///   g(x, 1) = x@2,  g(x, 2) = x@1 x@2,  g(x, i) = empty  (i > 2)
OccurrenceBasedFunction product_k2_first(const Word& w);
OccurrenceBasedFunction product_k2_second(const Word& w);

/// f(w) g(w): a (k+1)-uniform word representing G x K_2 when w is a
/// k-uniform representant of G.
///
/// Throws Error(PreconditionFailure) unless w is k-uniform with k > 1. The
/// k = 1 case is not an oversight: K_3 x K_2 has no 2-uniform representant.
Word product_k2_word(const Word& w);

/// The factor f_j (1 <= j <= n) used by product_kn_word:
///   f_1(x, 1) = x@1,  f_1(x, i) = x@n x@(n-1) ... x@1              (i > 1)
///   f_j(x, 1) = x@j,  f_j(x, 2) = x@(j-1) ... x@1 x@n ... x@j,
///   f_j(x, i) = empty (i > 2)                                      (j >= 2)
OccurrenceBasedFunction product_kn_factor(const Word& w, std::size_t n, std::size_t j);

/// f_n(w) f_(n-1)(w) ... f_1(w): a (k+n-1)-uniform word representing
/// G x K_n. Throws Error(InvalidInput) if n < 2 and
/// Error(PreconditionFailure) unless w is k-uniform with k > 1.
Word product_kn_word(const Word& w, std::size_t n);

/// A k-uniform representant of the k-cube over bitstring node names.
/// k = 1 and k = 2 are fixed base words; larger k apply product_k2_word to
/// the previous word and rename x@1 -> x0, x@2 -> x1.
Word cube_word(std::size_t k);

/// (1 2 ... n)^k, a k-uniform representant of K_n.
Word complete_word(std::size_t n, std::size_t k);

/// A 2-uniform representant of the cycle C_n (n >= 3), verified against
/// cycle(n) before it is returned.
Word cycle_word(std::size_t n);

/// product_k2_word(cycle_word(n)): a 3-uniform representant of the n-prism.
Word prism_word(std::size_t n);

/// Renames every "x@1" to "x0" and "x@2" to "x1". Throws
/// Error(InvalidInput) on any other symbol shape.
Word copies_to_bits(const Word& w);

}  // namespace wordrep
