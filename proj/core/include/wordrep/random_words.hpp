#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "wordrep/obf.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

using Rng = std::mt19937_64;

/// Uniformly shuffled k-uniform word over the symbols "1".."alphabet_size".
Word random_uniform_word(std::size_t alphabet_size, std::size_t k, Rng& rng);

/// Between 2 and max_sets random nonempty subsets of {1..k}, patched so that
/// every j in 1..k-1 is covered by some set.
std::vector<IndexSet> random_chain_sets(std::size_t k, std::size_t max_sets, Rng& rng);

/// Like random_chain_sets but with at least one j in 1..k-1 left uncovered.
/// Requires k >= 2.
std::vector<IndexSet> random_broken_chain_sets(std::size_t k, std::size_t max_sets, Rng& rng);

}  // namespace wordrep
