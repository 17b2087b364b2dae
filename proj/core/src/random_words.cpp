#include "wordrep/random_words.hpp"

#include <algorithm>
#include <set>

#include "wordrep/error.hpp"

namespace wordrep {

namespace {

std::size_t uniform_index(std::size_t lo, std::size_t hi, Rng& rng) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<std::set<std::size_t>> random_subsets(std::size_t k, std::size_t max_sets, Rng& rng) {
  std::vector<std::set<std::size_t>> sets(uniform_index(2, std::max<std::size_t>(max_sets, 2), rng));
  std::bernoulli_distribution coin(0.5);
  for (auto& s : sets) {
    for (std::size_t i = 1; i <= k; ++i) {
      if (coin(rng)) s.insert(i);
    }
    if (s.empty()) s.insert(uniform_index(1, k, rng));
  }
  return sets;
}

}  // namespace

Word random_uniform_word(std::size_t alphabet_size, std::size_t k, Rng& rng) {
  auto symbols = numbered_symbols(alphabet_size);
  std::vector<Symbol> letters;
  letters.reserve(alphabet_size * k);
  for (std::size_t r = 0; r < k; ++r) letters.insert(letters.end(), symbols.begin(), symbols.end());
  std::shuffle(letters.begin(), letters.end(), rng);
  return Word(std::move(letters));
}

std::vector<IndexSet> random_chain_sets(std::size_t k, std::size_t max_sets, Rng& rng) {
  auto sets = random_subsets(k, max_sets, rng);
  for (std::size_t j = 1; j < k; ++j) {
    bool covered = std::any_of(sets.begin(), sets.end(),
                               [j](const auto& s) { return s.contains(j) && s.contains(j + 1); });
    if (!covered) {
      auto& s = sets[uniform_index(0, sets.size() - 1, rng)];
      s.insert(j);
      s.insert(j + 1);
    }
  }
  return {sets.begin(), sets.end()};
}

std::vector<IndexSet> random_broken_chain_sets(std::size_t k, std::size_t max_sets, Rng& rng) {
  if (k < 2) throw Error(ErrorKind::InvalidInput, "a chain can only be broken for k >= 2");
  auto sets = random_subsets(k, max_sets, rng);
  auto j = uniform_index(1, k - 1, rng);
  std::bernoulli_distribution coin(0.5);
  for (auto& s : sets) {
    if (s.contains(j) && s.contains(j + 1)) s.erase(coin(rng) ? j : j + 1);
  }
  return {sets.begin(), sets.end()};
}

}  // namespace wordrep
