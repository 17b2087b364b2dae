#include "selftest.hpp"

#include <functional>
#include <optional>
#include <string>

#include "wordrep/constructions.hpp"
#include "wordrep/error.hpp"
#include "wordrep/graph.hpp"
#include "wordrep/random_words.hpp"

namespace wordrep::cli {

namespace {

// A property returns an error description for the failing case, if any.
using Property = std::function<std::optional<std::string>(Rng&)>;

bool check(const std::string& name, std::size_t cases, const Property& property, Rng& rng,
           std::ostream& out) {
  for (std::size_t i = 0; i < cases; ++i) {
    if (auto failure = property(rng)) {
      out << "FAIL " << name << " (case " << i << "): " << *failure << '\n';
      return false;
    }
  }
  out << "ok   " << name << " (" << cases << " cases)\n";
  return true;
}

Word draw_word(Rng& rng) {
  auto alphabet = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
  auto k = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
  return random_uniform_word(alphabet, k, rng);
}

std::optional<std::string> diagonal_failure(const Word& w, const Word& product,
                                            std::size_t copies) {
  auto width = *uniformity(product);
  for (const auto& x : w.alphabet()) {
    for (std::size_t i = 1; i <= copies; ++i) {
      for (std::size_t j = i + 1; j <= copies; ++j) {
        auto a = Symbol::product(x, i);
        auto b = Symbol::product(x, j);
        auto r = restrict(product, {a, b});
        if (r.size() != 2 * width || !alternates(r, a, b)) {
          return "w = " + w.to_string() + ": restriction to {" + a.str() + ", " + b.str() +
                 "} is '" + r.to_string() + "'";
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool run_selftest(const SelftestConfig& config, std::ostream& out) {
  Rng rng(config.seed);
  out << "selftest seed=" << config.seed << " iterations=" << config.iterations << '\n';
  bool ok = true;

  ok &= check("product with K2 equals Cartesian product", config.iterations,
              [](Rng& r) -> std::optional<std::string> {
                auto w = draw_word(r);
                auto product = product_k2_word(w);
                if (graph_of_word(product) != cartesian_product(graph_of_word(w), complete(2))) {
                  return "w = " + w.to_string();
                }
                return diagonal_failure(w, product, 2);
              },
              rng, out);

  ok &= check("product with Kn equals Cartesian product", config.iterations,
              [](Rng& r) -> std::optional<std::string> {
                auto w = draw_word(r);
                auto n = std::uniform_int_distribution<std::size_t>(2, 4)(r);
                auto product = product_kn_word(w, n);
                auto expected = cartesian_product(graph_of_word(w), complete(n));
                if (graph_of_word(product) != expected) {
                  return "w = " + w.to_string() + ", n = " + std::to_string(n);
                }
                return diagonal_failure(w, product, n);
              },
              rng, out);

  ok &= check("projection concatenation preserves the graph", config.iterations,
              [](Rng& r) -> std::optional<std::string> {
                auto w = draw_word(r);
                auto sets = random_chain_sets(*uniformity(w), 4, r);
                if (graph_of_word(lemma1_concat(w, sets)) != graph_of_word(w)) {
                  return "w = " + w.to_string();
                }
                return std::nullopt;
              },
              rng, out);

  ok &= check("broken chain is rejected", config.iterations,
              [](Rng& r) -> std::optional<std::string> {
                auto w = draw_word(r);
                auto k = *uniformity(w);
                auto sets = random_broken_chain_sets(k, 4, r);
                try {
                  lemma1_concat(w, sets);
                } catch (const ChainConditionError& e) {
                  if (e.uncovered() == first_uncovered(sets, k)) return std::nullopt;
                  return "wrong uncovered index " + std::to_string(e.uncovered());
                }
                return "accepted a broken chain for w = " + w.to_string();
              },
              rng, out);

  ok &= check("cube words represent cubes", 1,
              [&config](Rng&) -> std::optional<std::string> {
                for (std::size_t k = 1; k <= config.max_cube; ++k) {
                  auto w = cube_word(k);
                  if (uniformity(w) != k || !represents(w, cube(k))) {
                    return "k = " + std::to_string(k);
                  }
                }
                return std::nullopt;
              },
              rng, out);

  out << (ok ? "selftest passed" : "selftest FAILED") << '\n';
  return ok;
}

}  // namespace wordrep::cli
