// Acceptance harness: prints one PASS/FAIL line per criterion and exits
// non-zero if any fails. `--extended` adds the 16-position exhaustive
// search for K4 x K2 at k = 2.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "wordrep/random_words.hpp"
#include "wordrep/wordrep.hpp"

using namespace wordrep;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Check {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string fmt(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

// Runs `body`, fails the check if it overruns `limit` seconds, and prints
// the verdict line.
bool criterion(int id, const std::string& title, double limit,
               const std::function<void(Check&, std::string&)>& body) {
  Check check;
  std::string summary;
  auto start = Clock::now();
  try {
    body(check, summary);
  } catch (const std::exception& e) {
    check.fail(std::string("unexpected exception: ") + e.what());
  }
  double elapsed = seconds_since(start);
  if (check.ok && elapsed > limit) check.fail("took " + fmt(elapsed) + ", limit " + fmt(limit));
  std::printf("%s AC%d %s: %s [%s]\n", check.ok ? "PASS" : "FAIL", id, title.c_str(),
              check.ok ? summary.c_str() : check.detail.c_str(), fmt(elapsed).c_str());
  std::fflush(stdout);
  return check.ok;
}

Graph graph_from_mask(std::size_t n, unsigned mask) {
  auto nodes = numbered_symbols(n);
  std::vector<Edge> edges;
  unsigned bit = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b, ++bit) {
      if (mask >> bit & 1) edges.emplace_back(nodes[a], nodes[b]);
    }
  }
  return Graph(nodes, edges);
}

// Words produced by the product constructions, kept for the diagonal check.
struct ProductOutput {
  Word base;
  std::size_t copies;
  Word word;
};

std::vector<ProductOutput> g_outputs;

std::string describe(const Word& w) {
  auto s = w.to_string();
  return s.size() > 60 ? s.substr(0, 57) + "..." : s;
}

}  // namespace

int main(int argc, char** argv) {
  bool extended = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--extended") == 0) {
      extended = true;
    } else {
      std::fprintf(stderr, "usage: %s [--extended]\n", argv[0]);
      return 2;
    }
  }

  bool all = true;

  all &= criterion(1, "cube words represent Q_k", 10.0, [](Check& c, std::string& summary) {
    for (std::size_t k = 1; k <= 8; ++k) {
      auto w = cube_word(k);
      if (uniformity(w) != k) c.fail("k=" + std::to_string(k) + ": not k-uniform");
      if (w.alphabet().size() != std::size_t{1} << k) c.fail("k=" + std::to_string(k) + ": alphabet");
      if (!represents(w, cube(k))) c.fail("k=" + std::to_string(k) + ": does not represent Q_k");
    }
    summary = "k=1..8 exact";
  });

  all &= criterion(1, "cube word for Q_10", 60.0, [](Check& c, std::string& summary) {
    auto w = cube_word(10);
    if (uniformity(w) != 10) c.fail("not 10-uniform");
    if (w.alphabet().size() != 1024) c.fail("alphabet size");
    if (auto m = find_mismatch(w, cube(10))) c.fail(m->describe());
    summary = "10240 letters, 1024 symbols";
  });

  all &= criterion(2, "K2 product graph equals G x K2", 5.0, [](Check& c, std::string& summary) {
    Rng rng(20240501);
    std::size_t cases = 0;
    for (std::size_t iter = 0; iter < 600; ++iter) {
      std::size_t k = 2 + iter % 3;
      auto w = random_uniform_word(1 + rng() % 5, k, rng);
      auto out = product_k2_word(w);
      if (graph_of_word(out) != cartesian_product(graph_of_word(w), complete(2))) {
        c.fail("mismatch on " + describe(w));
      }
      g_outputs.push_back({w, 2, out});
      ++cases;
    }
    summary = std::to_string(cases) + " random words, k in {2,3,4}, alphabet <= 5";
  });

  all &= criterion(3, "Kn product graph equals G x Kn", 20.0, [](Check& c, std::string& summary) {
    Rng rng(20240502);
    std::size_t cases = 0;
    for (std::size_t n = 2; n <= 4; ++n) {
      for (std::size_t iter = 0; iter < 500; ++iter) {
        std::size_t k = 2 + iter % 3;
        auto w = random_uniform_word(1 + rng() % 5, k, rng);
        auto out = product_kn_word(w, n);
        auto g = graph_of_word(out);
        if (g != cartesian_product(graph_of_word(w), complete(n))) {
          c.fail("n=" + std::to_string(n) + " mismatch on " + describe(w));
        }
        if (n == 2 && g != graph_of_word(product_k2_word(w))) {
          c.fail("n=2 differs from K2 construction on " + describe(w));
        }
        g_outputs.push_back({w, n, out});
        ++cases;
      }
    }
    summary = std::to_string(cases) + " cases over n in {2,3,4}, n=2 matches K2 construction";
  });

  all &= criterion(4, "chain-condition concatenation", 5.0, [](Check& c, std::string& summary) {
    Rng rng(20240504);
    std::size_t kept = 0, rejected = 0;
    for (std::size_t iter = 0; iter < 600; ++iter) {
      std::size_t k = 1 + iter % 4;
      auto w = random_uniform_word(1 + rng() % 5, k, rng);
      auto sets = random_chain_sets(k, 4, rng);
      if (graph_of_word(lemma1_concat(w, sets)) != graph_of_word(w)) {
        c.fail("graph changed for " + describe(w));
      }
      ++kept;
    }
    for (std::size_t iter = 0; iter < 200; ++iter) {
      std::size_t k = 2 + iter % 3;
      auto w = random_uniform_word(1 + rng() % 5, k, rng);
      auto sets = random_broken_chain_sets(k, 4, rng);
      std::size_t expected = 0;
      for (std::size_t j = 1; j < k && expected == 0; ++j) {
        bool covered = false;
        for (const auto& a : sets) covered = covered || (a.contains(j) && a.contains(j + 1));
        if (!covered) expected = j;
      }
      try {
        lemma1_concat(w, sets);
        c.fail("violating sets accepted");
      } catch (const ChainConditionError& e) {
        if (e.uncovered() != expected) {
          c.fail("reported j=" + std::to_string(e.uncovered()) + ", expected " +
                 std::to_string(expected));
        }
      }
      ++rejected;
    }
    summary = std::to_string(kept) + " preserved, " + std::to_string(rejected) +
              " rejected with uncovered j";
  });

  all &= criterion(5, "representation numbers of Kn x K2", 60.0, [](Check& c, std::string& summary) {
    for (std::size_t n = 1; n <= 3; ++n) {
      auto g = cartesian_product(complete(n), complete(2));
      std::vector<SearchOutcome> trace;
      auto r = representation_number(g, 3, {}, &trace);
      if (r != n) c.fail("n=" + std::to_string(n) + ": got " + (r ? std::to_string(*r) : "none"));
      for (const auto& t : trace) {
        if (t.witness && !represents(*t.witness, g)) c.fail("bad witness");
      }
    }
    auto k4 = cartesian_product(complete(4), complete(2));
    auto w = product_k2_word(complete_word(4, 2));
    if (uniformity(w) != 3 || !represents(w, k4)) c.fail("n=4 construction does not verify");
    summary = "repnum 1, 2, 3 for n = 1, 2, 3; 3-uniform word for n = 4 verified";
  });

  if (extended) {
    all &= criterion(5, "K4 x K2 is not 2-representable", 600.0,
                     [](Check& c, std::string& summary) {
      SearchOptions options;
      options.budget = 16;
      auto outcome = is_k_representable(cartesian_product(complete(4), complete(2)), 2, options);
      if (outcome.result != SearchResult::Exhausted) {
        c.fail(std::string("search ended with ") + to_string(outcome.result));
      }
      summary = "exhausted, " + std::to_string(outcome.stats.explored) + " nodes explored";
    });
  }

  all &= criterion(6, "diagonal pairs alternate fully", 60.0, [](Check& c, std::string& summary) {
    std::size_t pairs = 0;
    if (g_outputs.empty()) c.fail("no construction outputs recorded");
    for (const auto& o : g_outputs) {
      auto k = uniformity(o.word);
      if (!k) {
        c.fail("output not uniform for " + describe(o.base));
        continue;
      }
      for (const auto& x : o.base.alphabet()) {
        for (std::size_t i = 1; i <= o.copies; ++i) {
          for (std::size_t j = i + 1; j <= o.copies; ++j) {
            auto a = Symbol::product(x, i);
            auto b = Symbol::product(x, j);
            auto r = restrict(o.word, {a, b});
            bool ok = r.size() == 2 * *k;
            for (std::size_t p = 1; ok && p < r.size(); ++p) ok = r[p] != r[p - 1];
            if (!ok) c.fail(a.str() + "/" + b.str() + " in output for " + describe(o.base));
            ++pairs;
          }
        }
      }
    }
    summary = std::to_string(g_outputs.size()) + " outputs, " + std::to_string(pairs) + " pairs";
  });

  all &= criterion(7, "reduced and unreduced search agree", 120.0,
                   [](Check& c, std::string& summary) {
    SearchOptions reduced;
    reduced.automorphism_reduction = true;
    reduced.reversal_reduction = true;
    std::size_t graphs = 0, witnesses = 0;
    for (std::size_t n = 1; n <= 5; ++n) {
      const unsigned masks = 1u << (n * (n - 1) / 2);
      for (unsigned mask = 0; mask < masks; ++mask) {
        auto g = graph_from_mask(n, mask);
        ++graphs;
        for (std::size_t k = 1; k <= 2; ++k) {
          auto plain = is_k_representable(g, k);
          auto small = is_k_representable(g, k, reduced);
          if (plain.result != small.result) {
            c.fail("disagree on n=" + std::to_string(n) + " mask=" + std::to_string(mask) +
                   " k=" + std::to_string(k));
          }
          for (const auto* o : {&plain, &small}) {
            if (!o->witness) continue;
            ++witnesses;
            if (!represents(*o->witness, g)) c.fail("witness fails represents()");
          }
        }
      }
    }
    summary = std::to_string(graphs) + " labelled graphs, k<=2, " + std::to_string(witnesses) +
              " witnesses verified";
  });

  std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILED");
  return all ? 0 : 1;
}
