#include "wordrep/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include <nlohmann/json.hpp>

#include "wordrep/error.hpp"
#include "wordrep/graph_io.hpp"

namespace wordrep {

const char* to_string(SearchResult r) noexcept {
  switch (r) {
    case SearchResult::Witness: return "witness";
    case SearchResult::Exhausted: return "exhausted";
    case SearchResult::ResourceLimit: return "resource-limit";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;
constexpr std::size_t kNoBranch = std::numeric_limits<std::size_t>::max();
constexpr std::uint64_t kClockStride = 1u << 14;

enum class Mode { FirstWitness, CountAll };

// Read-only description of one query, shared by all workers.
struct Problem {
  const Graph& graph;
  std::size_t n;
  std::size_t k;
  std::size_t length;
  SearchOptions options;
  Mode mode;
  std::vector<std::vector<bool>> adjacent;
  std::vector<std::vector<std::size_t>> neighbors;
  std::vector<std::vector<std::size_t>> non_neighbors;
  std::vector<std::size_t> orbit;  // orbit representative per node
  std::vector<std::size_t> first_letters;
  Clock::time_point start;

  Problem(const Graph& g, std::size_t k_, const SearchOptions& opts, Mode m)
      : graph(g), n(g.node_count()), k(k_), length(g.node_count() * k_), options(opts),
        mode(m), adjacent(n, std::vector<bool>(n, false)), neighbors(n), non_neighbors(n),
        orbit(n), start(Clock::now()) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b) continue;
        adjacent[a][b] = g.adjacent(a, b);
        (adjacent[a][b] ? neighbors[a] : non_neighbors[a]).push_back(b);
      }
    }
    if (options.automorphism_reduction) {
      orbit = automorphism_orbits(g);
    } else {
      for (std::size_t s = 0; s < n; ++s) orbit[s] = s;
    }
    for (std::size_t s = 0; s < n; ++s) {
      if (!options.automorphism_reduction || orbit[s] == s) first_letters.push_back(s);
    }
  }
};

// Cross-thread coordination for one query.
struct Shared {
  std::atomic<std::size_t> best_branch{kNoBranch};
  std::atomic<bool> timed_out{false};
  std::atomic<std::uint64_t> explored{0};
  std::atomic<std::uint64_t> leaves{0};
  std::atomic<std::uint64_t> found{0};
  std::mutex mutex;
  std::vector<std::size_t> witness;  // letters of the best branch's witness
};

// Depth-first search state for a single first-letter branch.
class Branch {
 public:
  Branch(const Problem& p, Shared& shared, std::size_t index)
      : p_(p), shared_(shared), index_(index), word_(p.length), count_(p.n, 0),
        last_(p.n, -1), positions_(p.n) {
    for (auto& v : positions_) v.reserve(p.k);
  }

  void run(std::size_t first) {
    if (!place(first, 0)) return;
    descend(1);
    unplace(first);
    shared_.explored += explored_;
    shared_.leaves += leaves_;
  }

 private:
  bool cancelled() {
    if (p_.mode == Mode::FirstWitness && shared_.best_branch.load(std::memory_order_relaxed) < index_) {
      return true;
    }
    if (shared_.timed_out.load(std::memory_order_relaxed)) return true;
    if (p_.options.time_limit && explored_ % kClockStride == 0 &&
        Clock::now() - p_.start > *p_.options.time_limit) {
      shared_.timed_out = true;
      return true;
    }
    return false;
  }

  // Appends s at position pos; false if the prefix can no longer extend to
  // a representant.
  bool place(std::size_t s, std::size_t pos) {
    if (p_.options.pruning && last_[s] >= 0) {
      for (auto t : p_.neighbors[s]) {
        if (last_[t] < last_[s]) return false;  // s s in the {s, t} restriction
      }
    }
    word_[pos] = s;
    positions_[s].push_back(pos);
    ++count_[s];
    auto previous = last_[s];
    last_[s] = static_cast<long>(pos);
    saved_last_.push_back(previous);
    if (p_.options.pruning && count_[s] == p_.k) {
      for (auto t : p_.non_neighbors[s]) {
        if (count_[t] == p_.k && positions_alternate(positions_[s], positions_[t])) {
          unplace(s);
          return false;
        }
      }
    }
    return true;
  }

  void unplace(std::size_t s) {
    positions_[s].pop_back();
    --count_[s];
    last_[s] = saved_last_.back();
    saved_last_.pop_back();
  }

  bool orientation_possible() const {
    if (!p_.options.reversal_reduction) return true;
    auto first_orbit = p_.orbit[word_[0]];
    for (std::size_t s = 0; s < p_.n; ++s) {
      if (count_[s] < p_.k && p_.orbit[s] >= first_orbit) return true;
    }
    return false;
  }

  bool complete_word_ok() const {
    if (p_.options.reversal_reduction && p_.orbit[word_[0]] > p_.orbit[word_[p_.length - 1]]) {
      return false;
    }
    for (std::size_t a = 0; a < p_.n; ++a) {
      for (std::size_t b = a + 1; b < p_.n; ++b) {
        if (positions_alternate(positions_[a], positions_[b]) != p_.adjacent[a][b]) return false;
      }
    }
    return true;
  }

  // Returns true when the search for this branch should stop.
  bool descend(std::size_t pos) {
    ++explored_;
    if (cancelled()) return true;
    if (pos == p_.length) {
      ++leaves_;
      if (!complete_word_ok()) return false;
      if (p_.mode == Mode::CountAll) {
        ++shared_.found;
        return false;
      }
      std::lock_guard lock(shared_.mutex);
      if (index_ < shared_.best_branch) {
        shared_.best_branch = index_;
        shared_.witness = word_;
      }
      return true;
    }
    if (!orientation_possible()) return false;
    for (std::size_t s = 0; s < p_.n; ++s) {
      if (count_[s] == p_.k) continue;
      if (!place(s, pos)) continue;
      bool stop = descend(pos + 1);
      unplace(s);
      if (stop) return true;
    }
    return false;
  }

  const Problem& p_;
  Shared& shared_;
  std::size_t index_;
  std::vector<std::size_t> word_;
  std::vector<std::size_t> count_;
  std::vector<long> last_;
  std::vector<long> saved_last_;
  std::vector<std::vector<std::size_t>> positions_;
  std::uint64_t explored_ = 0;
  std::uint64_t leaves_ = 0;
};

void run_branches(const Problem& p, Shared& shared) {
  const auto branches = p.first_letters.size();
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      auto b = next.fetch_add(1);
      if (b >= branches) return;
      if (p.mode == Mode::FirstWitness && shared.best_branch.load() < b) return;
      Branch(p, shared, b).run(p.first_letters[b]);
    }
  };
  auto threads = std::clamp<std::size_t>(p.options.threads, 1, std::max<std::size_t>(branches, 1));
  if (threads == 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
}

void validate_query(const Graph& g, std::size_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidInput, "k must be positive");
  if (g.node_count() == 0) throw Error(ErrorKind::InvalidInput, "graph has no nodes");
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

SearchOutcome is_k_representable(const Graph& g, std::size_t k, const SearchOptions& options) {
  validate_query(g, k);
  SearchOutcome out;
  out.graph = g;
  out.k = k;
  if (g.node_count() * k > options.budget) {
    out.result = SearchResult::ResourceLimit;
    out.note = std::to_string(g.node_count()) + " nodes x k=" + std::to_string(k) + " = " +
               std::to_string(g.node_count() * k) + " positions exceeds the budget of " +
               std::to_string(options.budget);
    return out;
  }

  Problem problem(g, k, options, Mode::FirstWitness);
  Shared shared;
  run_branches(problem, shared);
  out.stats = {shared.explored.load(), shared.leaves.load(), elapsed_ms(problem.start)};

  if (shared.best_branch != kNoBranch) {
    std::vector<Symbol> letters;
    letters.reserve(shared.witness.size());
    for (auto s : shared.witness) letters.push_back(g.nodes()[s]);
    Word w(std::move(letters));
    if (uniformity(w) != k || !represents(w, g)) {
      throw Error(ErrorKind::ConstructionBug,
                  "search produced '" + w.to_string() + "', which does not represent the graph");
    }
    out.result = SearchResult::Witness;
    out.witness = std::move(w);
  } else if (shared.timed_out) {
    out.result = SearchResult::ResourceLimit;
    out.note = "time limit exceeded";
  } else {
    out.result = SearchResult::Exhausted;
  }
  return out;
}

std::optional<std::size_t> representation_number(const Graph& g, std::size_t k_max,
                                                  const SearchOptions& options,
                                                  std::vector<SearchOutcome>* trace) {
  for (std::size_t k = 1; k <= k_max; ++k) {
    auto outcome = is_k_representable(g, k, options);
    auto result = outcome.result;
    auto note = outcome.note;
    if (trace) trace->push_back(std::move(outcome));
    if (result == SearchResult::Witness) return k;
    if (result == SearchResult::ResourceLimit) {
      throw Error(ErrorKind::ResourceLimit, "search at k=" + std::to_string(k) + " stopped: " + note);
    }
  }
  return std::nullopt;
}

std::uint64_t count_representants(const Graph& g, std::size_t k, const SearchOptions& options,
                                  SearchStats* stats) {
  validate_query(g, k);
  Problem problem(g, k, options, Mode::CountAll);
  Shared shared;
  run_branches(problem, shared);
  if (stats) *stats = {shared.explored.load(), shared.leaves.load(), elapsed_ms(problem.start)};
  return shared.found.load();
}

std::uint64_t uniform_word_count(std::size_t n, std::size_t k) {
  // Product of binomials C(i k, k) for i = 1..n.
  std::uint64_t total = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    std::uint64_t c = 1;
    const std::uint64_t top = i * k;
    for (std::uint64_t j = 1; j <= k; ++j) {
      // c * (top - k + j) / j stays integral at every step.
      auto factor = top - k + j;
      if (c > std::numeric_limits<std::uint64_t>::max() / factor) {
        throw Error(ErrorKind::InvalidInput, "uniform word count overflows 64 bits");
      }
      c = c * factor / j;
    }
    if (total > std::numeric_limits<std::uint64_t>::max() / c) {
      throw Error(ErrorKind::InvalidInput, "uniform word count overflows 64 bits");
    }
    total *= c;
  }
  return total;
}

std::string to_json(const SearchOutcome& outcome) {
  nlohmann::json j;
  j["graph"] = nlohmann::json::parse(to_json_string(outcome.graph));
  j["k"] = outcome.k;
  j["result"] = to_string(outcome.result);
  j["word"] = outcome.witness ? nlohmann::json(outcome.witness->to_string()) : nlohmann::json();
  j["explored"] = outcome.stats.explored;
  j["millis"] = static_cast<std::uint64_t>(outcome.stats.millis + 0.5);
  if (!outcome.note.empty()) j["note"] = outcome.note;
  return j.dump();
}

}  // namespace wordrep
