#include "wordrep/graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "wordrep/error.hpp"

namespace wordrep {

Graph::Graph(std::vector<Symbol> nodes, const std::vector<Edge>& edges)
    : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  if (auto dup = std::adjacent_find(nodes_.begin(), nodes_.end()); dup != nodes_.end()) {
    throw Error(ErrorKind::InvalidInput, "duplicate node '" + dup->str() + "'");
  }
  adjacency_.resize(nodes_.size());
  for (const auto& [a, b] : edges) {
    if (a == b) throw Error(ErrorKind::InvalidInput, "self-loop on '" + a.str() + "'");
    auto ia = index_of(a);
    auto ib = index_of(b);
    if (!ia || !ib) {
      throw Error(ErrorKind::InvalidInput, "edge {" + a.str() + ", " + b.str() +
                                               "} has an endpoint that is not a node");
    }
    adjacency_[*ia].push_back(*ib);
    adjacency_[*ib].push_back(*ia);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    edge_count_ += nbrs.size();
  }
  edge_count_ /= 2;
}

std::optional<std::size_t> Graph::index_of(const Symbol& s) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), s);
  if (it == nodes_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

bool Graph::adjacent(std::size_t i, std::size_t j) const {
  const auto& nbrs = adjacency_[i];
  return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

bool Graph::adjacent(const Symbol& a, const Symbol& b) const {
  auto ia = index_of(a);
  auto ib = index_of(b);
  return ia && ib && adjacent(*ia, *ib);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    for (auto j : adjacency_[i]) {
      if (i < j) out.emplace_back(nodes_[i], nodes_[j]);
    }
  }
  return out;
}

Graph complete(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "complete graph needs n >= 1");
  auto nodes = numbered_symbols(n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(nodes[i], nodes[j]);
  }
  return Graph(std::move(nodes), edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidInput, "cycle graph needs n >= 3");
  auto nodes = numbered_symbols(n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(nodes[i], nodes[(i + 1) % n]);
  return Graph(std::move(nodes), edges);
}

Graph cube(std::size_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidInput, "cube dimension must be >= 1");
  if (k > 24) throw Error(ErrorKind::InvalidInput, "cube dimension above 24 is not supported");
  const std::size_t n = std::size_t{1} << k;
  std::vector<Symbol> nodes;
  nodes.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::string bits(k, '0');
    for (std::size_t b = 0; b < k; ++b) {
      if (v >> (k - 1 - b) & 1) bits[b] = '1';
    }
    nodes.emplace_back(std::move(bits));
  }
  std::vector<Edge> edges;
  edges.reserve(k * n / 2);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t b = 0; b < k; ++b) {
      auto u = v ^ (std::size_t{1} << b);
      if (v < u) edges.emplace_back(nodes[v], nodes[u]);
    }
  }
  return Graph(std::move(nodes), edges);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const auto ng = g.node_count();
  const auto nh = h.node_count();
  std::vector<Symbol> names;
  names.reserve(ng * nh);
  for (const auto& a : g.nodes()) {
    for (const auto& b : h.nodes()) names.push_back(Symbol::product(a, b));
  }
  {
    std::unordered_set<Symbol> seen;
    for (const auto& s : names) {
      if (!seen.insert(s).second) {
        throw Error(ErrorKind::NamingConflict,
                    "product node name '" + s.str() + "' arises from two distinct pairs");
      }
    }
  }
  auto at = [&](std::size_t i, std::size_t j) -> const Symbol& { return names[i * nh + j]; };
  std::vector<Edge> edges;
  edges.reserve(ng * h.edge_count() + nh * g.edge_count());
  for (std::size_t i = 0; i < ng; ++i) {
    for (std::size_t j = 0; j < nh; ++j) {
      for (auto j2 : h.neighbors(j)) {
        if (j < j2) edges.emplace_back(at(i, j), at(i, j2));
      }
      for (auto i2 : g.neighbors(i)) {
        if (i < i2) edges.emplace_back(at(i, j), at(i2, j));
      }
    }
  }
  return Graph(std::move(names), edges);
}

Graph graph_of_word(const Word& w) {
  PositionIndex index(w);
  const auto n = index.symbol_count();
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (index.alternates(a, b)) edges.emplace_back(index.symbols()[a], index.symbols()[b]);
    }
  }
  return Graph(index.symbols(), edges);
}

bool represents(const Word& w, const Graph& g) { return !find_mismatch(w, g).has_value(); }

std::string Mismatch::describe() const {
  switch (kind) {
    case Kind::MissingNode:
      return "node " + x.str() + " of the graph does not occur in the word";
    case Kind::ExtraNode:
      return "letter " + x.str() + " of the word is not a node of the graph";
    case Kind::Pair:
      break;
  }
  std::string out = "pair {" + x.str() + ", " + y->str() + "}: ";
  out += expected_edge ? "edge in the graph but the letters do not alternate"
                       : "non-edge in the graph but the letters alternate";
  out += "; restriction: " + (restriction.empty() ? std::string("(empty)") : restriction.to_string());
  return out;
}

std::optional<Mismatch> find_mismatch(const Word& w, const Graph& g) {
  const auto& alphabet = w.alphabet();
  const auto& nodes = g.nodes();
  // Both are sorted; report the first symmetric-difference element.
  for (std::size_t i = 0, j = 0; i < alphabet.size() || j < nodes.size();) {
    if (j == nodes.size() || (i < alphabet.size() && alphabet[i] < nodes[j])) {
      return Mismatch{Mismatch::Kind::ExtraNode, alphabet[i], std::nullopt, false, {}};
    }
    if (i == alphabet.size() || nodes[j] < alphabet[i]) {
      return Mismatch{Mismatch::Kind::MissingNode, nodes[j], std::nullopt, false, {}};
    }
    ++i;
    ++j;
  }
  PositionIndex index(w);
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      bool edge = g.adjacent(a, b);
      if (index.alternates(a, b) != edge) {
        return Mismatch{Mismatch::Kind::Pair, nodes[a], nodes[b], edge,
                        restrict(w, {nodes[a], nodes[b]})};
      }
    }
  }
  return std::nullopt;
}

namespace {

// Backtracking search for adjacency-preserving injections g -> h that are
// bijections when the node counts agree.
class Matcher {
 public:
  Matcher(const Graph& g, const Graph& h)
      : g_(g), h_(h), to_h_(g.node_count(), kUnset), used_(h.node_count(), false) {
    order_.resize(g.node_count());
    std::iota(order_.begin(), order_.end(), 0);
    // Most constrained first: high degree, then BFS-ish via stable order.
    std::stable_sort(order_.begin(), order_.end(),
                     [&](auto a, auto b) { return g.degree(a) > g.degree(b); });
  }

  bool assign(std::size_t gi, std::size_t hi) {
    if (!compatible(gi, hi)) return false;
    to_h_[gi] = hi;
    used_[hi] = true;
    return true;
  }

  bool solve() { return extend(0); }

  const std::vector<std::size_t>& mapping() const { return to_h_; }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  bool compatible(std::size_t gi, std::size_t hi) const {
    if (used_[hi] || g_.degree(gi) != h_.degree(hi)) return false;
    for (std::size_t other = 0; other < to_h_.size(); ++other) {
      if (to_h_[other] == kUnset) continue;
      if (g_.adjacent(gi, other) != h_.adjacent(hi, to_h_[other])) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    while (depth < order_.size() && to_h_[order_[depth]] != kUnset) ++depth;
    if (depth == order_.size()) return true;
    auto gi = order_[depth];
    for (std::size_t hi = 0; hi < h_.node_count(); ++hi) {
      if (!compatible(gi, hi)) continue;
      to_h_[gi] = hi;
      used_[hi] = true;
      if (extend(depth + 1)) return true;
      to_h_[gi] = kUnset;
      used_[hi] = false;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> to_h_;
  std::vector<bool> used_;
};

std::vector<std::size_t> sorted_degrees(const Graph& g) {
  std::vector<std::size_t> d(g.node_count());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = g.degree(i);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

std::optional<NodeMap> isomorphic(const Graph& g, const Graph& h) {
  if (g.node_count() != h.node_count() || g.edge_count() != h.edge_count()) return std::nullopt;
  if (sorted_degrees(g) != sorted_degrees(h)) return std::nullopt;
  Matcher m(g, h);
  if (!m.solve()) return std::nullopt;
  NodeMap out;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    out.emplace(g.nodes()[i], h.nodes()[m.mapping()[i]]);
  }
  return out;
}

std::vector<std::size_t> automorphism_orbits(const Graph& g) {
  const auto n = g.node_count();
  std::vector<std::size_t> rep(n);
  std::iota(rep.begin(), rep.end(), 0);
  for (std::size_t u = 0; u < n; ++u) {
    if (rep[u] != u) continue;  // already placed in an earlier orbit
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rep[v] != v || g.degree(u) != g.degree(v)) continue;
      Matcher m(g, g);
      if (m.assign(u, v) && m.solve()) {
        // Every image of u under some automorphism lands in u's orbit.
        rep[v] = u;
      }
    }
  }
  return rep;
}

}  // namespace wordrep
