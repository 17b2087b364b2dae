#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wordrep/symbol.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

using Edge = std::pair<Symbol, Symbol>;

/// Finite simple undirected graph over named nodes.
///
/// Nodes are kept in lexicographic order and addressed either by name or by
/// their index in that order. Equality is name-sensitive; use isomorphic()
/// to compare graphs with different naming.
class Graph {
 public:
  Graph() = default;

  /// Duplicate edges (in either orientation) collapse. Throws
  /// Error(InvalidInput) on duplicate nodes, self-loops, or edges whose
  /// endpoints are not listed.
  Graph(std::vector<Symbol> nodes, const std::vector<Edge>& edges);

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  const std::vector<Symbol>& nodes() const noexcept { return nodes_; }

  std::optional<std::size_t> index_of(const Symbol& s) const;
  bool has_node(const Symbol& s) const { return index_of(s).has_value(); }

  std::span<const std::size_t> neighbors(std::size_t i) const { return adjacency_[i]; }
  std::size_t degree(std::size_t i) const { return adjacency_[i].size(); }
  bool adjacent(std::size_t i, std::size_t j) const;
  /// False when either node is absent.
  bool adjacent(const Symbol& a, const Symbol& b) const;

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Symbol> nodes_;
  std::vector<std::vector<std::size_t>> adjacency_;  // sorted neighbor indices
  std::size_t edge_count_ = 0;
};

/// K_n on nodes "1".."n". Throws Error(InvalidInput) if n == 0.
Graph complete(std::size_t n);

/// C_n on nodes "1".."n". Throws Error(InvalidInput) if n < 3.
Graph cycle(std::size_t n);

/// Q_k on the 2^k bitstrings of length k; edges join strings at Hamming
/// distance one. Throws Error(InvalidInput) if k == 0 or k > 24.
Graph cube(std::size_t k);

/// G x H with node (g, h) named "g@h". Throws Error(NamingConflict) if two
/// distinct pairs encode to the same name.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Nodes are the alphabet of w; {x, y} is an edge iff x and y alternate.
Graph graph_of_word(const Word& w);

/// Whether graph_of_word(w) == g (name-sensitive).
bool represents(const Word& w, const Graph& g);

/// First disagreement between the graph a word represents and a target.
struct Mismatch {
  enum class Kind { MissingNode, ExtraNode, Pair };
  Kind kind;
  Symbol x;
  std::optional<Symbol> y;      // set for Kind::Pair
  bool expected_edge = false;   // adjacency in the target graph
  Word restriction;             // w restricted to {x, y} for Kind::Pair

  std::string describe() const;
};

/// nullopt iff represents(w, g). Pairs are scanned in node order.
std::optional<Mismatch> find_mismatch(const Word& w, const Graph& g);

using NodeMap = std::map<Symbol, Symbol>;

/// An adjacency-preserving bijection from g's nodes to h's, if one exists.
/// Exhaustive backtracking with degree pruning; meant for small graphs.
std::optional<NodeMap> isomorphic(const Graph& g, const Graph& h);

/// Orbits of the automorphism group on nodes, as a representative index
/// per node (the smallest index in its orbit). Brute force; small graphs.
std::vector<std::size_t> automorphism_orbits(const Graph& g);

}  // namespace wordrep
