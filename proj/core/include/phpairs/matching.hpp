#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "phpairs/graph.hpp"

namespace phpairs {

/// Bipartite graph with sides [0, left) and [0, right).
class BipartiteGraph {
 public:
  BipartiteGraph(std::size_t left, std::size_t right);

  void add_edge(std::size_t l, std::size_t r);

  std::size_t left_size() const noexcept { return adj_.size(); }
  std::size_t right_size() const noexcept { return right_; }
  /// Neighbors of a left vertex, ascending.
  const std::vector<std::size_t>& neighbors(std::size_t l) const { return adj_.at(l); }
  std::size_t edge_count() const noexcept;

 private:
  std::size_t right_;
  std::vector<std::vector<std::size_t>> adj_;
};

using MatchedPair = std::pair<std::size_t, std::size_t>;  // (left, right)

/// Maximum-cardinality matching by Hopcroft-Karp, O(E sqrt(V)). BFS layers and
/// DFS augmentation visit vertices in ascending order, so the result is
/// deterministic. Pairs are returned sorted by left vertex.
std::vector<MatchedPair> max_matching(const BipartiteGraph& b);

/// Maximum clique of the co-bipartite graph G[k1 ∪ k2].
///
/// Builds the bipartite graph of cross non-edges (k1 on the left), takes a
/// maximum matching and applies König: with Z the vertices reachable from
/// unmatched right vertices along alternating paths, the clique is
/// (k1 \ Z) ∪ (k2 ∩ Z). Its size is |k1| + |k2| - ν.
VertexSet max_clique_co_bipartite(const Graph& g, const VertexSet& k1, const VertexSet& k2);

/// k disjoint pairs taken, in left order, from a maximum matching of
/// `nonedges`. Throws InternalInvariantError when k exceeds the matching number.
std::vector<MatchedPair> match_shared_colors(const BipartiteGraph& nonedges, std::size_t k);

}  // namespace phpairs
