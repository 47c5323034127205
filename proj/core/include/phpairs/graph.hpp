#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "phpairs/vertex_set.hpp"

namespace phpairs {

using Weight = std::int64_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on dense ids 0..n-1 with one adjacency bitset per
/// vertex. Vertex weights are optional; a graph without explicit weights
/// reports weight 1 for every vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return rows_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const;
  const VertexSet& neighbors(Vertex v) const;

  /// Adds uv; returns false if it was already present. Self-loops throw.
  bool add_edge(Vertex u, Vertex v);
  bool remove_edge(Vertex u, Vertex v);
  /// Drops every edge incident to v.
  void isolate(Vertex v);

  bool has_weights() const noexcept { return !weights_.empty(); }
  Weight weight(Vertex v) const;
  std::span<const Weight> weights() const noexcept { return weights_; }
  void set_weights(std::vector<Weight> weights);
  void clear_weights() noexcept { weights_.clear(); }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;
  VertexSet vertices() const { return VertexSet::full(order()); }
  Graph complement() const;

  bool operator==(const Graph& other) const = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<VertexSet> rows_;
  std::vector<Weight> weights_;
  std::size_t edge_count_ = 0;
};

/// Induced subgraph on `keep`, relabelled to 0..|keep|-1 in ascending id order.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> labels;  // new id -> id in the parent graph
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

// Elementary predicates. All of them are pure and O(n / 64) or better per
// call unless noted.

/// N(v); never contains v.
VertexSet neighborhood(const Graph& g, Vertex v);

/// S ⊆ N(v). Requires v ∉ S.
bool is_complete_to(const Graph& g, Vertex v, const VertexSet& s);
/// S ∩ N(v) = ∅. Requires v ∉ S.
bool is_anticomplete_to(const Graph& g, Vertex v, const VertexSet& s);
/// v has at least one neighbor and one non-neighbor in k. Requires v ∉ k.
bool is_proper_to(const Graph& g, Vertex v, const VertexSet& k);
/// P(k): the vertices outside k that are proper to the clique k.
VertexSet proper_set(const Graph& g, const VertexSet& k);

/// v is universal to u: uv ∈ E and N(u) \ {v} ⊆ N(v).
bool is_universal(const Graph& g, Vertex v, Vertex u);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_stable(const Graph& g, const VertexSet& s);

/// Whether G[s1 ∪ s2] has an induced C4 with two vertices on each side.
///
/// Uses the chain criterion: the pair is C4-free exactly when the cross
/// neighborhoods N(a) ∩ s2, a ∈ s1, are totally ordered by inclusion. Rows
/// are sorted by size and consecutive rows checked for containment.
/// Requires s1, s2 to be disjoint cliques.
bool pair_has_induced_c4(const Graph& g, const VertexSet& s1, const VertexSet& s2);

}  // namespace phpairs
