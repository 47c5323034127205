#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "phpairs/graph.hpp"

namespace phpairs {

/// Replacement gadget: cliques A1 (labels 0..a1-1) and A2 (labels 0..a2-1)
/// plus a cross-adjacency matrix. Construction enforces that the cliques are
/// non-empty, not complete to each other, and that no two rows of the cross
/// matrix are incomparable (that is, the union induces no C4).
class NonProper2Clique {
 public:
  /// The collapsed gadget.
  NonProper2Clique() : a2_(1), rows_{VertexSet(1)} {}

  /// rows[i] is the set of A2 labels adjacent to A1 label i; each row must have
  /// universe a2. Throws ContractViolation on an invalid gadget.
  static NonProper2Clique create(std::size_t a1, std::size_t a2, std::vector<VertexSet> rows);
  /// Rows as strings of '0'/'1' of equal length.
  static NonProper2Clique from_row_strings(const std::vector<std::string>& rows);
  /// A1 = {0}, A2 = {0}, no cross edge.
  static NonProper2Clique collapsed();

  std::size_t a1_size() const noexcept { return rows_.size(); }
  std::size_t a2_size() const noexcept { return a2_; }
  bool cross(std::size_t i, std::size_t j) const;
  const std::vector<VertexSet>& rows() const noexcept { return rows_; }
  std::vector<std::string> row_strings() const;

  bool operator==(const NonProper2Clique&) const = default;

 private:
  NonProper2Clique(std::size_t a2, std::vector<VertexSet> rows) : a2_(a2), rows_(std::move(rows)) {}

  std::size_t a2_ = 0;
  std::vector<VertexSet> rows_;
};

/// Where the gadget's labels landed in the reduced graph. Artificial vertices
/// reuse the lowest ids of K1 (for A1) and K2 (for A2), so a gadget with
/// A_i = K_i keeps every id in place.
struct Placement {
  std::vector<Vertex> a1;
  std::vector<Vertex> a2;

  bool operator==(const Placement&) const = default;
};

/// Result of a PH reduction. The id space of the input graph is kept; ids of
/// K1 ∪ K2 not reused by the gadget become dead (isolated and outside `live`).
struct ReducedGraph {
  Graph graph;
  VertexSet live;
  Placement placement;
};

/// Replaces the PH pair {k1, k2} by gadget h. Outside vertex x gets an edge to
/// every A1 vertex iff x is complete to k1, and to every A2 vertex iff x is
/// complete to k2; edges among outside vertices are untouched. Requires a PH
/// pair over live vertices and |A1| <= |k1|, |A2| <= |k2|. O(n^2).
ReducedGraph ph_reduce(const Graph& g, const VertexSet& live, const VertexSet& k1,
                       const VertexSet& k2, const NonProper2Clique& h);
ReducedGraph ph_reduce(const Graph& g, const VertexSet& k1, const VertexSet& k2,
                       const NonProper2Clique& h);

/// Set of unordered vertex pairs, stored as a symmetric bit matrix.
class CandidateSet {
 public:
  CandidateSet() = default;
  explicit CandidateSet(std::size_t universe);
  /// S = E(G).
  static CandidateSet from_edges(const Graph& g);

  std::size_t universe() const noexcept { return rows_.size(); }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool contains(VertexPair p) const;
  bool insert(VertexPair p);
  bool erase(VertexPair p);
  /// Pairs containing v, as the set of partners.
  const VertexSet& partners(Vertex v) const { return rows_.at(v); }

  /// Lexicographically smallest pair.
  std::optional<VertexPair> smallest() const;
  std::vector<VertexPair> pairs() const;

  bool operator==(const CandidateSet&) const = default;

 private:
  std::vector<VertexSet> rows_;
  std::size_t size_ = 0;
};

/// Carries S across a reduction. Pairs with both ends outside k1 ∪ k2 are
/// kept; an artificial A1 vertex a is paired with an outside y iff {x, y} ∈ S
/// for every x ∈ k1 (likewise A2 against k2); everything else is dropped.
CandidateSet reduce_candidate_set(const CandidateSet& s, const VertexSet& k1,
                                  const VertexSet& k2, const Placement& placement);

}  // namespace phpairs
