#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "phpairs/graph.hpp"

namespace phpairs {

/// Two non-empty, vertex-disjoint cliques. Whether they are proper or
/// homogeneous is a property of the ambient graph and is checked separately.
struct CliquePair {
  VertexSet k1;
  VertexSet k2;

  /// Throws ContractViolation unless k1, k2 are non-empty disjoint cliques of g.
  void validate(const Graph& g) const;

  /// The same unordered pair with the side holding the smaller minimum first.
  CliquePair canonical() const;

  bool operator==(const CliquePair&) const = default;
};

/// A PH pair found from a seed pair; both seed vertices lie in pair.k1.
struct PhEmbedding {
  CliquePair pair;
  VertexPair seed;
};

/// Work counters for find_ph_embedding. `word_ops` counts bitset words and
/// per-vertex counter touches; it is the quantity bounded by c * n^2.
struct EmbeddingStats {
  std::uint64_t word_ops = 0;
  std::uint64_t iterations = 0;
};

/// Every vertex outside k1 ∪ k2 is complete or anticomplete to k1, and
/// complete or anticomplete to k2.
bool is_homogeneous_pair(const Graph& g, const CliquePair& p);

/// Every vertex of k1 is proper to k2 and every vertex of k2 is proper to k1.
bool is_proper_pair(const Graph& g, const CliquePair& p);

/// Looks for a PH pair containing the adjacent, mutually non-universal seed
/// {u, v} on one side.
///
/// Starting from T0 = {u, v} the routine iterates T(j+1) = P(T(j)) until some
/// T(j) is not a clique (no embedding) or P(T(j)) = T(j-1), in which case
/// {T(j-1), T(j)} is returned with the seed side as `k1`. The even and odd
/// members of the sequence each grow monotonically, so the loop runs at most
/// n times. Membership in P(T) is decided from per-vertex neighbor counters
/// into the latest even and odd sets; every vertex enters each chain once,
/// which keeps the whole call in O(n^2).
///
/// Seeds that are non-adjacent or where one vertex is universal to the other
/// yield std::nullopt. Throws InternalInvariantError if the monotone growth
/// fails or the iteration cap is hit.
std::optional<PhEmbedding> find_ph_embedding(const Graph& g, Vertex u, Vertex v,
                                             EmbeddingStats* stats = nullptr);

/// Shrinks a homogeneous pair whose union induces a C4 down to a PH pair by
/// repeatedly dropping the smallest vertex that is not proper to the opposite
/// side. Returns std::nullopt if the input is not such a pair or a side runs
/// empty.
std::optional<CliquePair> trim_nth_to_ph(const Graph& g, const CliquePair& p);

/// Default superset of the seed pairs that can have a PH-embedding: E(G).
std::vector<VertexPair> ph_pairs_seed_set(const Graph& g);

}  // namespace phpairs
