#pragma once

#include <cstddef>
#include <cstdint>

#include "phpairs/graph.hpp"

namespace phpairs {

struct RandomGraphOptions {
  std::size_t n = 10;
  double density = 0.5;
  std::uint64_t seed = 1;
  /// Uniform integer weights in [1, max_weight]; 0 leaves the graph unweighted.
  Weight max_weight = 0;
  /// Plant a PH pair of cliques before filling in the remaining edges.
  bool plant_ph_pair = false;
};

/// Erdős–Rényi G(n, p), optionally with a planted PH pair. When planting, two
/// disjoint cliques of size >= 2 are chosen, their cross edges are drawn until
/// the pair is proper, and every other vertex is made complete or anticomplete
/// to each clique at random. Deterministic for a given option set.
Graph random_graph(const RandomGraphOptions& options);

}  // namespace phpairs
