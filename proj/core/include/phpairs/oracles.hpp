#pragma once

#include <cstddef>
#include <vector>

#include "phpairs/detection.hpp"
#include "phpairs/graph.hpp"

namespace phpairs::oracles {

// Exponential-time ground truth for small graphs. Everything here works on
// its own 64-bit adjacency masks and shares no code with the detection and
// reduction paths it is used to check.

struct OracleConfig {
  std::size_t max_vertices = 12;
  std::size_t max_vertices_perfect = 11;
};

/// All PH pairs, each reported once in canonical orientation and sorted.
/// Throws OracleCapExceeded above config.max_vertices.
std::vector<CliquePair> brute_force_ph_pairs(const Graph& g, const OracleConfig& config = {});

/// PH(G): seed pairs that are mutually non-universal and share a side of
/// some PH pair. Sorted.
std::vector<VertexPair> brute_force_ph_seed_pairs(const Graph& g, const OracleConfig& config = {});

/// Homogeneous pairs of cliques that are not complete to each other and
/// whose union induces no C4.
std::vector<CliquePair> brute_force_c4free_homogeneous_pairs(const Graph& g,
                                                            const OracleConfig& config = {});

/// An optimal coloring with colors 0..chi-1.
std::vector<int> brute_force_coloring(const Graph& g, const OracleConfig& config = {});
std::size_t brute_force_chromatic(const Graph& g, const OracleConfig& config = {});
std::size_t brute_force_clique(const Graph& g, const OracleConfig& config = {});

struct StableSet {
  std::vector<Vertex> vertices;
  Weight weight = 0;
};
StableSet brute_force_mwss(const Graph& g, const OracleConfig& config = {});

/// No induced odd cycle of length >= 5 in g or its complement.
/// Throws OracleCapExceeded above config.max_vertices_perfect.
bool is_perfect_small(const Graph& g, const OracleConfig& config = {});

}  // namespace phpairs::oracles
