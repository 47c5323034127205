#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "phpairs/graph.hpp"
#include "phpairs/reduction.hpp"
#include "phpairs/strategies.hpp"

namespace phpairs {

/// One PH reduction. Vertex ids live in the id space of the original graph;
/// after a reduction some ids may belong to artificial vertices.
struct ReductionStep {
  std::vector<Vertex> k1;  // ascending, contains the seed pair
  std::vector<Vertex> k2;  // ascending
  NonProper2Clique gadget;
  Placement placement;
  std::string strategy;
  std::vector<Vertex> strategy_data;
  /// Measured cost of building the gadget. Kept in memory only.
  std::chrono::nanoseconds gadget_time{0};

  bool operator==(const ReductionStep& other) const {
    return k1 == other.k1 && k2 == other.k2 && gadget == other.gadget &&
           placement == other.placement && strategy == other.strategy &&
           strategy_data == other.strategy_data;
  }
};

/// Everything needed to replay an elimination run and lift solutions of the
/// reduced graph back onto the original.
struct ReductionTrace {
  std::string strategy;
  Graph original;
  /// The PH-free result, compacted to ids 0..k-1.
  Graph reduced;
  /// reduced id -> id in the original id space.
  std::vector<Vertex> reduced_labels;
  std::vector<ReductionStep> steps;

  std::size_t q() const noexcept { return steps.size(); }
  bool operator==(const ReductionTrace&) const = default;
};

struct IterationEvent {
  VertexPair pair;
  bool reduced = false;
  std::size_t candidates_before = 0;
  std::size_t candidates_after = 0;
};

/// Snapshot handed to observers after each reduction. Graphs use the working
/// id space; dead ids are isolated and absent from the live masks.
struct StepEvent {
  std::size_t index;
  const Graph& before;
  const VertexSet& live_before;
  const Graph& after;
  const VertexSet& live_after;
  const CandidateSet& candidates_after;
  const ReductionStep& step;
};

struct EliminationHooks {
  std::function<void(const IterationEvent&)> on_iteration;
  std::function<void(const StepEvent&)> on_step;
};

/// Removes every PH pair of cliques from g.
///
/// Starts from S = E(G). Each round takes the lexicographically smallest pair
/// of S and searches it for a PH-embedding. A hit replaces the pair of
/// cliques by the strategy's gadget and carries S over with
/// reduce_candidate_set; a miss drops the pair from S. |S| shrinks every round,
/// so at most |E(G)| reductions happen. Graphs with fewer than four vertices or
/// no edges are returned untouched.
ReductionTrace eliminate_all(const Graph& g, const Strategy& strategy,
                             const EliminationHooks* hooks = nullptr);

/// Forward replay of a trace. For step i the callback sees G^i and G^{i+1} in
/// the working id space.
struct ReplayEvent {
  std::size_t index;
  const Graph& before;
  const VertexSet& live_before;
  const Graph& after;
  const VertexSet& live_after;
  const ReductionStep& step;
};

/// Re-applies every step of the trace to its original graph, checking that each
/// recorded pair is a PH pair at that point, that the recorded placement is the
/// one ph_reduce produces, and that the end result equals trace.reduced.
/// Throws ContractViolation on any mismatch.
void replay_trace(const ReductionTrace& trace,
                  const std::function<void(const ReplayEvent&)>& visit = {});

}  // namespace phpairs
