#include "phpairs/lift.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "phpairs/errors.hpp"
#include "phpairs/matching.hpp"

namespace phpairs {

bool is_proper_coloring(const Graph& g, std::span<const int> coloring) {
  if (coloring.size() != g.order()) return false;
  for (int c : coloring) {
    if (c < 0) return false;
  }
  for (const auto& [u, v] : g.edges()) {
    if (coloring[u] == coloring[v]) return false;
  }
  return true;
}

std::size_t color_count(std::span<const int> coloring) {
  return std::set<int>(coloring.begin(), coloring.end()).size();
}

namespace {

BipartiteGraph cross_nonedges(const Graph& g, const ReductionStep& step) {
  BipartiteGraph b(step.k1.size(), step.k2.size());
  for (std::size_t i = 0; i < step.k1.size(); ++i) {
    for (std::size_t j = 0; j < step.k2.size(); ++j) {
      if (!g.adjacent(step.k1[i], step.k2[j])) b.add_edge(i, j);
    }
  }
  return b;
}

std::vector<int> sorted_difference(const std::set<int>& a, const std::set<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Coloring lift_coloring(const ReductionTrace& trace, std::span<const int> coloring) {
  if (trace.strategy != "max-clique") {
    throw ContractViolation("coloring lift needs a max-clique trace, got '" + trace.strategy + "'");
  }
  if (!is_proper_coloring(trace.reduced, coloring)) {
    throw ContractViolation("input is not a proper coloring of the reduced graph");
  }

  std::vector<BipartiteGraph> nonedges;
  nonedges.reserve(trace.q());
  replay_trace(trace, [&](const ReplayEvent& e) { nonedges.push_back(cross_nonedges(e.before, e.step)); });

  Coloring work(trace.original.order(), -1);
  for (std::size_t i = 0; i < coloring.size(); ++i) work[trace.reduced_labels[i]] = coloring[i];

  for (std::size_t idx = trace.q(); idx-- > 0;) {
    const ReductionStep& step = trace.steps[idx];
    std::set<int> c1;
    std::set<int> c2;
    for (Vertex v : step.k1) c1.insert(work[v]);
    for (Vertex v : step.k2) c2.insert(work[v]);
    if (c1.size() != step.k1.size() || c2.size() != step.k2.size()) {
      throw InternalInvariantError("clique of the reduced graph repeats a color");
    }
    std::vector<int> shared;
    std::set_intersection(c1.begin(), c1.end(), c2.begin(), c2.end(), std::back_inserter(shared));
    const std::vector<int> only1 = sorted_difference(c1, c2);
    const std::vector<int> only2 = sorted_difference(c2, c1);

    const auto pairs = match_shared_colors(nonedges[idx], shared.size());
    std::vector<bool> used1(step.k1.size(), false);
    std::vector<bool> used2(step.k2.size(), false);
    for (std::size_t t = 0; t < pairs.size(); ++t) {
      work[step.k1[pairs[t].first]] = shared[t];
      work[step.k2[pairs[t].second]] = shared[t];
      used1[pairs[t].first] = true;
      used2[pairs[t].second] = true;
    }
    auto next1 = only1.begin();
    for (std::size_t i = 0; i < step.k1.size(); ++i) {
      if (!used1[i]) work[step.k1[i]] = *next1++;
    }
    auto next2 = only2.begin();
    for (std::size_t j = 0; j < step.k2.size(); ++j) {
      if (!used2[j]) work[step.k2[j]] = *next2++;
    }
  }

  if (!is_proper_coloring(trace.original, work) || color_count(work) != color_count(coloring)) {
    throw InternalInvariantError("lifted coloring is not a proper coloring with the same palette");
  }
  return work;
}

std::vector<Vertex> lift_stable_set(const ReductionTrace& trace, std::span<const Vertex> stable) {
  if (trace.strategy != "stable-set") {
    throw ContractViolation("stable set lift needs a stable-set trace, got '" + trace.strategy + "'");
  }
  VertexSet reduced_set(trace.reduced.order());
  for (Vertex v : stable) {
    if (v >= trace.reduced.order() || reduced_set.contains(v)) {
      throw ContractViolation("stable set lists an invalid or repeated vertex");
    }
    reduced_set.insert(v);
  }
  if (!is_stable(trace.reduced, reduced_set)) {
    throw ContractViolation("input is not a stable set of the reduced graph");
  }
  replay_trace(trace);

  VertexSet lifted(trace.original.order());
  for (Vertex v : reduced_set) lifted.insert(trace.reduced_labels[v]);
  if (!is_stable(trace.original, lifted)) {
    throw InternalInvariantError("lifted set is not stable in the original graph");
  }
  return lifted.to_vector();
}

}  // namespace phpairs
