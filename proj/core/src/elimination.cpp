#include "phpairs/elimination.hpp"

#include <string>

#include "phpairs/detection.hpp"
#include "phpairs/errors.hpp"

namespace phpairs {

ReductionTrace eliminate_all(const Graph& g, const Strategy& strategy,
                             const EliminationHooks* hooks) {
  ReductionTrace trace;
  trace.strategy = std::string(strategy.name());
  trace.original = g;

  Graph current = g;
  VertexSet live = g.vertices();

  if (g.order() >= 4 && g.edge_count() > 0) {
    CandidateSet candidates = CandidateSet::from_edges(g);
    while (const auto pick = candidates.smallest()) {
      const std::size_t before = candidates.size();
      const auto embedding = find_ph_embedding(current, pick->lo, pick->hi);
      if (!embedding) {
        candidates.erase(*pick);
        if (hooks != nullptr && hooks->on_iteration) {
          hooks->on_iteration({*pick, false, before, candidates.size()});
        }
        continue;
      }

      const VertexSet& k1 = embedding->pair.k1;
      const VertexSet& k2 = embedding->pair.k2;
      const PairView view = PairView::of(current, k1, k2);
      const auto started = std::chrono::steady_clock::now();
      Gadget gadget = strategy.build(view);
      const auto elapsed = std::chrono::steady_clock::now() - started;
      if (strategy.keeps_identity() &&
          (gadget.h.a1_size() != view.k1_size || gadget.h.a2_size() != view.k2_size)) {
        throw InternalInvariantError("identity strategy changed the size of a clique");
      }

      ReducedGraph reduced = ph_reduce(current, live, k1, k2, gadget.h);
      CandidateSet next = reduce_candidate_set(candidates, k1, k2, reduced.placement);
      if (next.size() >= before) {
        throw InternalInvariantError("candidate set did not shrink across a reduction");
      }

      ReductionStep step;
      step.k1 = k1.to_vector();
      step.k2 = k2.to_vector();
      step.gadget = std::move(gadget.h);
      step.placement = reduced.placement;
      step.strategy = trace.strategy;
      for (Vertex v : gadget.data) step.strategy_data.push_back(view.labels.at(v));
      step.gadget_time = std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed);
      trace.steps.push_back(std::move(step));
      if (trace.q() > g.edge_count()) {
        throw InternalInvariantError("more reductions than edges in the input graph");
      }

      if (hooks != nullptr && hooks->on_iteration) {
        hooks->on_iteration({*pick, true, before, next.size()});
      }
      if (hooks != nullptr && hooks->on_step) {
        hooks->on_step({trace.q() - 1, current, live, reduced.graph, reduced.live, next,
                        trace.steps.back()});
      }
      current = std::move(reduced.graph);
      live = std::move(reduced.live);
      candidates = std::move(next);
    }
  }

  InducedSubgraph compact = induced_subgraph(current, live);
  trace.reduced = std::move(compact.graph);
  trace.reduced_labels = std::move(compact.labels);
  return trace;
}

void replay_trace(const ReductionTrace& trace,
                  const std::function<void(const ReplayEvent&)>& visit) {
  const std::size_t n = trace.original.order();
  Graph current = trace.original;
  VertexSet live = current.vertices();
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const ReductionStep& step = trace.steps[i];
    const VertexSet k1(n, std::span<const Vertex>(step.k1));
    const VertexSet k2(n, std::span<const Vertex>(step.k2));
    ReducedGraph reduced = [&] {
      try {
        return ph_reduce(current, live, k1, k2, step.gadget);
      } catch (const ContractViolation& e) {
        throw ContractViolation("trace step " + std::to_string(i) + ": " + e.what());
      }
    }();
    if (reduced.placement != step.placement) {
      throw ContractViolation("trace step " + std::to_string(i) + ": placement mismatch");
    }
    if (visit) visit({i, current, live, reduced.graph, reduced.live, step});
    current = std::move(reduced.graph);
    live = std::move(reduced.live);
  }
  const InducedSubgraph compact = induced_subgraph(current, live);
  if (compact.graph != trace.reduced || compact.labels != trace.reduced_labels) {
    throw ContractViolation("trace replay does not reproduce the recorded reduced graph");
  }
}

}  // namespace phpairs
