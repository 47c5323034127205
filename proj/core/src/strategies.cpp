#include "phpairs/strategies.hpp"

#include <string>

#include "phpairs/errors.hpp"
#include "phpairs/matching.hpp"

namespace phpairs {

PairView PairView::of(const Graph& g, const VertexSet& k1, const VertexSet& k2) {
  PairView view;
  view.labels = k1.to_vector();
  view.k1_size = view.labels.size();
  for (Vertex v : k2) view.labels.push_back(v);
  view.k2_size = view.labels.size() - view.k1_size;

  const std::size_t m = view.labels.size();
  view.local = Graph(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (g.adjacent(view.labels[i], view.labels[j])) {
        view.local.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  if (g.has_weights()) {
    std::vector<Weight> w;
    w.reserve(m);
    for (Vertex v : view.labels) w.push_back(g.weight(v));
    view.local.set_weights(std::move(w));
  }
  return view;
}

namespace {

VertexSet local_range(std::size_t universe, std::size_t from, std::size_t to) {
  VertexSet s(universe);
  for (std::size_t v = from; v < to; ++v) s.insert(static_cast<Vertex>(v));
  return s;
}

Gadget run_on(const Strategy& strategy, const Graph& g, const VertexSet& k1,
              const VertexSet& k2) {
  const PairView view = PairView::of(g, k1, k2);
  Gadget gadget = strategy.build(view);
  for (Vertex& v : gadget.data) v = view.labels.at(v);
  return gadget;
}

}  // namespace

Gadget MaxCliqueStrategy::build(const PairView& view) const {
  const std::size_t m = view.k1_size + view.k2_size;
  const VertexSet k1 = local_range(m, 0, view.k1_size);
  const VertexSet k2 = local_range(m, view.k1_size, m);
  const VertexSet x = max_clique_co_bipartite(view.local, k1, k2);

  std::vector<VertexSet> rows(view.k1_size, VertexSet(view.k2_size));
  for (std::size_t i = 0; i < view.k1_size; ++i) {
    if (!x.contains(static_cast<Vertex>(i))) continue;
    for (std::size_t j = 0; j < view.k2_size; ++j) {
      if (x.contains(static_cast<Vertex>(view.k1_size + j))) rows[i].insert(static_cast<Vertex>(j));
    }
  }
  return {NonProper2Clique::create(view.k1_size, view.k2_size, std::move(rows)), x.to_vector()};
}

Gadget StableSetStrategy::build(const PairView& view) const {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Weight best_weight = 0;
  for (std::size_t i = 0; i < view.k1_size; ++i) {
    for (std::size_t j = 0; j < view.k2_size; ++j) {
      const auto a = static_cast<Vertex>(i);
      const auto b = static_cast<Vertex>(view.k1_size + j);
      if (view.local.adjacent(a, b)) continue;
      const Weight w = view.local.weight(a) + view.local.weight(b);
      if (!best || w > best_weight) {
        best = {i, j};
        best_weight = w;
      }
    }
  }
  if (!best) throw ContractViolation("stable-set strategy: cliques are complete to each other");

  std::vector<VertexSet> rows(view.k1_size, VertexSet::full(view.k2_size));
  rows[best->first].erase(static_cast<Vertex>(best->second));
  return {NonProper2Clique::create(view.k1_size, view.k2_size, std::move(rows)),
          {static_cast<Vertex>(best->first), static_cast<Vertex>(view.k1_size + best->second)}};
}

Gadget CollapseStrategy::build(const PairView&) const { return {NonProper2Clique::collapsed(), {}}; }

std::unique_ptr<Strategy> make_strategy(std::string_view name) {
  if (name == "max-clique") return std::make_unique<MaxCliqueStrategy>();
  if (name == "stable-set") return std::make_unique<StableSetStrategy>();
  if (name == "collapse") return std::make_unique<CollapseStrategy>();
  throw ContractViolation("unknown strategy '" + std::string(name) + "'");
}

Gadget strategy_max_clique(const Graph& g, const VertexSet& k1, const VertexSet& k2) {
  return run_on(MaxCliqueStrategy{}, g, k1, k2);
}

Gadget strategy_stable_set(const Graph& g, const VertexSet& k1, const VertexSet& k2) {
  return run_on(StableSetStrategy{}, g, k1, k2);
}

Gadget strategy_collapse(const Graph& g, const VertexSet& k1, const VertexSet& k2) {
  return run_on(CollapseStrategy{}, g, k1, k2);
}

}  // namespace phpairs
