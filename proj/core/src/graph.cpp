#include "phpairs/graph.hpp"

#include <algorithm>
#include <string>

#include "phpairs/errors.hpp"

namespace phpairs {

Graph::Graph(std::size_t n) : rows_(n, VertexSet(n)) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= order()) {
    throw ContractViolation("vertex " + std::to_string(v) + " out of range for graph of order " +
                            std::to_string(order()));
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  return rows_[u].contains(v);
}

const VertexSet& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return rows_[v];
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ContractViolation("self-loop on vertex " + std::to_string(u));
  if (rows_[u].contains(v)) return false;
  rows_[u].insert(v);
  rows_[v].insert(u);
  ++edge_count_;
  return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (!rows_[u].contains(v)) return false;
  rows_[u].erase(v);
  rows_[v].erase(u);
  --edge_count_;
  return true;
}

void Graph::isolate(Vertex v) {
  check_vertex(v);
  for (Vertex u : rows_[v].to_vector()) remove_edge(u, v);
}

Weight Graph::weight(Vertex v) const {
  check_vertex(v);
  return weights_.empty() ? Weight{1} : weights_[v];
}

void Graph::set_weights(std::vector<Weight> weights) {
  if (!weights.empty() && weights.size() != order()) {
    throw ContractViolation("weight vector length " + std::to_string(weights.size()) +
                            " does not match graph order " + std::to_string(order()));
  }
  weights_ = std::move(weights);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : rows_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::complement() const {
  Graph c(order());
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v = u + 1; v < order(); ++v) {
      if (!rows_[u].contains(v)) c.add_edge(u, v);
    }
  }
  c.weights_ = weights_;
  return c;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  if (keep.universe() != g.order()) {
    throw ContractViolation("induced_subgraph: vertex set universe mismatch");
  }
  InducedSubgraph out;
  out.labels = keep.to_vector();
  std::vector<Vertex> index(g.order(), 0);
  for (std::size_t i = 0; i < out.labels.size(); ++i) index[out.labels[i]] = static_cast<Vertex>(i);

  out.graph = Graph(out.labels.size());
  for (std::size_t i = 0; i < out.labels.size(); ++i) {
    for (Vertex w : g.neighbors(out.labels[i]) & keep) {
      if (index[w] > i) out.graph.add_edge(static_cast<Vertex>(i), index[w]);
    }
  }
  if (g.has_weights()) {
    std::vector<Weight> w;
    w.reserve(out.labels.size());
    for (Vertex v : out.labels) w.push_back(g.weight(v));
    out.graph.set_weights(std::move(w));
  }
  return out;
}

VertexSet neighborhood(const Graph& g, Vertex v) { return g.neighbors(v); }

namespace {

void require_outside(Vertex v, const VertexSet& s, const char* op) {
  if (s.contains(v)) {
    throw ContractViolation(std::string(op) + ": vertex " + std::to_string(v) +
                            " belongs to the set");
  }
}

}  // namespace

bool is_complete_to(const Graph& g, Vertex v, const VertexSet& s) {
  require_outside(v, s, "is_complete_to");
  return s.is_subset_of(g.neighbors(v));
}

bool is_anticomplete_to(const Graph& g, Vertex v, const VertexSet& s) {
  require_outside(v, s, "is_anticomplete_to");
  return !s.intersects(g.neighbors(v));
}

bool is_proper_to(const Graph& g, Vertex v, const VertexSet& k) {
  require_outside(v, k, "is_proper_to");
  const std::size_t hits = g.neighbors(v).intersection_size(k);
  return hits > 0 && hits < k.size();
}

VertexSet proper_set(const Graph& g, const VertexSet& k) {
  if (!is_clique(g, k)) throw ContractViolation("proper_set: argument is not a clique");
  VertexSet out(g.order());
  const std::size_t ksize = k.size();
  for (Vertex x = 0; x < g.order(); ++x) {
    if (k.contains(x)) continue;
    const std::size_t hits = g.neighbors(x).intersection_size(k);
    if (hits > 0 && hits < ksize) out.insert(x);
  }
  return out;
}

bool is_universal(const Graph& g, Vertex v, Vertex u) {
  if (u == v) throw ContractViolation("is_universal: u and v must differ");
  if (!g.adjacent(u, v)) return false;
  VertexSet rest = g.neighbors(u);
  rest.erase(v);
  return rest.is_subset_of(g.neighbors(v));
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    VertexSet others = s;
    others.erase(v);
    if (!others.is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

bool is_stable(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    if (g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

bool pair_has_induced_c4(const Graph& g, const VertexSet& s1, const VertexSet& s2) {
  if (s1.intersects(s2) || !is_clique(g, s1) || !is_clique(g, s2)) {
    throw ContractViolation("pair_has_induced_c4: expects two disjoint cliques");
  }
  std::vector<VertexSet> rows;
  rows.reserve(s1.size());
  for (Vertex a : s1) rows.push_back(g.neighbors(a) & s2);
  std::vector<std::size_t> sizes(rows.size());
  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    sizes[i] = rows[i].size();
    order[i] = i;
  }
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return sizes[a] < sizes[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (!rows[order[i - 1]].is_subset_of(rows[order[i]])) return true;
  }
  return false;
}

}  // namespace phpairs
