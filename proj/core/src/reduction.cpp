#include "phpairs/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "phpairs/detection.hpp"
#include "phpairs/errors.hpp"

namespace phpairs {

NonProper2Clique NonProper2Clique::create(std::size_t a1, std::size_t a2,
                                          std::vector<VertexSet> rows) {
  if (a1 == 0 || a2 == 0) throw ContractViolation("gadget needs two non-empty cliques");
  if (rows.size() != a1) throw ContractViolation("gadget cross matrix has the wrong row count");
  bool complete = true;
  for (const auto& row : rows) {
    if (row.universe() != a2) throw ContractViolation("gadget cross row has the wrong width");
    complete = complete && row.size() == a2;
  }
  if (complete) throw ContractViolation("gadget cliques are complete to each other");

  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return rows[x].size() < rows[y].size(); });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (!rows[order[i - 1]].is_subset_of(rows[order[i]])) {
      throw ContractViolation("gadget cross matrix induces a C4");
    }
  }
  return NonProper2Clique(a2, std::move(rows));
}

NonProper2Clique NonProper2Clique::from_row_strings(const std::vector<std::string>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw ContractViolation("gadget needs two non-empty cliques");
  }
  const std::size_t width = rows.front().size();
  std::vector<VertexSet> sets;
  sets.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != width) throw ContractViolation("gadget rows differ in length");
    VertexSet s(width);
    for (std::size_t j = 0; j < width; ++j) {
      if (row[j] == '1') {
        s.insert(static_cast<Vertex>(j));
      } else if (row[j] != '0') {
        throw ContractViolation("gadget row contains a character other than 0/1");
      }
    }
    sets.push_back(std::move(s));
  }
  return create(rows.size(), width, std::move(sets));
}

NonProper2Clique NonProper2Clique::collapsed() { return create(1, 1, {VertexSet(1)}); }

bool NonProper2Clique::cross(std::size_t i, std::size_t j) const {
  return rows_.at(i).contains(static_cast<Vertex>(j));
}

std::vector<std::string> NonProper2Clique::row_strings() const {
  std::vector<std::string> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) {
    std::string s(a2_, '0');
    for (Vertex j : row) s[j] = '1';
    out.push_back(std::move(s));
  }
  return out;
}

ReducedGraph ph_reduce(const Graph& g, const VertexSet& live, const VertexSet& k1,
                       const VertexSet& k2, const NonProper2Clique& h) {
  const std::size_t n = g.order();
  if (live.universe() != n || k1.universe() != n || k2.universe() != n) {
    throw ContractViolation("ph_reduce: vertex set universe mismatch");
  }
  if (!k1.is_subset_of(live) || !k2.is_subset_of(live)) {
    throw ContractViolation("ph_reduce: pair uses dead vertices");
  }
  const CliquePair pair{k1, k2};
  if (!is_proper_pair(g, pair) || !is_homogeneous_pair(g, pair)) {
    throw ContractViolation("ph_reduce: {K1, K2} is not a PH pair");
  }
  if (h.a1_size() > k1.size() || h.a2_size() > k2.size()) {
    throw ContractViolation("ph_reduce: gadget is larger than the pair it replaces");
  }

  ReducedGraph out{g, live, {}};
  const std::vector<Vertex> k1_ids = k1.to_vector();
  const std::vector<Vertex> k2_ids = k2.to_vector();
  out.placement.a1.assign(k1_ids.begin(), k1_ids.begin() + static_cast<std::ptrdiff_t>(h.a1_size()));
  out.placement.a2.assign(k2_ids.begin(), k2_ids.begin() + static_cast<std::ptrdiff_t>(h.a2_size()));

  const VertexSet inside = k1 | k2;
  std::vector<Vertex> complete_k1;
  std::vector<Vertex> complete_k2;
  for (Vertex x : live - inside) {
    if (k1.is_subset_of(g.neighbors(x))) complete_k1.push_back(x);
    if (k2.is_subset_of(g.neighbors(x))) complete_k2.push_back(x);
  }

  for (Vertex x : inside) {
    out.graph.isolate(x);
    out.live.erase(x);
  }
  const auto& a1 = out.placement.a1;
  const auto& a2 = out.placement.a2;
  for (Vertex a : a1) out.live.insert(a);
  for (Vertex b : a2) out.live.insert(b);

  for (std::size_t i = 0; i < a1.size(); ++i) {
    for (std::size_t j = i + 1; j < a1.size(); ++j) out.graph.add_edge(a1[i], a1[j]);
  }
  for (std::size_t i = 0; i < a2.size(); ++i) {
    for (std::size_t j = i + 1; j < a2.size(); ++j) out.graph.add_edge(a2[i], a2[j]);
  }
  for (std::size_t i = 0; i < a1.size(); ++i) {
    for (Vertex j : h.rows()[i]) out.graph.add_edge(a1[i], a2[j]);
  }
  for (Vertex x : complete_k1) {
    for (Vertex a : a1) out.graph.add_edge(x, a);
  }
  for (Vertex x : complete_k2) {
    for (Vertex b : a2) out.graph.add_edge(x, b);
  }
  return out;
}

ReducedGraph ph_reduce(const Graph& g, const VertexSet& k1, const VertexSet& k2,
                       const NonProper2Clique& h) {
  return ph_reduce(g, g.vertices(), k1, k2, h);
}

CandidateSet::CandidateSet(std::size_t universe) : rows_(universe, VertexSet(universe)) {}

CandidateSet CandidateSet::from_edges(const Graph& g) {
  CandidateSet s(g.order());
  for (Vertex v = 0; v < g.order(); ++v) s.rows_[v] = g.neighbors(v);
  s.size_ = g.edge_count();
  return s;
}

bool CandidateSet::contains(VertexPair p) const {
  return p.hi < rows_.size() && rows_[p.lo].contains(p.hi);
}

bool CandidateSet::insert(VertexPair p) {
  if (p.hi >= rows_.size()) throw ContractViolation("candidate pair out of range");
  if (rows_[p.lo].contains(p.hi)) return false;
  rows_[p.lo].insert(p.hi);
  rows_[p.hi].insert(p.lo);
  ++size_;
  return true;
}

bool CandidateSet::erase(VertexPair p) {
  if (!contains(p)) return false;
  rows_[p.lo].erase(p.hi);
  rows_[p.hi].erase(p.lo);
  --size_;
  return true;
}

std::optional<VertexPair> CandidateSet::smallest() const {
  if (size_ == 0) return std::nullopt;
  for (Vertex u = 0; u < rows_.size(); ++u) {
    for (Vertex v : rows_[u]) {
      if (v > u) return VertexPair(u, v);
    }
  }
  return std::nullopt;
}

std::vector<VertexPair> CandidateSet::pairs() const {
  std::vector<VertexPair> out;
  out.reserve(size_);
  for (Vertex u = 0; u < rows_.size(); ++u) {
    for (Vertex v : rows_[u]) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

CandidateSet reduce_candidate_set(const CandidateSet& s, const VertexSet& k1, const VertexSet& k2,
                                  const Placement& placement) {
  const std::size_t n = s.universe();
  if (k1.universe() != n || k2.universe() != n) {
    throw ContractViolation("reduce_candidate_set: vertex set universe mismatch");
  }
  const VertexSet inside = k1 | k2;
  CandidateSet out = s;
  for (Vertex x : inside) {
    for (Vertex y : s.partners(x)) out.erase(VertexPair(x, y));
  }
  for (Vertex y = 0; y < n; ++y) {
    if (inside.contains(y)) continue;
    const VertexSet& partners = s.partners(y);
    if (k1.is_subset_of(partners)) {
      for (Vertex a : placement.a1) out.insert(VertexPair(a, y));
    }
    if (k2.is_subset_of(partners)) {
      for (Vertex b : placement.a2) out.insert(VertexPair(b, y));
    }
  }
  return out;
}

}  // namespace phpairs
