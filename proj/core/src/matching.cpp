#include "phpairs/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "phpairs/errors.hpp"

namespace phpairs {

BipartiteGraph::BipartiteGraph(std::size_t left, std::size_t right) : right_(right), adj_(left) {}

void BipartiteGraph::add_edge(std::size_t l, std::size_t r) {
  if (l >= adj_.size() || r >= right_) {
    throw ContractViolation("bipartite edge (" + std::to_string(l) + ", " + std::to_string(r) +
                            ") out of range");
  }
  auto& row = adj_[l];
  auto it = std::lower_bound(row.begin(), row.end(), r);
  if (it == row.end() || *it != r) row.insert(it, r);
}

std::size_t BipartiteGraph::edge_count() const noexcept {
  std::size_t total = 0;
  for (const auto& row : adj_) total += row.size();
  return total;
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteGraph& b)
      : b_(b),
        match_left_(b.left_size(), kNone),
        match_right_(b.right_size(), kNone),
        dist_(b.left_size()),
        cursor_(b.left_size()) {}

  void run() {
    while (layer()) {
      std::fill(cursor_.begin(), cursor_.end(), 0);
      for (std::size_t l = 0; l < b_.left_size(); ++l) {
        if (match_left_[l] == kNone) augment(l);
      }
    }
  }

  const std::vector<std::size_t>& match_left() const { return match_left_; }
  const std::vector<std::size_t>& match_right() const { return match_right_; }

 private:
  bool layer() {
    std::queue<std::size_t> queue;
    for (std::size_t l = 0; l < b_.left_size(); ++l) {
      if (match_left_[l] == kNone) {
        dist_[l] = 0;
        queue.push(l);
      } else {
        dist_[l] = kNone;
      }
    }
    bool reachable_free = false;
    while (!queue.empty()) {
      const std::size_t l = queue.front();
      queue.pop();
      for (std::size_t r : b_.neighbors(l)) {
        const std::size_t next = match_right_[r];
        if (next == kNone) {
          reachable_free = true;
        } else if (dist_[next] == kNone) {
          dist_[next] = dist_[l] + 1;
          queue.push(next);
        }
      }
    }
    return reachable_free;
  }

  bool augment(std::size_t l) {
    const auto& row = b_.neighbors(l);
    for (; cursor_[l] < row.size(); ++cursor_[l]) {
      const std::size_t r = row[cursor_[l]];
      const std::size_t next = match_right_[r];
      if (next == kNone || (dist_[next] == dist_[l] + 1 && augment(next))) {
        match_left_[l] = r;
        match_right_[r] = l;
        ++cursor_[l];
        return true;
      }
    }
    dist_[l] = kNone;
    return false;
  }

  const BipartiteGraph& b_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
  std::vector<std::size_t> dist_;
  std::vector<std::size_t> cursor_;
};

}  // namespace

std::vector<MatchedPair> max_matching(const BipartiteGraph& b) {
  HopcroftKarp hk(b);
  hk.run();
  std::vector<MatchedPair> out;
  for (std::size_t l = 0; l < b.left_size(); ++l) {
    if (hk.match_left()[l] != kNone) out.emplace_back(l, hk.match_left()[l]);
  }
  return out;
}

VertexSet max_clique_co_bipartite(const Graph& g, const VertexSet& k1, const VertexSet& k2) {
  if (k1.intersects(k2) || !is_clique(g, k1) || !is_clique(g, k2)) {
    throw ContractViolation("max_clique_co_bipartite: expects two disjoint cliques");
  }
  const std::vector<Vertex> left = k1.to_vector();
  const std::vector<Vertex> right = k2.to_vector();

  BipartiteGraph nonedges(left.size(), right.size());
  std::vector<std::vector<std::size_t>> reverse(right.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (!g.adjacent(left[i], right[j])) {
        nonedges.add_edge(i, j);
        reverse[j].push_back(i);
      }
    }
  }

  HopcroftKarp hk(nonedges);
  hk.run();
  const auto& match_left = hk.match_left();
  const auto& match_right = hk.match_right();
  std::size_t nu = 0;
  for (std::size_t m : match_left) nu += m != kNone ? 1 : 0;

  // Alternating reachability from unmatched right vertices: right -> left over
  // non-matching edges, left -> right over the matching edge.
  std::vector<bool> reach_left(left.size(), false);
  std::vector<bool> reach_right(right.size(), false);
  std::queue<std::size_t> queue;
  for (std::size_t j = 0; j < right.size(); ++j) {
    if (match_right[j] == kNone) {
      reach_right[j] = true;
      queue.push(j);
    }
  }
  while (!queue.empty()) {
    const std::size_t j = queue.front();
    queue.pop();
    for (std::size_t i : reverse[j]) {
      if (reach_left[i] || match_right[j] == i) continue;
      reach_left[i] = true;
      const std::size_t mate = match_left[i];
      if (mate != kNone && !reach_right[mate]) {
        reach_right[mate] = true;
        queue.push(mate);
      }
    }
  }

  VertexSet clique(g.order());
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (!reach_left[i]) clique.insert(left[i]);
  }
  for (std::size_t j = 0; j < right.size(); ++j) {
    if (reach_right[j]) clique.insert(right[j]);
  }
  if (clique.size() + nu != left.size() + right.size() || !is_clique(g, clique)) {
    throw InternalInvariantError("König construction did not yield a maximum clique");
  }
  return clique;
}

std::vector<MatchedPair> match_shared_colors(const BipartiteGraph& nonedges, std::size_t k) {
  auto matching = max_matching(nonedges);
  if (k > matching.size()) {
    throw InternalInvariantError("need " + std::to_string(k) + " disjoint non-edges, matching has " +
                                 std::to_string(matching.size()));
  }
  matching.resize(k);
  return matching;
}

}  // namespace phpairs
