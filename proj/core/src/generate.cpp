#include "phpairs/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "phpairs/errors.hpp"

namespace phpairs {
namespace {

bool proper_cross(const std::vector<std::vector<bool>>& cross) {
  const std::size_t rows = cross.size();
  const std::size_t cols = cross.front().size();
  for (std::size_t i = 0; i < rows; ++i) {
    const auto hits = static_cast<std::size_t>(std::count(cross[i].begin(), cross[i].end(), true));
    if (hits == 0 || hits == cols) return false;
  }
  for (std::size_t j = 0; j < cols; ++j) {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < rows; ++i) hits += cross[i][j] ? 1 : 0;
    if (hits == 0 || hits == rows) return false;
  }
  return true;
}

}  // namespace

Graph random_graph(const RandomGraphOptions& options) {
  if (options.density < 0.0 || options.density > 1.0) {
    throw ContractViolation("density must lie in [0, 1]");
  }
  const std::size_t n = options.n;
  std::mt19937_64 rng(options.seed);
  std::bernoulli_distribution coin(options.density);
  Graph g(n);

  std::vector<int> side(n, 0);  // 1 = K1, 2 = K2
  if (options.plant_ph_pair && n >= 4) {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    const std::size_t max_side = std::max<std::size_t>(2, n / 3);
    std::uniform_int_distribution<std::size_t> pick_size(2, max_side);
    const std::size_t s1 = pick_size(rng);
    const std::size_t s2 = std::min(pick_size(rng), n - s1);
    std::vector<Vertex> k1(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(s1));
    std::vector<Vertex> k2(perm.begin() + static_cast<std::ptrdiff_t>(s1),
                           perm.begin() + static_cast<std::ptrdiff_t>(s1 + s2));
    for (Vertex v : k1) side[v] = 1;
    for (Vertex v : k2) side[v] = 2;

    for (auto* clique : {&k1, &k2}) {
      for (std::size_t i = 0; i < clique->size(); ++i) {
        for (std::size_t j = i + 1; j < clique->size(); ++j) g.add_edge((*clique)[i], (*clique)[j]);
      }
    }

    std::vector<std::vector<bool>> cross(s1, std::vector<bool>(s2, false));
    std::bernoulli_distribution half(0.5);
    bool ok = false;
    for (int attempt = 0; attempt < 64 && !ok; ++attempt) {
      for (auto& row : cross) {
        for (std::size_t j = 0; j < s2; ++j) row[j] = half(rng);
      }
      ok = proper_cross(cross);
    }
    if (!ok) {
      for (std::size_t i = 0; i < s1; ++i) {
        for (std::size_t j = 0; j < s2; ++j) cross[i][j] = (i + j) % 2 == 0;
      }
    }
    for (std::size_t i = 0; i < s1; ++i) {
      for (std::size_t j = 0; j < s2; ++j) {
        if (cross[i][j]) g.add_edge(k1[i], k2[j]);
      }
    }

    for (Vertex x = 0; x < n; ++x) {
      if (side[x] != 0) continue;
      if (coin(rng)) {
        for (Vertex v : k1) g.add_edge(x, v);
      }
      if (coin(rng)) {
        for (Vertex v : k2) g.add_edge(x, v);
      }
    }
  }

  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (side[u] != 0 || side[v] != 0) continue;
      if (coin(rng)) g.add_edge(u, v);
    }
  }

  if (options.max_weight > 0) {
    std::uniform_int_distribution<Weight> pick_weight(1, options.max_weight);
    std::vector<Weight> w(n);
    for (auto& x : w) x = pick_weight(rng);
    g.set_weights(std::move(w));
  }
  return g;
}

}  // namespace phpairs
