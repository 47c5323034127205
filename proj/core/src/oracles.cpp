#include "phpairs/oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <string>

#include "phpairs/errors.hpp"

namespace phpairs::oracles {
namespace {

using Mask = std::uint64_t;

constexpr std::size_t kHardCap = 40;

Mask bit(std::size_t v) { return Mask{1} << v; }

struct Masks {
  std::size_t n = 0;
  std::vector<Mask> adj;
};

Masks to_masks(const Graph& g, std::size_t cap, const char* what) {
  if (g.order() > cap || g.order() > kHardCap) {
    throw OracleCapExceeded(std::string(what) + ": graph has " + std::to_string(g.order()) +
                            " vertices, cap is " + std::to_string(std::min(cap, kHardCap)));
  }
  Masks m{g.order(), std::vector<Mask>(g.order(), 0)};
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (u != v && g.adjacent(u, v)) m.adj[u] |= bit(v);
    }
  }
  return m;
}

Masks complement_of(const Masks& m) {
  Masks c{m.n, std::vector<Mask>(m.n, 0)};
  const Mask all = m.n == 64 ? ~Mask{0} : bit(m.n) - 1;
  for (std::size_t v = 0; v < m.n; ++v) c.adj[v] = all & ~m.adj[v] & ~bit(v);
  return c;
}

template <typename Fn>
void for_each_bit(Mask mask, Fn&& fn) {
  while (mask != 0) {
    const auto v = static_cast<std::size_t>(std::countr_zero(mask));
    fn(v);
    mask &= mask - 1;
  }
}

// Every non-empty clique, as masks.
std::vector<Mask> all_cliques(const Masks& m) {
  std::vector<Mask> out;
  std::function<void(Mask, Mask)> extend = [&](Mask clique, Mask candidates) {
    for_each_bit(candidates, [&](std::size_t v) {
      const Mask grown = clique | bit(v);
      out.push_back(grown);
      const Mask above = ~(bit(v + 1) - 1);
      extend(grown, candidates & m.adj[v] & above);
    });
  };
  const Mask all = m.n == 64 ? ~Mask{0} : bit(m.n) - 1;
  extend(0, all);
  return out;
}

bool proper_to(const Masks& m, std::size_t v, Mask k) {
  const Mask hit = m.adj[v] & k;
  return hit != 0 && hit != k;
}

bool proper_pair(const Masks& m, Mask k1, Mask k2) {
  bool ok = true;
  for_each_bit(k1, [&](std::size_t x) { ok = ok && proper_to(m, x, k2); });
  for_each_bit(k2, [&](std::size_t x) { ok = ok && proper_to(m, x, k1); });
  return ok;
}

bool homogeneous(const Masks& m, Mask k1, Mask k2) {
  for (std::size_t z = 0; z < m.n; ++z) {
    if (((k1 | k2) & bit(z)) != 0) continue;
    const Mask h1 = m.adj[z] & k1;
    const Mask h2 = m.adj[z] & k2;
    if ((h1 != 0 && h1 != k1) || (h2 != 0 && h2 != k2)) return false;
  }
  return true;
}

// Literal scan for a, b in k1 and c, d in k2 with ac, bd edges, ad, bc non-edges.
bool cross_c4(const Masks& m, Mask k1, Mask k2) {
  bool found = false;
  for_each_bit(k1, [&](std::size_t a) {
    for_each_bit(k1 & ~bit(a), [&](std::size_t b) {
      const Mask c_options = k2 & m.adj[a] & ~m.adj[b];
      const Mask d_options = k2 & m.adj[b] & ~m.adj[a];
      if (c_options != 0 && d_options != 0) found = true;
    });
  });
  return found;
}

bool universal(const Masks& m, std::size_t v, std::size_t u) {
  if ((m.adj[u] & bit(v)) == 0) return false;
  return ((m.adj[u] & ~bit(v)) & ~m.adj[v]) == 0;
}

VertexSet to_set(std::size_t n, Mask mask) {
  VertexSet s(n);
  for_each_bit(mask, [&](std::size_t v) { s.insert(static_cast<Vertex>(v)); });
  return s;
}

std::size_t lowest(Mask mask) { return static_cast<std::size_t>(std::countr_zero(mask)); }

std::vector<std::pair<Mask, Mask>> ph_mask_pairs(const Masks& m) {
  const auto cliques = all_cliques(m);
  std::vector<std::pair<Mask, Mask>> out;
  for (Mask k1 : cliques) {
    Mask proper = 0;
    for (std::size_t x = 0; x < m.n; ++x) {
      if ((k1 & bit(x)) == 0 && proper_to(m, x, k1)) proper |= bit(x);
    }
    if (proper == 0) continue;
    for (Mask k2 : cliques) {
      if ((k2 & ~proper) != 0 || lowest(k2) < lowest(k1)) continue;
      if (proper_pair(m, k1, k2) && homogeneous(m, k1, k2)) out.emplace_back(k1, k2);
    }
  }
  return out;
}

std::vector<CliquePair> to_pairs(std::size_t n, std::vector<std::pair<Mask, Mask>> masks) {
  std::sort(masks.begin(), masks.end());
  std::vector<CliquePair> out;
  out.reserve(masks.size());
  for (const auto& [a, b] : masks) out.push_back(CliquePair{to_set(n, a), to_set(n, b)});
  return out;
}

}  // namespace

std::vector<CliquePair> brute_force_ph_pairs(const Graph& g, const OracleConfig& config) {
  const Masks m = to_masks(g, config.max_vertices, "brute_force_ph_pairs");
  return to_pairs(m.n, ph_mask_pairs(m));
}

std::vector<VertexPair> brute_force_ph_seed_pairs(const Graph& g, const OracleConfig& config) {
  const Masks m = to_masks(g, config.max_vertices, "brute_force_ph_seed_pairs");
  std::set<VertexPair> seeds;
  for (const auto& [k1, k2] : ph_mask_pairs(m)) {
    for (Mask side : {k1, k2}) {
      for_each_bit(side, [&](std::size_t u) {
        for_each_bit(side & ~(bit(u + 1) - 1), [&](std::size_t v) {
          if (!universal(m, u, v) && !universal(m, v, u)) {
            seeds.emplace(static_cast<Vertex>(u), static_cast<Vertex>(v));
          }
        });
      });
    }
  }
  return {seeds.begin(), seeds.end()};
}

std::vector<CliquePair> brute_force_c4free_homogeneous_pairs(const Graph& g,
                                                            const OracleConfig& config) {
  const Masks m = to_masks(g, config.max_vertices, "brute_force_c4free_homogeneous_pairs");
  const auto cliques = all_cliques(m);
  std::vector<std::pair<Mask, Mask>> out;
  for (Mask k1 : cliques) {
    for (Mask k2 : cliques) {
      if ((k1 & k2) != 0 || lowest(k2) < lowest(k1)) continue;
      bool complete = true;
      for_each_bit(k1, [&](std::size_t x) { complete = complete && (m.adj[x] & k2) == k2; });
      if (complete || cross_c4(m, k1, k2) || !homogeneous(m, k1, k2)) continue;
      out.emplace_back(k1, k2);
    }
  }
  return to_pairs(m.n, std::move(out));
}

std::size_t brute_force_clique(const Graph& g, const OracleConfig& config) {
  const Masks m = to_masks(g, config.max_vertices, "brute_force_clique");
  std::size_t best = 0;
  for (Mask c : all_cliques(m)) best = std::max<std::size_t>(best, std::popcount(c));
  return best;
}

std::vector<int> brute_force_coloring(const Graph& g, const OracleConfig& config) {
  const Masks m = to_masks(g, config.max_vertices, "brute_force_coloring");
  if (m.n == 0) return {};

  std::vector<std::size_t> order(m.n);
  for (std::size_t v = 0; v < m.n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::popcount(m.adj[a]) > std::popcount(m.adj[b]);
  });

  std::vector<int> color(m.n, -1);
  std::function<bool(std::size_t, int, int)> assign = [&](std::size_t idx, int k, int used) {
    if (idx == m.n) return true;
    const std::size_t v = order[idx];
    for (int c = 0; c < std::min(k, used + 1); ++c) {
      bool clash = false;
      for_each_bit(m.adj[v], [&](std::size_t w) { clash = clash || color[w] == c; });
      if (clash) continue;
      color[v] = c;
      if (assign(idx + 1, k, std::max(used, c + 1))) return true;
      color[v] = -1;
    }
    return false;
  };

  for (int k = 1;; ++k) {
    std::fill(color.begin(), color.end(), -1);
    if (assign(0, k, 0)) return color;
  }
}

std::size_t brute_force_chromatic(const Graph& g, const OracleConfig& config) {
  const auto coloring = brute_force_coloring(g, config);
  if (coloring.empty()) return 0;
  return static_cast<std::size_t>(*std::max_element(coloring.begin(), coloring.end())) + 1;
}

StableSet brute_force_mwss(const Graph& g, const OracleConfig& config) {
  const Masks m = to_masks(g, config.max_vertices, "brute_force_mwss");
  Mask best = 0;
  Weight best_weight = 0;
  std::function<void(Mask, Weight, Mask)> extend = [&](Mask set, Weight w, Mask candidates) {
    if (w > best_weight) {
      best = set;
      best_weight = w;
    }
    for_each_bit(candidates, [&](std::size_t v) {
      const Mask above = ~(bit(v + 1) - 1);
      extend(set | bit(v), w + g.weight(static_cast<Vertex>(v)), candidates & ~m.adj[v] & above);
    });
  };
  const Mask all = m.n == 64 ? ~Mask{0} : bit(m.n) - 1;
  extend(0, 0, all);

  StableSet out;
  for_each_bit(best, [&](std::size_t v) { out.vertices.push_back(static_cast<Vertex>(v)); });
  out.weight = best_weight;
  return out;
}

namespace {

// Induced cycle of odd length >= 5 through vertices >= its smallest member.
bool has_long_odd_hole(const Masks& m) {
  for (std::size_t s = 0; s < m.n; ++s) {
    const Mask above_s = ~(bit(s + 1) - 1);
    std::function<bool(std::size_t, Mask, std::size_t)> extend = [&](std::size_t last, Mask path,
                                                                      std::size_t length) {
      const Mask interior = path & ~bit(last) & ~bit(s);
      Mask next = m.adj[last] & above_s & ~path;
      while (next != 0) {
        const auto w = static_cast<std::size_t>(std::countr_zero(next));
        next &= next - 1;
        if ((m.adj[w] & interior) != 0) continue;
        const bool closes = last != s && (m.adj[w] & bit(s)) != 0;
        if (closes) {
          const std::size_t cycle = length + 1;
          if (cycle >= 5 && cycle % 2 == 1) return true;
          continue;
        }
        if (extend(w, path | bit(w), length + 1)) return true;
      }
      return false;
    };
    if (extend(s, bit(s), 1)) return true;
  }
  return false;
}

}  // namespace

bool is_perfect_small(const Graph& g, const OracleConfig& config) {
  const Masks m = to_masks(g, config.max_vertices_perfect, "is_perfect_small");
  return !has_long_odd_hole(m) && !has_long_odd_hole(complement_of(m));
}

}  // namespace phpairs::oracles
