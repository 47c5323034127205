#include "phpairs/detection.hpp"

#include <string>
#include <utility>

#include "phpairs/errors.hpp"

namespace phpairs {

void CliquePair::validate(const Graph& g) const {
  if (k1.universe() != g.order() || k2.universe() != g.order()) {
    throw ContractViolation("clique pair over a different vertex universe");
  }
  if (k1.empty() || k2.empty()) throw ContractViolation("clique pair with an empty side");
  if (k1.intersects(k2)) throw ContractViolation("clique pair sides overlap");
  if (!is_clique(g, k1) || !is_clique(g, k2)) {
    throw ContractViolation("clique pair side is not a clique");
  }
}

CliquePair CliquePair::canonical() const {
  if (k2.first() < k1.first()) return {k2, k1};
  return *this;
}

bool is_homogeneous_pair(const Graph& g, const CliquePair& p) {
  p.validate(g);
  const VertexSet inside = p.k1 | p.k2;
  const std::size_t s1 = p.k1.size();
  const std::size_t s2 = p.k2.size();
  for (Vertex z = 0; z < g.order(); ++z) {
    if (inside.contains(z)) continue;
    const std::size_t h1 = g.neighbors(z).intersection_size(p.k1);
    const std::size_t h2 = g.neighbors(z).intersection_size(p.k2);
    if ((h1 != 0 && h1 != s1) || (h2 != 0 && h2 != s2)) return false;
  }
  return true;
}

bool is_proper_pair(const Graph& g, const CliquePair& p) {
  p.validate(g);
  for (Vertex x : p.k1) {
    if (!is_proper_to(g, x, p.k2)) return false;
  }
  for (Vertex x : p.k2) {
    if (!is_proper_to(g, x, p.k1)) return false;
  }
  return true;
}

namespace {

std::uint64_t word_count(std::size_t n) {
  return (n + VertexSet::kWordBits - 1) / VertexSet::kWordBits;
}

// One of the two interleaved, monotonically growing sets of the search, with
// hits[x] = |N(x) ∩ members| kept current.
struct Chain {
  explicit Chain(std::size_t n) : members(n), hits(n, 0) {}

  VertexSet members;
  std::vector<std::uint32_t> hits;
  std::size_t size = 0;
};

void grow(const Graph& g, Chain& chain, const VertexSet& added, std::uint64_t& ops) {
  const std::uint64_t words = word_count(g.order());
  for (Vertex d : added) {
    chain.members.insert(d);
    ++chain.size;
    for (Vertex x : g.neighbors(d)) {
      ++chain.hits[x];
      ++ops;
    }
    ops += words;
  }
}

VertexSet proper_of(const Chain& chain, std::size_t n, std::uint64_t& ops) {
  VertexSet out(n);
  for (Vertex x = 0; x < n; ++x) {
    const auto h = chain.hits[x];
    if (h > 0 && h < chain.size && !chain.members.contains(x)) out.insert(x);
  }
  ops += n;
  return out;
}

// `target` is a clique given that target \ added already is one.
bool extends_clique(const Graph& g, const VertexSet& target, const VertexSet& added,
                    std::uint64_t& ops) {
  const std::uint64_t words = word_count(g.order());
  const std::size_t need = target.size() - 1;
  for (Vertex d : added) {
    ops += words;
    if (g.neighbors(d).intersection_size(target) != need) return false;
  }
  return true;
}

}  // namespace

std::optional<PhEmbedding> find_ph_embedding(const Graph& g, Vertex u, Vertex v,
                                             EmbeddingStats* stats) {
  const std::size_t n = g.order();
  if (u >= n || v >= n) {
    throw ContractViolation("find_ph_embedding: seed vertex out of range");
  }
  if (u == v || !g.adjacent(u, v) || is_universal(g, u, v) || is_universal(g, v, u)) {
    return std::nullopt;
  }

  EmbeddingStats local;
  EmbeddingStats& st = stats != nullptr ? *stats : local;
  st.word_ops += 2 * word_count(n);

  Chain even(n);
  Chain odd(n);
  grow(g, even, VertexSet(n, {u, v}), st.word_ops);

  VertexSet next = proper_of(even, n, st.word_ops);
  if (next.empty()) {
    throw InternalInvariantError("mutually non-universal seed with no proper vertex");
  }
  if (!extends_clique(g, next, next, st.word_ops)) return std::nullopt;
  grow(g, odd, next, st.word_ops);

  Chain* prev = &even;
  Chain* cur = &odd;
  while (true) {
    if (++st.iterations > n) {
      throw InternalInvariantError("PH-embedding search exceeded its iteration cap");
    }
    VertexSet p = proper_of(*cur, n, st.word_ops);
    st.word_ops += word_count(n);
    if (!prev->members.is_subset_of(p)) {
      throw InternalInvariantError("PH-embedding search lost a vertex between iterations");
    }
    if (p.size() == prev->size) {
      return PhEmbedding{CliquePair{even.members, odd.members}, VertexPair(u, v)};
    }
    const VertexSet added = p - prev->members;
    if (!extends_clique(g, p, added, st.word_ops)) return std::nullopt;
    grow(g, *prev, added, st.word_ops);
    std::swap(prev, cur);
  }
}

std::optional<CliquePair> trim_nth_to_ph(const Graph& g, const CliquePair& p) {
  try {
    if (!is_homogeneous_pair(g, p) || !pair_has_induced_c4(g, p.k1, p.k2)) return std::nullopt;
  } catch (const ContractViolation&) {
    return std::nullopt;
  }

  CliquePair cur = p;
  while (true) {
    std::optional<Vertex> victim;
    for (Vertex x : cur.k1 | cur.k2) {
      const VertexSet& other = cur.k1.contains(x) ? cur.k2 : cur.k1;
      if (!is_proper_to(g, x, other)) {
        victim = x;
        break;
      }
    }
    if (!victim) return cur;
    cur.k1.erase(*victim);
    cur.k2.erase(*victim);
    if (cur.k1.empty() || cur.k2.empty()) return std::nullopt;
  }
}

std::vector<VertexPair> ph_pairs_seed_set(const Graph& g) {
  std::vector<VertexPair> out;
  out.reserve(g.edge_count());
  for (const auto& [a, b] : g.edges()) out.emplace_back(a, b);
  return out;
}

}  // namespace phpairs
