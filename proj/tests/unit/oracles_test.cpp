#include <random>

#include "gtest/gtest.h"
#include "phpairs/errors.hpp"
#include "phpairs/generate.hpp"
#include "phpairs/oracles.hpp"
#include "support/corpus.hpp"
#include "support/graph_zoo.hpp"

namespace phpairs {
namespace {

using namespace phpairs::oracles;
using testing::c4;
using testing::vs;

TEST(OracleTest, PhPairsOfSmallGraphs) {
  // Both perfect matchings of the square split it into a PH pair.
  const auto pairs = brute_force_ph_pairs(c4());
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0].k1, vs(4, {0, 1}));
  EXPECT_EQ(pairs[0].k2, vs(4, {2, 3}));
  EXPECT_EQ(pairs[1].k1, vs(4, {0, 2}));
  EXPECT_EQ(pairs[1].k2, vs(4, {1, 3}));
  EXPECT_TRUE(brute_force_ph_pairs(testing::cycle(5)).empty());
  EXPECT_TRUE(brute_force_ph_pairs(testing::complete(4)).empty());
  EXPECT_TRUE(brute_force_ph_pairs(Graph(0)).empty());
  EXPECT_EQ(brute_force_ph_seed_pairs(c4()),
            (std::vector<VertexPair>{{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  // Vertex 4 sees 0 and 1 only, which breaks the {02|13} split.
  EXPECT_EQ(brute_force_ph_pairs(testing::c4_plus_pendant_pair()).size(), 1u);
}

TEST(OracleTest, C4FreePairs) {
  // Two disjoint edges joined by a single edge.
  const Graph g = testing::make_graph(4, {{0, 1}, {2, 3}, {1, 2}});
  const auto pairs = brute_force_c4free_homogeneous_pairs(g);
  bool found = false;
  for (const auto& p : pairs) {
    found = found || (p.k1 == vs(4, {0, 1}) && p.k2 == vs(4, {2, 3}));
  }
  EXPECT_TRUE(found);
  for (const auto& p : brute_force_c4free_homogeneous_pairs(c4())) {
    EXPECT_FALSE(p.k1 == vs(4, {0, 1}) && p.k2 == vs(4, {2, 3}));
  }
}

TEST(OracleTest, Invariants) {
  EXPECT_EQ(brute_force_chromatic(c4()), 2u);
  EXPECT_EQ(brute_force_clique(c4()), 2u);
  EXPECT_EQ(brute_force_chromatic(testing::cycle(5)), 3u);
  EXPECT_EQ(brute_force_clique(testing::cycle(5)), 2u);
  EXPECT_EQ(brute_force_chromatic(testing::complete(6)), 6u);
  EXPECT_EQ(brute_force_chromatic(Graph(3)), 1u);
  EXPECT_EQ(brute_force_chromatic(Graph(0)), 0u);
  EXPECT_EQ(brute_force_mwss(c4()).weight, 2);
  Graph w = testing::cycle(5);
  w.set_weights({1, 1, 7, 1, 7});
  EXPECT_EQ(brute_force_mwss(w).weight, 14);
}

TEST(OracleTest, Perfection) {
  EXPECT_TRUE(is_perfect_small(c4()));
  EXPECT_TRUE(is_perfect_small(testing::complete(5)));
  EXPECT_FALSE(is_perfect_small(testing::cycle(5)));
  EXPECT_FALSE(is_perfect_small(testing::cycle(7)));
  EXPECT_FALSE(is_perfect_small(testing::cycle(7).complement()));
  EXPECT_TRUE(is_perfect_small(testing::cycle(6)));
}

TEST(OracleTest, Caps) {
  EXPECT_THROW(brute_force_ph_pairs(Graph(13)), OracleCapExceeded);
  EXPECT_THROW(is_perfect_small(Graph(12)), OracleCapExceeded);
  OracleConfig wide;
  wide.max_vertices = 41;
  EXPECT_THROW(brute_force_clique(Graph(41), wide), OracleCapExceeded);
}

TEST(OraclePropertyTest, SelfConsistency) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    RandomGraphOptions options;
    options.n = 1 + rng() % 9;
    options.density = 0.1 * static_cast<double>(1 + rng() % 9);
    options.seed = rng();
    options.max_weight = 6;
    const Graph g = random_graph(options);
    EXPECT_EQ(is_perfect_small(g), is_perfect_small(g.complement()));
    const auto coloring = brute_force_coloring(g);
    EXPECT_TRUE(g.order() == 0 || brute_force_chromatic(g) >= brute_force_clique(g));
    for (const auto& [u, v] : g.edges()) EXPECT_NE(coloring[u], coloring[v]);
    const auto best = brute_force_mwss(g);
    EXPECT_TRUE(is_stable(g, VertexSet(g.order(), std::span<const Vertex>(best.vertices))));
    Graph unit = g;
    unit.clear_weights();
    EXPECT_EQ(static_cast<std::size_t>(brute_force_mwss(unit).weight),
              brute_force_clique(g.complement()));
    if (is_perfect_small(g)) {
      EXPECT_EQ(brute_force_chromatic(g), brute_force_clique(g));
    }
  }
}

TEST(CorpusTest, NonIsomorphicCounts) {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156, 1044};
  for (std::size_t n = 0; n < expected.size(); ++n) {
    EXPECT_EQ(testing::nonisomorphic_graphs(n).size(), expected[n]) << "n=" << n;
  }
}

}  // namespace
}  // namespace phpairs
