#include <algorithm>
#include <random>

#include "gtest/gtest.h"
#include "phpairs/detection.hpp"
#include "phpairs/errors.hpp"
#include "phpairs/generate.hpp"
#include "phpairs/oracles.hpp"
#include "support/graph_zoo.hpp"

namespace phpairs {
namespace {

using testing::c4;
using testing::complete;
using testing::make_graph;
using testing::vs;

CliquePair cp(std::size_t n, std::initializer_list<Vertex> a, std::initializer_list<Vertex> b) {
  return {VertexSet(n, a), VertexSet(n, b)};
}

TEST(HomogeneousPairTest, Examples) {
  EXPECT_TRUE(is_homogeneous_pair(c4(), cp(4, {0, 1}, {2, 3})));
  EXPECT_TRUE(is_homogeneous_pair(testing::c4_plus_pendant_pair(), cp(5, {0, 1}, {2, 3})));
  Graph g = c4();
  Graph h(5);
  for (const auto& [u, v] : g.edges()) h.add_edge(u, v);
  h.add_edge(4, 0);
  EXPECT_FALSE(is_homogeneous_pair(h, cp(5, {0, 1}, {2, 3})));
}

TEST(HomogeneousPairTest, RejectsInvalidPairs) {
  EXPECT_THROW(is_homogeneous_pair(c4(), cp(4, {0, 3}, {1})), ContractViolation);
  EXPECT_THROW(is_homogeneous_pair(c4(), cp(4, {}, {1})), ContractViolation);
  EXPECT_THROW(is_homogeneous_pair(c4(), cp(4, {0, 1}, {1, 3})), ContractViolation);
}

TEST(ProperPairTest, Examples) {
  EXPECT_TRUE(is_proper_pair(c4(), cp(4, {0, 1}, {2, 3})));
  EXPECT_FALSE(is_proper_pair(complete(4), cp(4, {0, 1}, {2, 3})));
  const Graph two_edges = make_graph(4, {{0, 1}, {2, 3}});
  EXPECT_FALSE(is_proper_pair(two_edges, cp(4, {0, 1}, {2, 3})));
}

TEST(FindEmbeddingTest, SquareFromEitherSeed) {
  const auto e = find_ph_embedding(c4(), 0, 1);
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(e->pair.k1, vs(4, {0, 1}));
  EXPECT_EQ(e->pair.k2, vs(4, {2, 3}));
  EXPECT_EQ(e->seed, VertexPair(0, 1));

  const auto f = find_ph_embedding(c4(), 3, 2);
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->pair.k1, vs(4, {2, 3}));
  EXPECT_EQ(f->pair.k2, vs(4, {0, 1}));
}

TEST(FindEmbeddingTest, CompleteGraphAndOddHoleHaveNone) {
  const Graph k4 = complete(4);
  const Graph c5 = testing::cycle(5);
  for (const auto& [u, v] : k4.edges()) EXPECT_FALSE(find_ph_embedding(k4, u, v));
  for (const auto& [u, v] : c5.edges()) EXPECT_FALSE(find_ph_embedding(c5, u, v));
  EXPECT_TRUE(oracles::brute_force_ph_pairs(c5).empty());
}

TEST(FindEmbeddingTest, PreconditionFilters) {
  EXPECT_FALSE(find_ph_embedding(c4(), 0, 3));  // not adjacent
  EXPECT_FALSE(find_ph_embedding(c4(), 1, 1));
  EXPECT_FALSE(find_ph_embedding(testing::star(3), 0, 1));  // 0 universal to 1
  EXPECT_THROW(find_ph_embedding(c4(), 0, 9), ContractViolation);
}

TEST(FindEmbeddingTest, NestedSquaresIterate) {
  // K1 = {0,1,2}, K2 = {3,4,5} with a staircase cross pattern; the search has
  // to grow past the seed's first proper set.
  Graph g = make_graph(7, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5},
                           {0, 3}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {6, 0}, {6, 1}, {6, 2}});
  EXPECT_FALSE(find_ph_embedding(g, 0, 1));  // 1 is universal to 0
  EmbeddingStats stats;
  const auto e = find_ph_embedding(g, 0, 2, &stats);
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(e->pair.k1, vs(7, {0, 1, 2}));
  EXPECT_EQ(e->pair.k2, vs(7, {3, 4, 5}));
  EXPECT_GE(stats.iterations, 1u);
}

TEST(TrimTest, DropsVertexCompleteToOtherSide) {
  // c4 plus 4, adjacent to 0..3: K2 = {2,3,4} is a clique and 4 is complete to K1.
  const Graph g = make_graph(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
  const auto t = trim_nth_to_ph(g, cp(5, {0, 1}, {2, 3, 4}));
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(*t, cp(5, {0, 1}, {2, 3}));
}

TEST(TrimTest, PhPairUnchanged) {
  EXPECT_EQ(trim_nth_to_ph(c4(), cp(4, {0, 1}, {2, 3})), cp(4, {0, 1}, {2, 3}));
}

TEST(TrimTest, DropsAnticompleteVertex) {
  // c4 plus 4 adjacent to 2 and 3 only: {2,3,4} is a clique, 4 anticomplete to K1.
  const Graph g = make_graph(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {4, 2}, {4, 3}});
  EXPECT_EQ(trim_nth_to_ph(g, cp(5, {0, 1}, {2, 3, 4})), cp(5, {0, 1}, {2, 3}));
}

TEST(TrimTest, RejectsNonNth) {
  EXPECT_FALSE(trim_nth_to_ph(complete(4), cp(4, {0, 1}, {2, 3})));
  EXPECT_FALSE(trim_nth_to_ph(c4(), cp(4, {0, 3}, {1})));
}

TEST(SeedSetTest, IsEdgeSet) {
  EXPECT_EQ(ph_pairs_seed_set(c4()).size(), 4u);
  EXPECT_TRUE(ph_pairs_seed_set(Graph(5)).empty());
  EXPECT_EQ(ph_pairs_seed_set(complete(3)),
            (std::vector<VertexPair>{{0, 1}, {0, 2}, {1, 2}}));
}

// Soundness, completeness against brute force, and the structural facts every
// PH pair satisfies, on random graphs with and without planted pairs.
TEST(DetectionPropertyTest, MatchesOracleAndStructuralProperties) {
  std::mt19937_64 rng(314159);
  std::size_t embeddings = 0;
  for (int trial = 0; trial < 400; ++trial) {
    RandomGraphOptions options;
    options.n = 4 + rng() % 5;
    options.density = 0.2 + 0.1 * static_cast<double>(rng() % 7);
    options.seed = rng();
    options.plant_ph_pair = trial % 2 == 0;
    const Graph g = random_graph(options);
    const auto seeds = oracles::brute_force_ph_seed_pairs(g);

    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = 0; v < g.order(); ++v) {
        if (u == v) continue;
        const auto e = find_ph_embedding(g, u, v);
        const bool expected = std::binary_search(seeds.begin(), seeds.end(), VertexPair(u, v));
        ASSERT_EQ(e.has_value(), expected) << "seed " << u << "," << v;
        if (!e) continue;
        ++embeddings;
        EXPECT_TRUE(e->pair.k1.contains(u) && e->pair.k1.contains(v));
        EXPECT_TRUE(is_proper_pair(g, e->pair));
        EXPECT_TRUE(is_homogeneous_pair(g, e->pair));
        EXPECT_TRUE(pair_has_induced_c4(g, e->pair.k1, e->pair.k2));
        for (const VertexSet* side : {&e->pair.k1, &e->pair.k2}) {
          for (Vertex x : *side) {
            bool x_not_universal = false;
            bool other_not_universal = false;
            for (Vertex y : *side) {
              if (y == x) continue;
              x_not_universal = x_not_universal || !is_universal(g, x, y);
              other_not_universal = other_not_universal || !is_universal(g, y, x);
            }
            EXPECT_TRUE(x_not_universal && other_not_universal);
          }
        }
      }
    }
  }
  EXPECT_GT(embeddings, 200u);
}

TEST(DetectionPropertyTest, WorkIsQuadratic) {
  std::mt19937_64 rng(42);
  double worst = 0.0;
  for (int trial = 0; trial < 60; ++trial) {
    RandomGraphOptions options;
    options.n = 8 + rng() % 120;
    options.density = 0.1 + 0.1 * static_cast<double>(rng() % 9);
    options.seed = rng();
    options.plant_ph_pair = true;
    const Graph g = random_graph(options);
    for (const auto& [u, v] : g.edges()) {
      EmbeddingStats stats;
      find_ph_embedding(g, u, v, &stats);
      const double n = static_cast<double>(g.order());
      worst = std::max(worst, static_cast<double>(stats.word_ops) / (n * n));
      ASSERT_LE(stats.iterations, g.order());
    }
  }
  EXPECT_LE(worst, 8.0);
}

}  // namespace
}  // namespace phpairs
