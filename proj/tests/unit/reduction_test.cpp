#include <algorithm>
#include <random>

#include "gtest/gtest.h"
#include "phpairs/detection.hpp"
#include "phpairs/elimination.hpp"
#include "phpairs/errors.hpp"
#include "phpairs/generate.hpp"
#include "phpairs/oracles.hpp"
#include "phpairs/reduction.hpp"
#include "phpairs/strategies.hpp"
#include "support/graph_zoo.hpp"

namespace phpairs {
namespace {

using testing::c4;
using testing::c4_plus_pendant_pair;
using testing::make_graph;
using testing::vs;

TEST(GadgetTest, Validation) {
  EXPECT_NO_THROW(NonProper2Clique::from_row_strings({"10", "11"}));
  EXPECT_NO_THROW(NonProper2Clique::from_row_strings({"00", "00"}));
  EXPECT_THROW(NonProper2Clique::from_row_strings({"11", "11"}), ContractViolation);
  // The square's own cross pattern contains a C4.
  EXPECT_THROW(NonProper2Clique::from_row_strings({"10", "01"}), ContractViolation);
  EXPECT_THROW(NonProper2Clique::from_row_strings({"10", "1"}), ContractViolation);
  EXPECT_THROW(NonProper2Clique::from_row_strings({}), ContractViolation);
  EXPECT_THROW(NonProper2Clique::from_row_strings({"1x"}), ContractViolation);
  const auto h = NonProper2Clique::from_row_strings({"110", "111", "000"});
  EXPECT_EQ(h.row_strings(), (std::vector<std::string>{"110", "111", "000"}));
  EXPECT_TRUE(h.cross(1, 2));
  EXPECT_FALSE(h.cross(2, 0));
}

TEST(PhReduceTest, PendantPairCollapses) {
  const auto r = ph_reduce(c4_plus_pendant_pair(), vs(5, {0, 1}), vs(5, {2, 3}),
                           NonProper2Clique::collapsed());
  EXPECT_EQ(r.placement.a1, std::vector<Vertex>{0});
  EXPECT_EQ(r.placement.a2, std::vector<Vertex>{2});
  EXPECT_EQ(r.live, vs(5, {0, 2, 4}));
  EXPECT_EQ(r.graph.edges(), (std::vector<Edge>{{0, 4}}));
}

TEST(PhReduceTest, SquareCollapsesToTwoIsolatedVertices) {
  const auto r = ph_reduce(c4(), vs(4, {0, 1}), vs(4, {2, 3}), NonProper2Clique::collapsed());
  EXPECT_EQ(r.live.size(), 2u);
  EXPECT_EQ(r.graph.edge_count(), 0u);
}

TEST(PhReduceTest, RejectsBadInput) {
  const auto h = NonProper2Clique::collapsed();
  EXPECT_THROW(ph_reduce(testing::complete(4), vs(4, {0, 1}), vs(4, {2, 3}), h), ContractViolation);
  const auto big = NonProper2Clique::from_row_strings({"100", "110", "111"});
  EXPECT_THROW(ph_reduce(c4(), vs(4, {0, 1}), vs(4, {2, 3}), big), ContractViolation);
}

TEST(CandidateSetTest, Basics) {
  CandidateSet s = CandidateSet::from_edges(c4());
  EXPECT_EQ(s.size(), 4u);
  EXPECT_EQ(s.smallest(), VertexPair(0, 1));
  EXPECT_TRUE(s.erase({1, 0}));
  EXPECT_FALSE(s.erase({1, 0}));
  EXPECT_EQ(s.smallest(), VertexPair(0, 2));
  EXPECT_TRUE(s.insert({3, 0}));
  EXPECT_TRUE(s.contains({0, 3}));
  EXPECT_EQ(s.size(), 4u);
  EXPECT_THROW(s.insert({0, 7}), ContractViolation);
}

TEST(CandidateSetTest, ReduceExamples) {
  {
    const CandidateSet s = CandidateSet::from_edges(c4());
    const auto r = ph_reduce(c4(), vs(4, {0, 1}), vs(4, {2, 3}), NonProper2Clique::collapsed());
    EXPECT_TRUE(reduce_candidate_set(s, vs(4, {0, 1}), vs(4, {2, 3}), r.placement).empty());
  }
  {
    const Graph g = c4_plus_pendant_pair();
    const CandidateSet s = CandidateSet::from_edges(g);
    const auto r = ph_reduce(g, vs(5, {0, 1}), vs(5, {2, 3}), NonProper2Clique::collapsed());
    const auto next = reduce_candidate_set(s, vs(5, {0, 1}), vs(5, {2, 3}), r.placement);
    EXPECT_EQ(next.pairs(), (std::vector<VertexPair>{{0, 4}}));
  }
  {
    // Pairs away from the reduced cliques survive verbatim.
    Graph g(7);
    for (const auto& [u, v] : c4().edges()) g.add_edge(u, v);
    g.add_edge(4, 5);
    g.add_edge(5, 6);
    CandidateSet s(7);
    s.insert({4, 5});
    s.insert({5, 6});
    s.insert({0, 1});
    const auto r = ph_reduce(g, vs(7, {0, 1}), vs(7, {2, 3}), NonProper2Clique::collapsed());
    const auto next = reduce_candidate_set(s, vs(7, {0, 1}), vs(7, {2, 3}), r.placement);
    EXPECT_EQ(next.pairs(), (std::vector<VertexPair>{{4, 5}, {5, 6}}));
  }
}

TEST(StrategyTest, MaxCliqueOnSquare) {
  const Gadget g = strategy_max_clique(c4(), vs(4, {0, 1}), vs(4, {2, 3}));
  EXPECT_EQ(g.data, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(g.h.row_strings(), (std::vector<std::string>{"00", "00"}));
}

TEST(StrategyTest, MaxCliqueKeepsOneCompleteBlock) {
  // Staircase pair: rows {3}, {3,4}, {4,5}.
  const Graph g = make_graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5},
                                 {0, 3}, {1, 3}, {1, 4}, {2, 4}, {2, 5}});
  const Gadget gadget = strategy_max_clique(g, vs(6, {0, 1, 2}), vs(6, {3, 4, 5}));
  const VertexSet x(6, std::span<const Vertex>(gadget.data));
  EXPECT_TRUE(is_clique(g, x));
  EXPECT_EQ(x.size(), oracles::brute_force_clique(g));
  for (Vertex i = 0; i < 3; ++i) {
    for (Vertex j = 0; j < 3; ++j) {
      EXPECT_EQ(gadget.h.cross(i, j), x.contains(i) && x.contains(3 + j));
    }
  }
}

TEST(StrategyTest, StableSetUnitWeights) {
  const Gadget g = strategy_stable_set(c4(), vs(4, {0, 1}), vs(4, {2, 3}));
  EXPECT_EQ(g.data, (std::vector<Vertex>{0, 3}));
  EXPECT_EQ(g.h.row_strings(), (std::vector<std::string>{"10", "11"}));
  const auto r = ph_reduce(c4(), vs(4, {0, 1}), vs(4, {2, 3}), g.h);
  Graph expected = testing::complete(4);
  expected.remove_edge(0, 3);
  EXPECT_EQ(r.graph, expected);
}

TEST(StrategyTest, StableSetPrefersHeavyPair) {
  Graph g = c4();
  g.set_weights({1, 5, 5, 1});
  const Gadget gadget = strategy_stable_set(g, vs(4, {0, 1}), vs(4, {2, 3}));
  EXPECT_EQ(gadget.data, (std::vector<Vertex>{1, 2}));
}

TEST(StrategyTest, CollapseAndFactory) {
  const Gadget g = strategy_collapse(c4(), vs(4, {0, 1}), vs(4, {2, 3}));
  EXPECT_EQ(g.h.a1_size(), 1u);
  EXPECT_EQ(g.h.a2_size(), 1u);
  EXPECT_FALSE(g.h.cross(0, 0));
  EXPECT_EQ(make_strategy("max-clique")->name(), "max-clique");
  EXPECT_EQ(make_strategy("stable-set")->name(), "stable-set");
  EXPECT_EQ(make_strategy("collapse")->name(), "collapse");
  EXPECT_THROW(make_strategy("greedy"), ContractViolation);
}

TEST(EliminateTest, SquareMaxClique) {
  const auto trace = eliminate_all(c4(), MaxCliqueStrategy{});
  EXPECT_EQ(trace.q(), 1u);
  EXPECT_EQ(trace.reduced.edges(), (std::vector<Edge>{{0, 1}, {2, 3}}));
  EXPECT_EQ(trace.steps[0].k1, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(trace.steps[0].k2, (std::vector<Vertex>{2, 3}));
  EXPECT_EQ(trace.steps[0].strategy_data, (std::vector<Vertex>{0, 1}));
}

TEST(EliminateTest, NothingToDo) {
  const Graph c5 = testing::cycle(5);
  for (const char* name : {"max-clique", "stable-set", "collapse"}) {
    const auto s = make_strategy(name);
    const auto t1 = eliminate_all(c5, *s);
    EXPECT_EQ(t1.q(), 0u);
    EXPECT_EQ(t1.reduced, c5);
    const auto t2 = eliminate_all(Graph(6), *s);
    EXPECT_EQ(t2.q(), 0u);
    EXPECT_EQ(t2.reduced, Graph(6));
  }
}

TEST(EliminateTest, CollapseCompactsIds) {
  const auto trace = eliminate_all(c4_plus_pendant_pair(), CollapseStrategy{});
  EXPECT_EQ(trace.q(), 1u);
  EXPECT_EQ(trace.reduced.order(), 3u);
  EXPECT_EQ(trace.reduced_labels, (std::vector<Vertex>{0, 2, 4}));
  EXPECT_EQ(trace.reduced.edges(), (std::vector<Edge>{{0, 2}}));
  EXPECT_NO_THROW(replay_trace(trace));
}

// Post-conditions of every reduction and of the loop as a whole, checked
// against brute force on small random graphs for all three strategies.
TEST(EliminatePropertyTest, StepInvariants) {
  std::mt19937_64 rng(2718);
  std::size_t steps_seen = 0;
  for (const std::string name : {"max-clique", "stable-set", "collapse"}) {
    const auto strategy = make_strategy(name);
    for (int trial = 0; trial < 120; ++trial) {
      RandomGraphOptions options;
      options.n = 4 + rng() % 5;
      options.density = 0.2 + 0.1 * static_cast<double>(rng() % 7);
      options.seed = rng();
      options.plant_ph_pair = trial % 3 != 0;
      options.max_weight = 10;
      const Graph g = random_graph(options);

      std::size_t last_size = g.edge_count() + 1;
      std::size_t anticomplete_steps = 0;
      EliminationHooks hooks;
      hooks.on_iteration = [&](const IterationEvent& e) {
        EXPECT_LT(e.candidates_after, e.candidates_before);
        EXPECT_LT(e.candidates_before, last_size);
        last_size = e.candidates_after + 1;
      };
      hooks.on_step = [&](const StepEvent& e) {
        ++steps_seen;
        const auto& p = e.step.placement;
        const VertexSet a1(g.order(), std::span<const Vertex>(p.a1));
        const VertexSet a2(g.order(), std::span<const Vertex>(p.a2));
        const CliquePair gadget_pair{a1, a2};
        EXPECT_TRUE(is_homogeneous_pair(e.after, gadget_pair));
        EXPECT_FALSE(pair_has_induced_c4(e.after, a1, a2));
        EXPECT_FALSE(is_proper_pair(e.after, gadget_pair));
        for (const auto& side : {p.a1, p.a2}) {
          for (Vertex x : side) {
            for (Vertex y : side) {
              if (x < y) {
                EXPECT_TRUE(is_universal(e.after, x, y) || is_universal(e.after, y, x));
              }
            }
          }
        }
        EXPECT_LE(e.live_after.size(), e.live_before.size());

        // See AnticompleteGadgetCanCreatePhPair for why the cover check needs a cross edge.
        bool cross_edge = false;
        for (const auto& row : e.step.gadget.rows()) cross_edge = cross_edge || !row.empty();
        anticomplete_steps += cross_edge ? 0 : 1;
        if (!cross_edge) return;
        const auto compact = induced_subgraph(e.after, e.live_after);
        for (const auto& seed : oracles::brute_force_ph_seed_pairs(compact.graph)) {
          EXPECT_TRUE(e.candidates_after.contains(
              VertexPair(compact.labels[seed.lo], compact.labels[seed.hi])));
        }
      };
      const auto trace = eliminate_all(g, *strategy, &hooks);
      EXPECT_LE(trace.q(), g.edge_count());
      if (anticomplete_steps == 0) {
        EXPECT_TRUE(oracles::brute_force_ph_pairs(trace.reduced).empty());
      }
      EXPECT_NO_THROW(replay_trace(trace));
    }
  }
  EXPECT_GT(steps_seen, 100u);
}

// A gadget with A1 anticomplete to A2 can create a PH pair whose seeds lie
// outside A1 ∪ A2 and had no embedding before the reduction. Here the only PH
// pair is {3,6}|{4,5}; dropping its cross edges makes 4 and 5 anticomplete to
// the clique {2,3,6,7}, which then pairs with {0,1}.
TEST(PhReduceTest, AnticompleteGadgetCanCreatePhPair) {
  const Graph g = make_graph(8, {{0, 1}, {0, 2}, {1, 3}, {1, 6}, {1, 7}, {2, 3}, {2, 6},
                                 {2, 7}, {3, 4}, {3, 6}, {3, 7}, {4, 5}, {5, 6}, {6, 7}});
  const auto before = oracles::brute_force_ph_pairs(g);
  ASSERT_EQ(before.size(), 1u);
  EXPECT_EQ(before[0].k1, vs(8, {3, 6}));
  EXPECT_TRUE(oracles::brute_force_ph_seed_pairs(g) ==
              (std::vector<VertexPair>{{3, 6}, {4, 5}}));

  const auto r = ph_reduce(g, vs(8, {3, 6}), vs(8, {4, 5}),
                           NonProper2Clique::from_row_strings({"00", "00"}));
  EXPECT_EQ(r.graph, make_graph(8, {{0, 1}, {0, 2}, {1, 3}, {1, 6}, {1, 7}, {2, 3}, {2, 6},
                                    {2, 7}, {3, 6}, {3, 7}, {4, 5}, {6, 7}}));
  const auto after = oracles::brute_force_ph_pairs(r.graph);
  ASSERT_EQ(after.size(), 2u);
  EXPECT_EQ(after[0].k1, vs(8, {0, 1}));
  EXPECT_EQ(after[0].k2, vs(8, {2, 3, 6, 7}));
  EXPECT_FALSE(find_ph_embedding(g, 0, 1).has_value());
  EXPECT_TRUE(find_ph_embedding(r.graph, 0, 1).has_value());
}

TEST(ReplayTest, DetectsTampering) {
  auto trace = eliminate_all(c4(), MaxCliqueStrategy{});
  auto bad_pair = trace;
  bad_pair.steps[0].k2 = {2};
  EXPECT_THROW(replay_trace(bad_pair), ContractViolation);
  auto bad_result = trace;
  bad_result.reduced.add_edge(0, 3);
  EXPECT_THROW(replay_trace(bad_result), ContractViolation);
  auto bad_placement = trace;
  bad_placement.steps[0].placement.a1 = {1, 0};
  EXPECT_THROW(replay_trace(bad_placement), ContractViolation);
}

}  // namespace
}  // namespace phpairs
