#include <gtest/gtest.h>

#include "test_support.hpp"

namespace mwis {
namespace {

using namespace testing;

TEST(OracleTest, SmallInstances) {
  const OracleResult path = brute_force_mwis(p3a());
  EXPECT_EQ(path.weight, 4);
  EXPECT_EQ(path.solution, ids({0, 2}));

  const DynGraph c5 = make_graph({1, 1, 1, 1, 1}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  const OracleResult cyc = brute_force_mwis(c5);
  EXPECT_EQ(cyc.weight, 2);
  EXPECT_EQ(cyc.solution, ids({0, 2}));

  const OracleResult single = brute_force_mwis(make_graph({7}, {}));
  EXPECT_EQ(single.weight, 7);
  EXPECT_EQ(single.solution, ids({0}));

  // C4a has two optima; the lexicographically smaller one is {a, c}.
  EXPECT_EQ(brute_force_mwis(c4a()).solution, ids({c4::a, c4::c}));
}

TEST(OracleTest, SizeLimit) {
  try {
    (void)brute_force_mwis(DynGraph(std::vector<Weight>(31, 1)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeLimit);
  }
  EXPECT_EQ(brute_force_mwis(DynGraph(std::vector<Weight>(30, 1))).weight, 30);
}

TEST(OracleTest, BranchAndBoundMatchesExhaustive) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const DynGraph g = random_gnp(1 + seed % 26, 0.05 + 0.1 * static_cast<double>(seed % 7), seed, 1, 30);
    const OracleResult got = detail::BitsetSearch(g).run();
    EXPECT_EQ(got.weight, brute_force_mwis(g).weight) << "seed " << seed;
    EXPECT_TRUE(verify_lift(g, got.solution, got.weight));
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DynGraph g = random_gnp(70 + seed, 0.3, seed);
    const OracleResult got = exact_mwis(g);
    EXPECT_EQ(got.weight, solve(g).weight) << "seed " << seed;
    EXPECT_TRUE(verify_lift(g, got.solution, got.weight));
  }
}

// Oracle agrees with a plain subset scan.
TEST(OracleTest, MatchesSubsetScan) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const DynGraph g = random_gnp(1 + seed % 12, 0.3, seed, 1, 9);
    const auto verts = g.active_vertices();
    Weight best = 0;
    std::vector<VertexId> witness;
    for (std::uint32_t mask = 0; mask < (1u << verts.size()); ++mask) {
      std::vector<VertexId> set;
      for (std::size_t i = 0; i < verts.size(); ++i) {
        if (mask >> i & 1u) set.push_back(verts[i]);
      }
      if (!is_independent(g, set)) continue;
      const Weight w = weight_of(g, set);
      if (w > best || (w == best && set < witness)) {
        best = w;
        witness = set;
      }
    }
    const OracleResult r = brute_force_mwis(g);
    EXPECT_EQ(r.weight, best);
    EXPECT_EQ(r.solution, witness) << "seed " << seed;
  }
}

TEST(BoundsTest, UpperBound) {
  EXPECT_EQ(upper_bound(k3u()), 4);
  EXPECT_EQ(upper_bound(c4a()), 5);
  EXPECT_EQ(upper_bound(make_graph({3, 4, 5}, {})), 12);
}

TEST(BoundsTest, LocalSearch) {
  EXPECT_EQ(local_search(c4a()).weight, 4);
  EXPECT_EQ(local_search(k3u()).solution, ids({0}));
  const auto edgeless = local_search(make_graph({3, 4, 5}, {}));
  EXPECT_EQ(edgeless.solution, ids({0, 1, 2}));
  EXPECT_EQ(edgeless.weight, 12);
  EXPECT_EQ(local_search(DynGraph{}).weight, 0);
}

TEST(BoundsTest, Sandwich) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const DynGraph g = random_gnp(4 + seed % 17, 0.1 + 0.1 * static_cast<double>(seed % 5), seed);
    const Weight opt = alpha(g);
    const auto ls = local_search(g, 20, seed);
    EXPECT_TRUE(is_independent(g, ls.solution));
    EXPECT_EQ(weight_of(g, ls.solution), ls.weight);
    EXPECT_LE(ls.weight, opt);
    EXPECT_GE(upper_bound(g), opt);
  }
}

TEST(ComponentsTest, Split) {
  const DynGraph two = make_graph({1, 2, 3, 4}, {{0, 1}, {2, 3}});
  const auto parts = components(two);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].to_parent, ids({0, 1}));
  EXPECT_EQ(parts[1].to_parent, ids({2, 3}));
  EXPECT_EQ(parts[1].graph.weight(1), 4);
  EXPECT_TRUE(parts[1].graph.is_adjacent(0, 1));

  EXPECT_EQ(components(c4a()).size(), 1u);
  EXPECT_TRUE(components(DynGraph{}).empty());
}

TEST(BranchTest, BranchingVertex) {
  EXPECT_EQ(branching_vertex(c4a()), c4::c);
  EXPECT_EQ(branching_vertex(s3()), 0u);

  const auto [include, exclude] = branch(make_graph({6}, {}));
  EXPECT_TRUE(include.graph.empty());
  EXPECT_EQ(include.offset(), 6);
  EXPECT_TRUE(exclude.graph.empty());
  EXPECT_EQ(exclude.offset(), 0);
}

TEST(BranchTest, CasesOnCycle) {
  const auto [include, exclude] = branch(c4a());
  EXPECT_EQ(include.graph.active_vertices(), ids({c4::a}));
  EXPECT_EQ(include.offset(), 3);
  EXPECT_EQ(exclude.graph.active_vertices(), ids({c4::a, c4::b, c4::d}));
}

TEST(SolveTest, NamedInstances) {
  const SolveResult path = solve(p3a());
  EXPECT_EQ(path.weight, 4);
  EXPECT_EQ(path.solution, ids({0, 2}));
  EXPECT_EQ(path.status, SolveStatus::Optimal);

  const SolveResult cycle = solve(c4a());
  EXPECT_EQ(cycle.weight, 4);
  EXPECT_TRUE(verify_lift(c4a(), cycle.solution, 4));

  const SolveResult empty = solve(DynGraph{});
  EXPECT_EQ(empty.weight, 0);
  EXPECT_TRUE(empty.solution.empty());
}

TEST(SolveTest, ExactOnRandomGraphs) {
  const double probabilities[] = {0.1, 0.2, 0.3, 0.5};
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const DynGraph g = random_gnp(4 + seed % 17, probabilities[seed % 4], seed);
    const Weight opt = alpha(g);
    for (Preset p : {Preset::NonIncreasing, Preset::CyclicFast, Preset::CyclicStrong}) {
      SolverConfig cfg;
      cfg.preset = p;
      cfg.check_bounds = true;
      const SolveResult r = solve(g, cfg);
      ASSERT_EQ(r.weight, opt) << to_string(p) << " seed " << seed;
      EXPECT_TRUE(verify_lift(g, r.solution, opt));
    }
  }
}

// Branching on denser graphs that the reductions leave mostly intact.
TEST(SolveTest, ExactWhenBranchingIsNeeded) {
  std::size_t branched = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const DynGraph g = random_gnp(26 + seed % 5, 0.3, 500 + seed, 1, 3);
    SolverConfig cfg;
    cfg.local_search_budget = 0;
    const SolveResult r = solve(g, cfg);
    EXPECT_EQ(r.weight, alpha(g)) << "seed " << seed;
    branched += r.stats.branches;
  }
  EXPECT_GT(branched, 0u);
}

TEST(SolveTest, ComponentAdditivity) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const DynGraph a = random_gnp(12, 0.3, seed);
    const DynGraph b = random_gnp(10, 0.4, seed + 1000);
    std::vector<Weight> weights;
    std::vector<std::vector<VertexId>> lists;
    for (const DynGraph* part : {&a, &b}) {
      const VertexId base = weights.size();
      for (VertexId v : part->active_vertices()) {
        weights.push_back(part->weight(v));
        auto& list = lists.emplace_back();
        for (VertexId u : part->neighbors(v)) list.push_back(base + u);
      }
    }
    const DynGraph joined = DynGraph::from_adjacency(weights, lists);
    EXPECT_EQ(solve(joined).weight, solve(a).weight + solve(b).weight);
  }
}

TEST(SolveTest, TimeLimitReturnsIndependentSet) {
  const DynGraph g = random_gnp(300, 0.05, 1);
  SolverConfig cfg;
  cfg.time_limit_s = 1e-6;
  const SolveResult r = solve(g, cfg);
  EXPECT_EQ(r.status, SolveStatus::TimeLimit);
  EXPECT_TRUE(is_independent(g, r.solution));
  EXPECT_EQ(weight_of(g, r.solution), r.weight);
  EXPECT_GT(r.weight, 0);
}

TEST(SolveTest, Deterministic) {
  const DynGraph g = random_gnp(60, 0.08, 5);
  const SolveResult a = solve(g);
  const SolveResult b = solve(g);
  EXPECT_EQ(a.solution, b.solution);
  EXPECT_EQ(a.stats.branches, b.stats.branches);
}

}  // namespace
}  // namespace mwis
