#include <gtest/gtest.h>

#include <functional>

#include "test_support.hpp"

namespace mwis {
namespace {

using namespace testing;

using RuleFn = std::function<bool(DynGraph&, TransformLog&, VertexId)>;

struct NamedRule {
  const char* name;
  RuleFn fn;
};

std::vector<NamedRule> simple_rules() {
  return {
      {"neighborhood_removal", neighborhood_removal},
      {"degree_two_fold", degree_two_fold},
      {"clique_reduction", clique_reduction},
      {"domination", domination},
      {"twin", twin_merge},
      {"clique_neighborhood_removal", clique_neighborhood_removal},
  };
}

TEST(ReduceTest, NamedInstancesReduceToEmpty) {
  struct Case {
    DynGraph g;
    Weight offset;
  };
  for (auto& [g, offset] : std::vector<Case>{{s3(), 5}, {p3a(), 4}, {k3u(), 4}}) {
    const KernelResult k = reduce(g);
    EXPECT_TRUE(k.kernel.empty());
    EXPECT_EQ(k.offset(), offset);
    EXPECT_TRUE(verify_lift(g, lift(k.log, std::vector<VertexId>{}), offset));
  }
}

TEST(ReduceTest, CliqueReductionHandlesTriangle) {
  DynGraph g = k3u();
  TransformLog log;
  EXPECT_FALSE(clique_reduction(g, log, 2));
  EXPECT_TRUE(clique_reduction(g, log, 0));
  EXPECT_EQ(log.offset(), 4);
  EXPECT_TRUE(g.empty());

  DynGraph edge = make_graph({3, 2}, {{0, 1}});
  TransformLog log2;
  EXPECT_TRUE(clique_reduction(edge, log2, 0));
}

TEST(ReduceTest, NeighborhoodRemoval) {
  DynGraph star = s3();
  TransformLog log;
  EXPECT_TRUE(neighborhood_removal(star, log, 0));
  EXPECT_EQ(log.offset(), 5);
  EXPECT_TRUE(star.empty());

  DynGraph path = p3a();
  EXPECT_FALSE(neighborhood_removal(path, log, 1));

  DynGraph isolated = make_graph({1, 7}, {});
  TransformLog log2;
  EXPECT_TRUE(neighborhood_removal(isolated, log2, 1));
}

TEST(ReduceTest, DegreeTwoFold) {
  DynGraph path = p3a();
  TransformLog log;
  ASSERT_TRUE(degree_two_fold(path, log, 1));
  ASSERT_EQ(path.num_vertices(), 1u);
  const VertexId folded = path.active_vertices().front();
  EXPECT_EQ(path.weight(folded), 1);
  EXPECT_EQ(path.degree(folded), 0u);
  EXPECT_EQ(log.offset(), 3);

  DynGraph tri = k3u();
  EXPECT_FALSE(degree_two_fold(tri, log, 0));

  DynGraph light = make_graph({1, 2, 2}, {{0, 1}, {0, 2}});
  EXPECT_FALSE(degree_two_fold(light, log, 0));
}

TEST(ReduceTest, Domination) {
  DynGraph chord = c4a();
  chord.add_edge(c4::b, c4::d);
  TransformLog log;
  EXPECT_FALSE(domination(chord, log, c4::c));

  DynGraph twins = make_graph({2, 2, 1}, {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_TRUE(domination(twins, log, 1));

  DynGraph path = make_graph({1, 5, 1}, {{0, 1}, {1, 2}});
  EXPECT_FALSE(domination(path, log, 0));
}

TEST(ReduceTest, DominationDropsLighterEqualNeighborhood) {
  DynGraph g = make_graph({3, 3, 1}, {{0, 1}, {0, 2}, {1, 2}});
  TransformLog log;
  EXPECT_TRUE(domination(g, log, 1));
  EXPECT_FALSE(g.is_active(1));
  EXPECT_EQ(log.offset(), 0);
}

TEST(ReduceTest, TwinMerge) {
  DynGraph star = s3();
  TransformLog log;
  ASSERT_TRUE(twin_merge(star, log, 1));
  EXPECT_EQ(star.weight(1), 2);
  EXPECT_FALSE(star.is_active(2));
  EXPECT_EQ(alpha(star), 5);

  DynGraph path = p3a();
  ASSERT_TRUE(twin_merge(path, log, 0));
  EXPECT_EQ(path.weight(0), 4);
  EXPECT_EQ(alpha(path), 4);

  DynGraph edge = make_graph({1, 1}, {{0, 1}});
  EXPECT_FALSE(twin_merge(edge, log, 0));
}

TEST(ReduceTest, CliqueNeighborhoodRemoval) {
  DynGraph g = make_graph({4, 2, 2, 2, 9}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {1, 4}});
  TransformLog log;
  EXPECT_TRUE(clique_neighborhood_removal(g, log, 0));
  EXPECT_EQ(log.offset(), 4);

  DynGraph h = make_graph({3, 2, 2}, {{0, 1}, {0, 2}});
  EXPECT_FALSE(clique_neighborhood_removal(h, log, 0));
}

TEST(ReduceTest, DecreasingStruction) {
  const ReduceConfig cfg;
  DynGraph cycle = c4a();
  TransformLog log;
  EXPECT_FALSE(decreasing_struction(cycle, log, c4::a, cfg));
  EXPECT_TRUE(cycle.identical(c4a()));

  DynGraph path = make_graph({1, 2, 5}, {{0, 1}, {1, 2}});
  ASSERT_TRUE(decreasing_struction(path, log, 0, cfg));
  EXPECT_EQ(path.num_vertices(), 2u);

  DynGraph isolated = make_graph({3}, {});
  TransformLog log2;
  EXPECT_TRUE(decreasing_struction(isolated, log2, 0, cfg));
  EXPECT_EQ(log2.offset(), 3);
}

TEST(ReduceTest, PlateauStruction) {
  const ReduceConfig cfg;
  DynGraph cycle = c4a();
  TransformLog log;
  ASSERT_TRUE(plateau_struction(cycle, log, c4::a, cfg));
  EXPECT_EQ(cycle.num_vertices(), 4u);
  EXPECT_EQ(alpha(cycle) + log.offset(), 4);

  // Five exceeding sets around a degree-3 center.
  DynGraph star = make_graph({1, 2, 1, 1}, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_FALSE(plateau_struction(star, log, 0, cfg));
}

TEST(ReduceTest, PlateauExclusion) {
  const DynGraph star = make_graph({1, 2, 1, 1}, {{0, 1}, {0, 2}, {0, 3}});
  Kernelizer k(star, ReduceConfig::only({Rule::PlateauStruction}));
  EXPECT_FALSE(k.is_plateau_excluded(0));
  EXPECT_FALSE(k.attempt(Rule::PlateauStruction, 0));
  EXPECT_TRUE(k.is_plateau_excluded(0));
  EXPECT_FALSE(k.attempt(Rule::PlateauStruction, 0));
  k.graph().set_weight(1, 1);
  k.absorb_changes();
  EXPECT_FALSE(k.is_plateau_excluded(0));
}

TEST(ReduceTest, ZeroWeightNeighborsAreCleanedUp) {
  // Original struction lowers the weight-1 neighbor to 0.
  ReduceConfig cfg = ReduceConfig::only({Rule::DecreasingStruction});
  cfg.variant = StructionVariant::Original;
  const DynGraph g = make_graph({1, 1, 4, 4}, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {1, 3}});
  const KernelResult k = reduce(g, cfg);
  for (VertexId v : k.kernel.active_vertices()) EXPECT_GT(k.kernel.weight(v), 0);
  EXPECT_EQ(alpha(k.kernel) + k.offset(), alpha(g));
}

// Each simple rule alone preserves alpha_w + offset at every applicable position.
TEST(ReduceTest, SimpleRuleSafety) {
  for (const auto& rule : simple_rules()) {
    std::size_t applied = 0;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
      const DynGraph g = random_gnp(2 + seed % 11, 0.15 + 0.1 * static_cast<double>(seed % 4), seed, 1, 9);
      const Weight opt = alpha(g);
      for (VertexId v : g.active_vertices()) {
        DynGraph h = g;
        TransformLog log;
        if (!rule.fn(h, log, v)) {
          EXPECT_TRUE(h.identical(g)) << rule.name;
          continue;
        }
        ++applied;
        h.check_consistency();
        const OracleResult sub = exact_mwis(h);
        ASSERT_EQ(sub.weight + log.offset(), opt) << rule.name << " seed " << seed << " v " << v;
        EXPECT_TRUE(verify_lift(g, lift(log, h, sub.solution), opt)) << rule.name;
      }
    }
    EXPECT_GT(applied, 0u) << rule.name << " never applied";
  }
}

TEST(ReduceTest, FixpointAfterReduce) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const DynGraph g = random_gnp(25, 0.12, seed);
    const ReduceConfig cfg;
    Kernelizer kz(g, cfg);
    kz.reduce();
    const DynGraph& k = kz.graph();
    for (VertexId v : k.active_vertices()) {
      for (const auto& rule : simple_rules()) {
        DynGraph h = k;
        TransformLog log;
        EXPECT_FALSE(rule.fn(h, log, v)) << rule.name << " still applies, seed " << seed;
      }
      DynGraph h = k;
      TransformLog log;
      EXPECT_FALSE(decreasing_struction(h, log, v, cfg));
      if (kz.plateau_budget_left() > 0) { EXPECT_FALSE(plateau_struction(h, log, v, cfg)); }
    }
  }
}

TEST(ReduceTest, ReductionIsExactOnRandomGraphs) {
  for (auto variant : {StructionVariant::Original, StructionVariant::Modified, StructionVariant::Extended,
                       StructionVariant::ExtendedReduced}) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const DynGraph g = random_gnp(6 + seed % 13, 0.2 + 0.1 * static_cast<double>(seed % 3), seed, 1, 50);
      ReduceConfig cfg;
      cfg.variant = variant;
      const KernelResult k = reduce(g, cfg);
      if (k.kernel.num_vertices() > kOracleLimit) continue;
      const OracleResult sub = brute_force_mwis(k.kernel);
      ASSERT_EQ(sub.weight + k.offset(), alpha(g)) << to_string(variant) << " seed " << seed;
      EXPECT_TRUE(verify_lift(g, lift(k.log, k.kernel, sub.solution), alpha(g)));
    }
  }
}

TEST(ReduceTest, DegreeAtMostTwoGraphsVanish) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 3 + seed % 48;
    for (const DynGraph& g : {random_path(n, seed), random_cycle(n, seed)}) {
      const KernelResult k = reduce(g);
      EXPECT_TRUE(k.kernel.empty()) << "seed " << seed << " n " << n;
      const auto lifted = lift(k.log, std::vector<VertexId>{});
      EXPECT_TRUE(is_independent(g, lifted));
      EXPECT_EQ(weight_of(g, lifted), k.offset());
      if (n <= kOracleLimit) { EXPECT_EQ(k.offset(), alpha(g)); }
    }
  }
}

TEST(ReduceTest, Deterministic) {
  const DynGraph g = random_gnp(80, 0.05, 7);
  const KernelResult a = reduce(g);
  const KernelResult b = reduce(g);
  EXPECT_TRUE(a.kernel.identical(b.kernel));
  EXPECT_EQ(a.log, b.log);
}

}  // namespace
}  // namespace mwis
