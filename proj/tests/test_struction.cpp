#include <gtest/gtest.h>

#include "test_support.hpp"

namespace mwis {
namespace {

using namespace testing;
using c4::a;
using c4::b;
using c4::c;
using c4::d;

std::vector<VertexId> nbrs(const DynGraph& g, VertexId v) { return {g.neighbors(v).begin(), g.neighbors(v).end()}; }

TEST(StructionTest, OriginalOnCycle) {
  DynGraph g = c4a();
  TransformLog log;
  const auto out = original_struction(g, a, kNoCap, log);
  ASSERT_TRUE(out.has_value());
  ASSERT_EQ(out->created.size(), 1u);
  const VertexId vbd = out->created[0].id;
  EXPECT_EQ(out->created[0].members, ids({b}));
  EXPECT_EQ(out->created[0].extra, d);
  EXPECT_EQ(g.active_vertices(), ids({b, c, d, vbd}));
  EXPECT_EQ(g.weight(b), 1);
  EXPECT_EQ(g.weight(c), 3);
  EXPECT_EQ(g.weight(d), 1);
  EXPECT_EQ(g.weight(vbd), 1);
  EXPECT_EQ(g.num_edges(), 3u);
  EXPECT_EQ(nbrs(g, c), ids({b, d, vbd}));
  EXPECT_EQ(alpha(g), 3);
  EXPECT_EQ(log.offset(), 1);
  g.check_consistency();
}

TEST(StructionTest, OriginalAbortsUnderCap) {
  DynGraph g = c4a();
  const DynGraph before = g;
  TransformLog log;
  EXPECT_FALSE(original_struction(g, a, 0, log).has_value());
  EXPECT_TRUE(g.identical(before));
  EXPECT_TRUE(log.empty());
}

TEST(StructionTest, OriginalCliqueNeighborhoodIsPureRemoval) {
  DynGraph g = make_graph({1, 2, 3, 2}, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  const Weight before = alpha(g);
  TransformLog log;
  const auto out = original_struction(g, 0, kNoCap, log);
  ASSERT_TRUE(out.has_value());
  EXPECT_TRUE(out->created.empty());
  EXPECT_EQ(alpha(g) + log.offset(), before);
}

TEST(StructionTest, PairVariantsRequireMinimalCenter) {
  for (bool modified : {false, true}) {
    DynGraph g = c4a();
    TransformLog log;
    try {
      (void)(modified ? modified_struction(g, c, kNoCap, log) : original_struction(g, c, kNoCap, log));
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotMinimal);
    }
  }
}

TEST(StructionTest, ModifiedOnCycle) {
  DynGraph g = c4a();
  TransformLog log;
  const auto out = modified_struction(g, a, kNoCap, log);
  ASSERT_TRUE(out.has_value());
  ASSERT_EQ(out->created.size(), 1u);
  const VertexId vbd = out->created[0].id;
  EXPECT_EQ(g.weight(vbd), 2);
  EXPECT_TRUE(g.is_adjacent(b, d));
  EXPECT_TRUE(g.is_adjacent(d, vbd));
  EXPECT_FALSE(g.is_adjacent(b, vbd));
  EXPECT_EQ(alpha(g), 3);
  const auto lifted = lift(log, g, ids({b, vbd}));
  EXPECT_EQ(lifted, ids({b, d}));
  EXPECT_TRUE(verify_lift(c4a(), lifted, 4));
}

TEST(StructionTest, ExtendedOnCycle) {
  DynGraph g = c4a();
  TransformLog log;
  const auto out = extended_struction(g, a, kNoCap, log);
  ASSERT_TRUE(out.has_value());
  ASSERT_EQ(out->created.size(), 3u);
  EXPECT_EQ(out->created[0].members, ids({b}));
  EXPECT_EQ(out->created[1].members, ids({d}));
  EXPECT_EQ(out->created[2].members, ids({b, d}));
  EXPECT_EQ(out->created[0].weight, 1);
  EXPECT_EQ(out->created[1].weight, 1);
  EXPECT_EQ(out->created[2].weight, 3);
  for (const auto& x : out->created) {
    EXPECT_TRUE(g.is_adjacent(x.id, c));
    for (const auto& y : out->created) {
      if (x.id != y.id) { EXPECT_TRUE(g.is_adjacent(x.id, y.id)); }
    }
  }
  EXPECT_EQ(g.num_vertices(), 4u);
  EXPECT_EQ(alpha(g), 3);
}

TEST(StructionTest, ExtendedDegenerateCenters) {
  DynGraph isolated = make_graph({4, 1}, {});
  TransformLog log;
  const auto out = extended_struction(isolated, 0, kNoCap, log);
  ASSERT_TRUE(out.has_value());
  EXPECT_TRUE(out->created.empty());
  EXPECT_EQ(log.offset(), 4);

  DynGraph heavy = s3();
  TransformLog log2;
  const auto out2 = extended_struction(heavy, 0, kNoCap, log2);
  ASSERT_TRUE(out2.has_value());
  EXPECT_TRUE(out2->created.empty());
  EXPECT_TRUE(heavy.empty());
}

TEST(StructionTest, ExtendedReducedOnCycle) {
  DynGraph g = c4a();
  TransformLog log;
  const auto out = extended_reduced_struction(g, a, kNoCap, log);
  ASSERT_TRUE(out.has_value());
  ASSERT_EQ(out->created.size(), 4u);
  const auto& vb = out->created[0];
  const auto& vd = out->created[1];
  const auto& vbd = out->created[2];
  const auto& vdb = out->created[3];
  EXPECT_EQ(vb.kind, event::Provenance::Set);
  EXPECT_EQ(vb.members, ids({b}));
  EXPECT_EQ(vd.members, ids({d}));
  EXPECT_EQ(vbd.kind, event::Provenance::SetPlus);
  EXPECT_EQ(vbd.members, ids({b}));
  EXPECT_EQ(vbd.extra, d);
  EXPECT_EQ(vdb.members, ids({d}));
  EXPECT_EQ(vdb.extra, b);
  EXPECT_EQ(vb.weight, 1);
  EXPECT_EQ(vbd.weight, 2);
  EXPECT_EQ(alpha(g), 3);
  EXPECT_FALSE(g.is_adjacent(vb.id, vbd.id));
  EXPECT_TRUE(g.is_adjacent(vb.id, vdb.id));
  const auto lifted = lift(log, g, ids({vb.id, vbd.id}));
  EXPECT_EQ(lifted, ids({b, d}));
  EXPECT_TRUE(verify_lift(c4a(), lifted, 4));
}

TEST(StructionTest, ExtendedReducedKeepsOnlyMinimalSets) {
  // Center 0 (w=5) with independent neighbors of weight 3 and 4: only the pair exceeds.
  DynGraph g = make_graph({5, 3, 4}, {{0, 1}, {0, 2}});
  TransformLog log;
  const auto out = extended_reduced_struction(g, 0, kNoCap, log);
  ASSERT_TRUE(out.has_value());
  ASSERT_EQ(out->created.size(), 1u);
  EXPECT_EQ(out->created[0].members, ids({1, 2}));

  DynGraph h = make_graph({9, 3, 4}, {{0, 1}, {0, 2}});
  TransformLog log2;
  const auto none = extended_reduced_struction(h, 0, kNoCap, log2);
  ASSERT_TRUE(none.has_value());
  EXPECT_TRUE(none->created.empty());
  EXPECT_EQ(log2.offset(), 9);
}

TEST(StructionTest, EnumerateExceedingSets) {
  const DynGraph g = c4a();
  const auto all = enumerate_exceeding_sets(g, ids({b, d}), 1, kNoCap, false);
  ASSERT_TRUE(all.has_value());
  ASSERT_EQ(all->size(), 3u);
  EXPECT_EQ((*all)[0].members, ids({b}));
  EXPECT_EQ((*all)[1].members, ids({d}));
  EXPECT_EQ((*all)[2].members, ids({b, d}));
  EXPECT_EQ((*all)[2].weight, 4);

  const auto minimal = enumerate_exceeding_sets(g, ids({b, d}), 1, kNoCap, true);
  ASSERT_TRUE(minimal.has_value());
  ASSERT_EQ(minimal->size(), 2u);
  EXPECT_EQ((*minimal)[1].members, ids({d}));

  const auto none = enumerate_exceeding_sets(g, ids({b, d}), 4, kNoCap, false);
  ASSERT_TRUE(none.has_value());
  EXPECT_TRUE(none->empty());

  EXPECT_FALSE(enumerate_exceeding_sets(g, ids({b, d}), 1, 2, false).has_value());
}

// Enumeration agrees with a direct subset scan.
TEST(StructionTest, EnumerationMatchesSubsetScan) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const DynGraph g = random_gnp(9, 0.3, seed, 1, 9);
    const auto verts = g.active_vertices();
    const Weight threshold = 6;
    for (bool minimal : {false, true}) {
      std::size_t expected = 0;
      for (std::uint32_t mask = 1; mask < (1u << verts.size()); ++mask) {
        std::vector<VertexId> set;
        Weight w = 0;
        Weight lightest = std::numeric_limits<Weight>::max();
        for (std::size_t i = 0; i < verts.size(); ++i) {
          if (mask >> i & 1u) {
            set.push_back(verts[i]);
            w += g.weight(verts[i]);
            lightest = std::min(lightest, g.weight(verts[i]));
          }
        }
        if (!is_independent(g, set) || w <= threshold) continue;
        if (minimal && w - lightest > threshold) continue;
        ++expected;
      }
      const auto got = enumerate_exceeding_sets(g, verts, threshold, kNoCap, minimal);
      ASSERT_TRUE(got.has_value());
      EXPECT_EQ(got->size(), expected) << "seed " << seed;
    }
  }
}

// Weight identity and lift validity for every variant on a small corpus
// (the acceptance binary runs the full-size version).
TEST(StructionTest, WeightIdentityAllVariants) {
  for (auto variant : {StructionVariant::Original, StructionVariant::Modified, StructionVariant::Extended,
                       StructionVariant::ExtendedReduced}) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const DynGraph g = random_gnp(3 + seed % 9, 0.2 + 0.2 * static_cast<double>(seed % 3), seed, 1, 9);
      const Weight opt = alpha(g);
      for (VertexId v : g.active_vertices()) {
        if (g.degree(v) > 8 || !struction_applicable(variant, g, v)) continue;
        DynGraph h = g;
        TransformLog log;
        ASSERT_TRUE(apply_struction(variant, h, v, kNoCap, log).has_value());
        h.check_consistency();
        const OracleResult sub = exact_mwis(h);
        ASSERT_EQ(sub.weight + g.weight(v), opt) << to_string(variant) << " seed " << seed << " v " << v;
        EXPECT_TRUE(verify_lift(g, lift(log, h, sub.solution), opt)) << to_string(variant) << " seed " << seed;
      }
    }
  }
}

TEST(StructionTest, AbortIsTransactional) {
  for (auto variant : {StructionVariant::Extended, StructionVariant::ExtendedReduced}) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      DynGraph g = random_gnp(10, 0.2, seed, 1, 9);
      for (VertexId v : g.active_vertices()) {
        const DynGraph before = g;
        TransformLog log;
        if (!apply_struction(variant, g, v, 0, log).has_value()) {
          EXPECT_TRUE(g.identical(before));
          EXPECT_TRUE(log.empty());
        } else {
          g = before;
        }
      }
    }
  }
}

}  // namespace
}  // namespace mwis
