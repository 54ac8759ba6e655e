#include "support.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace z4z2;
using namespace testing_support;

namespace {

std::size_t naive_automorphisms(const CubicGraph& g) {
  std::vector<Vertex> p(static_cast<std::size_t>(g.order()));
  std::iota(p.begin(), p.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (const Edge& e : g.edges())
      if (!g.edge_between(p[static_cast<std::size_t>(e.u)], p[static_cast<std::size_t>(e.v)])) {
        ok = false;
        break;
      }
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

}  // namespace

TEST(ThreeColoring, NamedGraphs) {
  EXPECT_TRUE(is_3_edge_colorable(complete_k33()).colorable);
  EXPECT_TRUE(is_3_edge_colorable(cube_q3()).colorable);
  EXPECT_FALSE(is_3_edge_colorable(petersen()).colorable);
  EXPECT_FALSE(is_3_edge_colorable(flower(5)).colorable);
  EXPECT_FALSE(is_3_edge_colorable(blanusa(1)).colorable);
}

TEST(ThreeColoring, AgreesWithPlainBacktracking) {
  SplitMix rng(2024);
  for (int i = 0; i < 80; ++i) {
    CubicGraph g = random_bridgeless(4 + 2 * rng.below(8), rng);
    auto v = is_3_edge_colorable(g);
    EXPECT_EQ(v.colorable, naive_3_colorable(g)) << to_graph6(g);
    if (v.colorable) EXPECT_TRUE(verify(g, from_3_edge_coloring(g, v.classes)).all());
  }
}

TEST(ThreeColoring, RemovedEdgesAreSkipped) {
  CubicGraph g = petersen();
  EXPECT_FALSE(is_3_edge_colorable(g, EdgeSet(15, {0}), kDefaultOracleNodes).colorable);
  // two edges at distance two meet every pentagon of some 2-factor twice
  EdgeSet two = g.no_edges();
  for (EdgeId a = 0; a < 15 && two.indices().empty(); ++a)
    for (EdgeId b = a + 1; b < 15; ++b)
      if (is_3_edge_colorable(g, EdgeSet(15, {a, b}), kDefaultOracleNodes).colorable) {
        two = EdgeSet(15, {a, b});
        break;
      }
  ASSERT_EQ(two.indices().size(), 2u);
  auto v = is_3_edge_colorable(g, two, kDefaultOracleNodes);
  for (EdgeId e : two.indices()) EXPECT_EQ(v.classes[static_cast<std::size_t>(e)], -1);
  for (Vertex x = 0; x < g.order(); ++x) {
    std::vector<int> seen;
    for (EdgeId e : g.incident(x))
      if (!two.contains(e)) seen.push_back(v.classes[static_cast<std::size_t>(e)]);
    std::sort(seen.begin(), seen.end());
    EXPECT_EQ(std::adjacent_find(seen.begin(), seen.end()), seen.end());
  }
}

TEST(BruteForce, FindsVerifiedColoringsExactlyWhenTheyExist) {
  SplitMix rng(7);
  for (int i = 0; i < 40; ++i) {
    CubicGraph g = random_bridgeless(4 + 2 * rng.below(5), rng);
    auto v = brute_force_z4z2(g);
    EXPECT_EQ(v.colorable, naive_z4z2_count(g) > 0);
    if (v.witness) EXPECT_TRUE(verify(g, *v.witness).all());
  }
  EXPECT_TRUE(brute_force_z4z2(petersen()).colorable);
}

TEST(BruteForce, ParanoidAgreesWithPruned) {
  SplitMix rng(71);
  for (int i = 0; i < 30; ++i) {
    CubicGraph g = random_bridgeless(4 + 2 * rng.below(6), rng);
    auto fast = brute_force_z4z2(g);
    auto slow = brute_force_z4z2(g, {kDefaultOracleNodes, true});
    EXPECT_EQ(fast.colorable, slow.colorable);
  }
}

TEST(BruteForce, TinyBudgetThrows) {
  try {
    brute_force_z4z2(flower(5), {3, false});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BudgetExhausted);
  }
}

TEST(SymmetryTable, CoversEveryOrderedPairUpToAutomorphism) {
  // every proper ordered pair of nonzero colours maps onto some table entry
  const auto& t = detail::symmetry_table();
  for (GroupElement a : nonzero_elements())
    for (GroupElement b : nonzero_elements()) {
      if (a == b) continue;
      bool hit = false;
      for (const Automorphism& phi : automorphisms()) {
        GroupElement pa = phi[static_cast<std::size_t>(a.index())], pb = phi[static_cast<std::size_t>(b.index())];
        for (GroupElement f : t.first)
          if (f == pa)
            for (GroupElement s : t.second[static_cast<std::size_t>(f.index())]) hit = hit || s == pb;
      }
      EXPECT_TRUE(hit) << a.index() << " " << b.index();
    }
}

TEST(Characterization, AgreesWithBruteForce) {
  SplitMix rng(19);
  for (int i = 0; i < 30; ++i) {
    CubicGraph g = random_bridgeless(6 + 2 * rng.below(5), rng);
    auto c = characterization_search(g);
    ASSERT_TRUE(c.witness.has_value()) << to_graph6(g);
    const Structures& s = *c.witness;
    EXPECT_TRUE(s.fc.three_even());
    EXPECT_TRUE(verify(g, construct(g, s.f, s.m, s.fm, s.fc)).all());
    EXPECT_TRUE(brute_force_z4z2(g).colorable);
  }
  for (const CubicGraph& g : {petersen(), blanusa(1), blanusa(2)}) EXPECT_TRUE(characterization_search(g).witness);
}

TEST(Characterization, PmLimitWithoutVerdictThrows) {
  // a zero perfect-matching limit never reaches a verdict
  EXPECT_THROW(characterization_search(petersen(), {kDefaultSearchNodes, 0}), Error);
}

TEST(Resistance, SnarksAndControls) {
  CountVerdict r = resistance(petersen());
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(r.edges.size(), 2u);
  EXPECT_TRUE(is_3_edge_colorable(petersen(), EdgeSet(15, r.edges), kDefaultOracleNodes).colorable);
  CountVerdict e = reduction_number(petersen());
  EXPECT_EQ(e.value, 1);
  for (const NamedGraph& n : controls()) {
    EXPECT_EQ(resistance(n.graph).value, 0) << n.name;
    EXPECT_EQ(reduction_number(n.graph).value, 0) << n.name;
  }
}

TEST(Resistance, ReductionNumberIsAtMostResistance) {
  for (const CubicGraph& g : {petersen(), blanusa(1), blanusa(2), flower(5)}) {
    int r = resistance(g).value, e = reduction_number(g).value;
    EXPECT_GE(e, 1);
    EXPECT_LE(e, r);
  }
}

TEST(Automorphisms, MatchPermutationCountOnSmallGraphs) {
  for (const NamedGraph& n : controls()) EXPECT_EQ(automorphism_count(n.graph), naive_automorphisms(n.graph)) << n.name;
  EXPECT_EQ(automorphism_count(petersen()), naive_automorphisms(petersen()));
}

TEST(Automorphisms, KnownSnarkGroups) {
  EXPECT_EQ(automorphism_count(petersen()), 120u);
  EXPECT_EQ(automorphism_count(blanusa(1)), 8u);
  EXPECT_EQ(automorphism_count(blanusa(2)), 4u);
  EXPECT_EQ(automorphism_count(flower(5)), 20u);
}
