#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace z4z2;
using namespace testing_support;

namespace {

Structures first_witness(const CubicGraph& g) {
  auto v = characterization_search(g);
  EXPECT_TRUE(v.witness.has_value());
  return *v.witness;
}

}  // namespace

TEST(Group, ZeroSumBlocksByHand) {
  // nonzero (x, y) triples summing to (0 mod 4, 0 mod 2), listed independently
  std::set<std::set<std::pair<int, int>>> want;
  for (int a = 1; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      for (int c = b + 1; c < 8; ++c) {
        int x = (a / 2 + b / 2 + c / 2) % 4, y = (a % 2 + b % 2 + c % 2) % 2;
        if (x == 0 && y == 0) want.insert(std::set<std::pair<int, int>>{{a / 2, a % 2}, {b / 2, b % 2}, {c / 2, c % 2}});
      }
  std::set<std::set<std::pair<int, int>>> got;
  for (const Block& b : zero_sum_blocks()) {
    std::set<std::pair<int, int>> s;
    for (GroupElement g : b) s.insert({g.x, g.y});
    got.insert(s);
  }
  EXPECT_EQ(got, want);
  EXPECT_EQ(got.size(), 5u);
}

TEST(Group, EveryBlockHasAnElementWithZeroY) {
  // each block holds exactly one element with y = 0; that is why Y0 is a perfect matching
  for (const Block& b : zero_sum_blocks()) {
    int zeros = 0;
    for (GroupElement g : b) zeros += g.y == 0;
    EXPECT_EQ(zeros, 1);
  }
}

TEST(Group, AutomorphismsByBruteForce) {
  // all bijections of 8 elements preserving addition
  std::vector<int> perm{0, 1, 2, 3, 4, 5, 6, 7};
  int count = 0;
  do {
    if (perm[0] != 0) continue;
    bool hom = true;
    for (int a = 0; a < 8 && hom; ++a)
      for (int b = 0; b < 8 && hom; ++b) {
        GroupElement s = GroupElement::from_index(a) + GroupElement::from_index(b);
        GroupElement img = GroupElement::from_index(perm[static_cast<std::size_t>(a)]) +
                           GroupElement::from_index(perm[static_cast<std::size_t>(b)]);
        hom = GroupElement::from_index(perm[static_cast<std::size_t>(s.index())]) == img;
      }
    count += hom;
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(count, 8);
  EXPECT_EQ(automorphisms().size(), 8u);
}

TEST(Group, AutomorphismsMapBlocksToBlocks) {
  auto blocks = zero_sum_blocks();
  std::set<Block> all(blocks.begin(), blocks.end());
  for (const Automorphism& phi : automorphisms())
    for (Block b : blocks) {
      for (GroupElement& g : b) g = phi[static_cast<std::size_t>(g.index())];
      std::sort(b.begin(), b.end());
      EXPECT_TRUE(all.count(b));
    }
}

TEST(Verify, CatchesEachKindOfDefect) {
  CubicGraph g = complete_k4();
  EdgeColoring c = from_3_edge_coloring(g, {0, 1, 2, 2, 1, 0});
  EXPECT_TRUE(verify(g, c).all());
  EdgeColoring zero = c;
  zero[0] = GroupElement(0, 0);
  EXPECT_FALSE(verify(g, zero).nowhere_zero);
  EdgeColoring clash = c;
  clash[1] = clash[0];
  EXPECT_FALSE(verify(g, clash).proper);
  EdgeColoring sum = c;
  sum[0] = GroupElement(3, 0);
  EXPECT_TRUE(verify(g, sum).proper);
  EXPECT_FALSE(verify(g, sum).zero_sum);
  EXPECT_FALSE(verify(g, EdgeColoring(5)).all());
}

TEST(ThreeColoringMap, RejectsImproperInput) {
  CubicGraph g = complete_k4();
  try {
    from_3_edge_coloring(g, {0, 0, 1, 1, 2, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotProper3Coloring);
  }
}

TEST(ThreeColoringMap, ControlsMapToProperColorings) {
  for (const NamedGraph& n : controls()) {
    auto v = is_3_edge_colorable(n.graph);
    ASSERT_TRUE(v.colorable) << n.name;
    EdgeColoring c = from_3_edge_coloring(n.graph, v.classes);
    EXPECT_TRUE(verify(n.graph, c).all()) << n.name;
  }
}

TEST(Construct, EmptyFMatchingOnThreeColorableGraph) {
  // F with only even cycles, M perfect on it: no 3-vertices, no paths
  CubicGraph g = cube_q3();
  for (const EdgeSet& pm : enumerate_perfect_matchings(g)) {
    TwoFactor f = two_factor(g, pm);
    if (f.odd_count() != 0) continue;
    for_each_maximum_matching(g, f, [&](const MatchingInF& m) {
      ReducedGraph h = reduce(g, f, m);
      FMatching fm = make_f_matching(g, h, {});
      FComplement fc = f_complement(g, h, fm);
      EXPECT_TRUE(verify(g, construct(g, f, m, fm, fc)).all());
      return true;
    });
  }
}

TEST(Construct, ThreeOddComplementIsRefused) {
  CubicGraph g = parse_graph6(fixture("infeasible.g6"));
  int refused = 0;
  for (const EdgeSet& pm : enumerate_perfect_matchings(g)) {
    TwoFactor f = two_factor(g, pm);
    for_each_maximum_matching(g, f, [&](const MatchingInF& m) {
      ReducedGraph h = reduce(g, f, m);
      for_each_f_matching(g, h, false, kDefaultSearchNodes, [&](const FMatching& fm) {
        FComplement fc = f_complement(g, h, fm);
        if (fc.three_even()) {
          EXPECT_TRUE(verify(g, construct(g, f, m, fm, fc)).all());
        } else {
          EXPECT_THROW(construct(g, f, m, fm, fc), Error);
          ++refused;
        }
        return true;
      });
      return true;
    });
  }
  EXPECT_GT(refused, 0);
}

TEST(Extract, InvertsConstructOnSnarks) {
  for (const CubicGraph& g : {petersen(), blanusa(1), blanusa(2)}) {
    Structures s = first_witness(g);
    EdgeColoring c = construct(g, s.f, s.m, s.fm, s.fc);
    Structures back = extract(g, c);
    EXPECT_EQ(back.f.complement, s.f.complement);
    EXPECT_EQ(back.m.edges, s.m.edges);
    EXPECT_EQ(back.fm.edge_set, s.fm.edge_set);
    EXPECT_EQ(c.y_class(0), s.f.complement);
    EXPECT_EQ(c.x_class(0), s.m.edges);
    EXPECT_EQ(c.x_class(2), s.fm.edge_set);
  }
}

TEST(Extract, YZeroIsPerfectMatchingForOracleColorings) {
  SplitMix rng(31);
  for (int i = 0; i < 20; ++i) {
    CubicGraph g = random_bridgeless(6 + 2 * rng.below(5), rng);
    auto v = brute_force_z4z2(g);
    ASSERT_TRUE(v.witness);
    EXPECT_TRUE(is_perfect_matching(g, v.witness->y_class(0)));
    EXPECT_NO_THROW(extract(g, *v.witness));
  }
}

TEST(Extract, RejectsInvalidColoring) {
  CubicGraph g = complete_k4();
  try {
    extract(g, EdgeColoring(6));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidColoring);
  }
}

TEST(Certificate, RoundTripAndTamper) {
  CubicGraph g = petersen();
  Structures s = first_witness(g);
  json cert = make_certificate(g, construct(g, s.f, s.m, s.fm, s.fc), "test");
  EXPECT_EQ(cert["graph6"], "IheA@GUAo");
  EXPECT_TRUE(check_certificate(json::parse(cert.dump())).valid());

  json flipped = cert;
  flipped["coloring"][3][1] = 1 - flipped["coloring"][3][1].get<int>();
  EXPECT_FALSE(check_certificate(flipped).valid());

  json moved = cert;
  moved["matching"] = json::array();
  CertificateCheck c = check_certificate(moved);
  EXPECT_FALSE(c.structures_match);
  EXPECT_FALSE(c.valid());

  json lying = cert;
  lying["verdicts"]["zero_sum"] = false;
  EXPECT_FALSE(check_certificate(lying).verdicts_match);
}

TEST(Certificate, UnreadableInput) {
  try {
    check_certificate(json{{"graph6", "C~"}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::MalformedCertificate);
  }
}

TEST(Dot, MarksStructures) {
  CubicGraph g = petersen();
  Structures s = first_witness(g);
  std::string dot = to_dot(g, construct(g, s.f, s.m, s.fm, s.fc));
  EXPECT_NE(dot.find("graph G {"), std::string::npos);
  EXPECT_NE(dot.find("style=dashed"), std::string::npos);
  EXPECT_NE(dot.find("penwidth=3"), std::string::npos);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '\n'), 15 + 3);
}
