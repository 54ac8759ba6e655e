#include "support.hpp"

#include <gtest/gtest.h>

using namespace z4z2;
using namespace testing_support;

namespace {

// K4 with one edge subdivided, twice, subdivision vertices joined.
CubicGraph bridged_pair() {
  std::vector<std::pair<Vertex, Vertex>> e{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {3, 4}};
  for (auto [u, v] : std::vector<std::pair<Vertex, Vertex>>(e)) e.push_back({u + 5, v + 5});
  e.push_back({4, 9});
  return CubicGraph::from_edges(10, e);
}

}  // namespace

TEST(Graph6, CompleteGraphK4) {
  CubicGraph g = parse_graph6("C~");
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 6);
  EXPECT_EQ(to_graph6(complete_k4()), "C~");
}

TEST(Graph6, PathIsRejectedAsNotCubic) {
  try {
    parse_graph6("Bg");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotCubic);
  }
}

TEST(Graph6, MalformedInput) {
  for (std::string bad : {"", "I", "IheA@GUA", "Ihe\x7f@GUAo"}) {
    try {
      parse_graph6(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::MalformedGraph6) << bad;
    }
  }
}

TEST(Graph6, DisconnectedRejected) {
  // two disjoint K4s
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int base : {0, 4})
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) e.push_back({base + a, base + b});
  try {
    CubicGraph::from_edges(8, e);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::Disconnected);
  }
  std::string text = to_graph6(8, e);
  EXPECT_THROW(parse_graph6(text), Error);
}

TEST(Graph6, PetersenMatchesReferenceEncoding) {
  // the usual encoding of the outer-pentagon / inner-pentagram labelling
  EXPECT_EQ(to_graph6(petersen()), "IheA@GUAo");
  EXPECT_EQ(parse_graph6("IheA@GUAo"), petersen());
}

TEST(Graph6, RoundTripKeepsEdgeIndices) {
  for (const CubicGraph& g : {petersen(), flower(5), flower(7), blanusa(1), blanusa(2), cube_q3()}) {
    CubicGraph back = parse_graph6(to_graph6(g));
    ASSERT_EQ(back.size(), g.size());
    for (EdgeId e = 0; e < g.size(); ++e) EXPECT_EQ(back.edge(e), g.edge(e));
  }
}

TEST(Graph6, RandomRoundTrip) {
  SplitMix rng(11);
  for (int i = 0; i < 40; ++i) {
    CubicGraph g = random_graph(4 + 2 * rng.below(14), rng);
    EXPECT_EQ(parse_graph6(to_graph6(g)), g);
  }
}

TEST(Graph6, ReadsFileLinesSkippingComments) {
  std::istringstream in("# snarks\nIheA@GUAo\n\nC~\r\n");
  auto lines = read_graph6_lines(in);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0].line_number, 2);
  EXPECT_EQ(lines[1].text, "C~");
}

TEST(CubicGraph, CanonicalEdgeOrder) {
  CubicGraph g = CubicGraph::from_edges(4, {{3, 2}, {1, 0}, {2, 0}, {3, 1}, {0, 3}, {2, 1}});
  std::vector<Edge> want{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (EdgeId e = 0; e < 6; ++e) EXPECT_EQ(g.edge(e), want[static_cast<std::size_t>(e)]);
  for (Vertex v = 0; v < 4; ++v)
    for (EdgeId e : g.incident(v)) EXPECT_TRUE(g.edge(e).u == v || g.edge(e).v == v);
}

TEST(CubicGraph, RejectsLoopsAndParallelEdges) {
  EXPECT_THROW(CubicGraph::from_edges(4, {{0, 0}, {0, 1}, {1, 2}, {2, 3}, {3, 1}, {2, 3}}), Error);
  try {
    CubicGraph::from_edges(4, {{0, 1}, {0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 3}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotSimple);
  }
  EXPECT_THROW(CubicGraph::from_edges(5, {}), Error);
}

TEST(CubicGraph, SizeIsThreeHalvesOrder) {
  SplitMix rng(3);
  for (int i = 0; i < 30; ++i) {
    CubicGraph g = random_graph(4 + 2 * rng.below(10), rng);
    EXPECT_EQ(2 * g.size(), 3 * g.order());
    EXPECT_EQ(g.order() % 2, 0);
  }
}

TEST(Bridges, NamedGraphsAreBridgeless) {
  EXPECT_TRUE(find_bridges(petersen()).empty());
  EXPECT_TRUE(find_bridges(complete_k4()).empty());
  EXPECT_TRUE(find_bridges(flower(5)).empty());
}

TEST(Bridges, JoinedGadgetsHaveOneBridge) {
  CubicGraph g = bridged_pair();
  EdgeSet b = find_bridges(g);
  ASSERT_EQ(b.size(), 1u);
  EdgeId e = b.indices()[0];
  EXPECT_EQ(g.edge(e), (Edge{4, 9}));
  EXPECT_FALSE(connected_without(g, e));
}

TEST(Bridges, AgreeWithDeletionOracle) {
  SplitMix rng(2024);
  int with_bridges = 0;
  for (int i = 0; i < 200; ++i) {
    CubicGraph g = random_graph(4 + 2 * rng.below(9), rng);
    auto naive = naive_bridges(g);
    EXPECT_EQ(find_bridges(g).indices(), naive) << to_graph6(g);
    with_bridges += naive.empty() ? 0 : 1;
  }
  EXPECT_GT(with_bridges, 0);
  EXPECT_EQ(find_bridges(bridged_pair()).indices(), naive_bridges(bridged_pair()));
}

TEST(EdgeReduction, CubeMinusOneEdge) {
  CubicGraph q = cube_q3();
  CubicGraph r = edge_reduction(q, EdgeSet(static_cast<std::size_t>(q.size()), {0}));
  EXPECT_EQ(r.order(), 6);
  EXPECT_EQ(r.size(), 9);
}

TEST(EdgeReduction, AdjacentEdgesAreNotAMatching) {
  CubicGraph q = cube_q3();
  auto inc = q.incident(0);
  try {
    edge_reduction(q, EdgeSet(static_cast<std::size_t>(q.size()), {inc[0], inc[1]}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotAMatching);
  }
}

TEST(EdgeReduction, PetersenMinusEdgeIsColorable) {
  CubicGraph p = petersen();
  CubicGraph r = edge_reduction(p, EdgeSet(static_cast<std::size_t>(p.size()), {0}));
  EXPECT_EQ(r.order(), 8);
  EXPECT_TRUE(naive_3_colorable(r));
}

TEST(EdgeReduction, K4CollapsesIntoMultiEdges) {
  CubicGraph k = complete_k4();
  try {
    edge_reduction(k, EdgeSet(6, {0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_TRUE(e.code() == Errc::MultiEdgeCreated || e.code() == Errc::SelfLoopCreated);
  }
}

TEST(EdgeReduction, PrismRungDoublesATriangleEdge) {
  CubicGraph p = prism();
  try {
    edge_reduction(p, EdgeSet(9, {*p.edge_between(0, 3)}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::MultiEdgeCreated);
  }
  // a triangle edge instead leaves K4
  EXPECT_EQ(edge_reduction(p, EdgeSet(9, {*p.edge_between(0, 1)})).size(), 6);
}

TEST(Girth, KnownValues) {
  EXPECT_EQ(girth(complete_k4()), 3);
  EXPECT_EQ(girth(complete_k33()), 4);
  EXPECT_EQ(girth(cube_q3()), 4);
  EXPECT_EQ(girth(petersen()), 5);
}
