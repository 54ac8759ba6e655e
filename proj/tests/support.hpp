#pragma once

#include <z4z2/z4z2.hpp>

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

namespace testing_support {

using namespace z4z2;

// splitmix64; kept here so property tests do not depend on the library's RNG use.
struct SplitMix {
  std::uint64_t state;
  explicit SplitMix(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

inline std::string fixture(const std::string& name) {
  std::ifstream in(std::string(Z4Z2_FIXTURES) + "/" + name);
  std::string line;
  std::getline(in, line);
  return line;
}

// Pairing model, retried until simple and connected.
inline CubicGraph random_graph(int order, SplitMix& rng) {
  for (;;) {
    std::vector<Vertex> pts;
    for (Vertex v = 0; v < order; ++v) pts.insert(pts.end(), 3, v);
    for (int i = static_cast<int>(pts.size()) - 1; i > 0; --i) std::swap(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(rng.below(i + 1))]);
    std::vector<std::pair<Vertex, Vertex>> e;
    for (std::size_t k = 0; k < pts.size(); k += 2) e.push_back({pts[k], pts[k + 1]});
    try {
      return CubicGraph::from_edges(order, e);
    } catch (const Error&) {
    }
  }
}

inline CubicGraph random_bridgeless(int order, SplitMix& rng) {
  for (;;) {
    CubicGraph g = random_graph(order, rng);
    if (is_bridgeless(g)) return g;
  }
}

inline bool connected_without(const CubicGraph& g, EdgeId skip) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(v)) {
      if (e == skip) continue;
      Vertex w = g.other(e, v);
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.order();
}

inline std::vector<EdgeId> naive_bridges(const CubicGraph& g) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.size(); ++e)
    if (!connected_without(g, e)) out.push_back(e);
  return out;
}

// Include/exclude over edges in index order, checked only by vertex degree.
inline std::size_t naive_pm_count(const CubicGraph& g) {
  std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
  std::size_t count = 0;
  auto rec = [&](auto&& self, int e) -> void {
    if (e == g.size()) {
      for (int d : deg)
        if (d != 1) return;
      ++count;
      return;
    }
    self(self, e + 1);
    auto u = static_cast<std::size_t>(g.edge(e).u), v = static_cast<std::size_t>(g.edge(e).v);
    if (deg[u] || deg[v]) return;
    deg[u] = deg[v] = 1;
    self(self, e + 1);
    deg[u] = deg[v] = 0;
  };
  rec(rec, 0);
  return count;
}

// Plain backtracking with no symmetry breaking.
inline bool naive_3_colorable(const CubicGraph& g) {
  std::vector<int> col(static_cast<std::size_t>(g.size()), -1);
  auto ok = [&](EdgeId e) {
    for (Vertex w : {g.edge(e).u, g.edge(e).v})
      for (EdgeId f : g.incident(w))
        if (f != e && col[static_cast<std::size_t>(f)] == col[static_cast<std::size_t>(e)]) return false;
    return true;
  };
  auto rec = [&](auto&& self, int e) -> bool {
    if (e == g.size()) return true;
    for (int c = 0; c < 3; ++c) {
      col[static_cast<std::size_t>(e)] = c;
      if (ok(e) && self(self, e + 1)) return true;
    }
    col[static_cast<std::size_t>(e)] = -1;
    return false;
  };
  return rec(rec, 0);
}

// Counts proper Z4 x Z2 colourings by plain backtracking; feasible up to about 9 edges.
inline std::size_t naive_z4z2_count(const CubicGraph& g) {
  std::vector<int> col(static_cast<std::size_t>(g.size()), -1);
  std::size_t count = 0;
  auto vertex_ok = [&](Vertex w) {
    auto inc = g.incident(w);
    int a = col[static_cast<std::size_t>(inc[0])], b = col[static_cast<std::size_t>(inc[1])], c = col[static_cast<std::size_t>(inc[2])];
    if (a < 0 || b < 0 || c < 0) return (a < 0 || (a != b && a != c)) && (b < 0 || b != c);
    if (a == b || a == c || b == c) return false;
    // index 2x + y
    int x = (a / 2 + b / 2 + c / 2) % 4, y = (a + b + c) % 2;
    return x == 0 && y == 0;
  };
  auto rec = [&](auto&& self, int e) -> void {
    if (e == g.size()) {
      ++count;
      return;
    }
    for (int c = 1; c < 8; ++c) {
      col[static_cast<std::size_t>(e)] = c;
      if (vertex_ok(g.edge(e).u) && vertex_ok(g.edge(e).v)) self(self, e + 1);
    }
    col[static_cast<std::size_t>(e)] = -1;
  };
  rec(rec, 0);
  return count;
}

// Every F-matching of H as an edge set: all subsets of H's edges in which each
// 3-vertex has degree 1, each 2-vertex degree 0 or 2, with no cycles and F end-edges.
inline std::vector<EdgeSet> naive_f_matchings(const CubicGraph& g, const ReducedGraph& h, bool require_simple) {
  std::vector<EdgeId> pool = h.edges.indices();
  std::vector<EdgeSet> out;
  const std::size_t total = std::size_t{1} << pool.size();
  for (std::size_t mask = 0; mask < total; ++mask) {
    EdgeSet s = g.no_edges();
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (mask >> i & 1) s.insert(pool[i]);
    std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
    s.for_each([&](EdgeId e) {
      ++deg[static_cast<std::size_t>(g.edge(e).u)];
      ++deg[static_cast<std::size_t>(g.edge(e).v)];
    });
    bool good = true;
    for (Vertex v = 0; v < g.order() && good; ++v) {
      int d = deg[static_cast<std::size_t>(v)];
      good = h.is_three(v) ? d == 1 : (d == 0 || d == 2);
    }
    if (!good) continue;
    // walk each path from a 3-vertex; leftover edges mean a cycle
    std::size_t walked = 0;
    std::vector<char> used(static_cast<std::size_t>(g.size()), 0);
    for (Vertex s0 : h.three_vertices) {
      EdgeId via = -1;
      for (EdgeId e : g.incident(s0))
        if (s.contains(e)) via = e;
      if (used[static_cast<std::size_t>(via)]) continue;
      std::vector<EdgeId> path;
      Vertex at = s0;
      for (;;) {
        used[static_cast<std::size_t>(via)] = 1;
        path.push_back(via);
        at = g.other(via, at);
        if (h.is_three(at)) break;
        EdgeId next = -1;
        for (EdgeId e : g.incident(at))
          if (e != via && s.contains(e)) next = e;
        via = next;
      }
      walked += path.size();
      if (!h.f_edges.contains(path.front()) || !h.f_edges.contains(path.back())) good = false;
      for (std::size_t k = 1; require_simple && k + 1 < path.size(); ++k)
        if (h.odd_cycle_edges.contains(path[k])) good = false;
    }
    if (!good || walked != s.size()) continue;
    out.push_back(s);
  }
  return out;
}

}  // namespace testing_support
