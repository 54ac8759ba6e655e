#pragma once

#include "group.hpp"
#include "structures.hpp"

#include <string>
#include <vector>

namespace z4z2 {

/// A total map from edge indices to Z4 x Z2.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  explicit EdgeColoring(int edge_count) : colors_(static_cast<std::size_t>(edge_count)) {}
  explicit EdgeColoring(std::vector<GroupElement> colors) : colors_(std::move(colors)) {}

  int size() const { return static_cast<int>(colors_.size()); }
  GroupElement operator[](EdgeId e) const { return colors_.at(static_cast<std::size_t>(e)); }
  GroupElement& operator[](EdgeId e) { return colors_.at(static_cast<std::size_t>(e)); }
  const std::vector<GroupElement>& colors() const { return colors_; }

  /// X_i = {e : x(e) = i}.
  EdgeSet x_class(int i) const {
    EdgeSet s(size());
    for (int e = 0; e < size(); ++e)
      if (colors_[static_cast<std::size_t>(e)].x == i) s.insert(e);
    return s;
  }
  /// Y_j = {e : y(e) = j}.
  EdgeSet y_class(int j) const {
    EdgeSet s(size());
    for (int e = 0; e < size(); ++e)
      if (colors_[static_cast<std::size_t>(e)].y == j) s.insert(e);
    return s;
  }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::vector<GroupElement> colors_;
};

struct Verdicts {
  bool proper = false;
  bool nowhere_zero = false;
  bool zero_sum = false;

  bool all() const { return proper && nowhere_zero && zero_sum; }
  friend bool operator==(const Verdicts&, const Verdicts&) = default;
};

inline Verdicts verify(const CubicGraph& g, const EdgeColoring& c) {
  if (c.size() != g.size()) return {};
  Verdicts v{true, true, true};
  for (EdgeId e = 0; e < g.size(); ++e)
    if (c[e].is_zero()) v.nowhere_zero = false;
  for (Vertex u = 0; u < g.order(); ++u) {
    auto inc = g.incident(u);
    GroupElement a = c[inc[0]], b = c[inc[1]], d = c[inc[2]];
    if (a == b || a == d || b == d) v.proper = false;
    if (!(a + b + d).is_zero()) v.zero_sum = false;
  }
  return v;
}

/// Maps a proper 3-edge-coloring (class 0, 1, 2 per edge) to (1,0), (1,1), (2,1).
inline EdgeColoring from_3_edge_coloring(const CubicGraph& g, const std::vector<int>& classes) {
  if (static_cast<int>(classes.size()) != g.size())
    throw Error(Errc::NotProper3Coloring, "class vector has wrong length");
  for (int k : classes)
    if (k < 0 || k > 2) throw Error(Errc::NotProper3Coloring, "class out of range");
  for (Vertex v = 0; v < g.order(); ++v) {
    auto inc = g.incident(v);
    int a = classes[static_cast<std::size_t>(inc[0])], b = classes[static_cast<std::size_t>(inc[1])],
        d = classes[static_cast<std::size_t>(inc[2])];
    if (a == b || a == d || b == d)
      throw Error(Errc::NotProper3Coloring, "vertex " + std::to_string(v) + " sees a repeated class");
  }
  static constexpr GroupElement map[3] = {GroupElement(1, 0), GroupElement(1, 1), GroupElement(2, 1)};
  EdgeColoring c(g.size());
  for (EdgeId e = 0; e < g.size(); ++e) c[e] = map[classes[static_cast<std::size_t>(e)]];
  return c;
}

/// Builds the coloring of a 3-even structure: y marks F, x is 0 on M,
/// 2 on the F-paths and alternates 1/3 on loops.
inline EdgeColoring construct(const CubicGraph& g, const TwoFactor& f, const MatchingInF& m, const FMatching& fm,
                              const FComplement& fc) {
  std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
  m.edges.for_each([&](EdgeId e) {
    covered[static_cast<std::size_t>(g.edge(e).u)] = 1;
    covered[static_cast<std::size_t>(g.edge(e).v)] = 1;
  });
  auto is_three = [&](Vertex v) { return !covered[static_cast<std::size_t>(v)]; };

  std::vector<int> x(static_cast<std::size_t>(g.size()), -1);
  auto assign = [&](EdgeId e, int value) {
    if (x[static_cast<std::size_t>(e)] != -1)
      throw Error(Errc::MalformedStructure, "edge " + std::to_string(e) + " belongs to two structures");
    x[static_cast<std::size_t>(e)] = value;
  };
  m.edges.for_each([&](EdgeId e) { assign(e, 0); });
  fm.edge_set.for_each([&](EdgeId e) { assign(e, 2); });

  for (const Loop& l : fc.loops) {
    const int len = static_cast<int>(l.vertices.size());
    if (len < 2 || static_cast<int>(l.edges.size()) != len) throw Error(Errc::MalformedStructure, "malformed loop");
    int threes = 0;
    int start = -1;
    for (int k = 0; k < len; ++k) {
      Vertex v = l.vertices[static_cast<std::size_t>(k)];
      if (!is_three(v)) continue;
      ++threes;
      if (start == -1 || v < l.vertices[static_cast<std::size_t>(start)]) start = k;
    }
    if (threes % 2 != 0) throw Error(Errc::NotThreeEven, "loop has " + std::to_string(threes) + " 3-vertices");
    if (start == -1)
      start = static_cast<int>(std::min_element(l.vertices.begin(), l.vertices.end()) - l.vertices.begin());
    auto at = [&](int k) { return l.vertices[static_cast<std::size_t>(((k % len) + len) % len)]; };
    const int dir = at(start + 1) < at(start - 1) ? 1 : -1;
    int value = 1;
    for (int step = 0; step < len; ++step) {
      int p = start + dir * step;
      // edges[k] joins vertices[k] and vertices[k + 1]
      int ei = dir == 1 ? ((p % len) + len) % len : (((p - 1) % len) + len) % len;
      assign(l.edges[static_cast<std::size_t>(ei)], value);
      if (!is_three(at(p + dir))) value = 4 - value;
    }
  }

  EdgeColoring c(g.size());
  for (EdgeId e = 0; e < g.size(); ++e) {
    if (x[static_cast<std::size_t>(e)] == -1)
      throw Error(Errc::MalformedStructure, "edge " + std::to_string(e) + " is not covered by M, paths or loops");
    c[e] = GroupElement(x[static_cast<std::size_t>(e)], f.edge_set.contains(e) ? 1 : 0);
  }
  if (!verify(g, c).all()) throw Error(Errc::InvalidColoring, "constructed coloring failed verification");
  return c;
}

/// Structures witnessing colorability.
struct Structures {
  TwoFactor f;
  MatchingInF m;
  ReducedGraph h;
  FMatching fm;
  FComplement fc;
};

/// Reads (F, M, P, L) back off a verified coloring.
inline Structures extract(const CubicGraph& g, const EdgeColoring& c) {
  if (!verify(g, c).all()) throw Error(Errc::InvalidColoring, "coloring does not verify");
  EdgeSet y0 = c.y_class(0);
  if (!is_perfect_matching(g, y0)) throw Error(Errc::InvalidColoring, "Y0 is not a perfect matching");
  Structures s;
  s.f = two_factor(g, y0);
  EdgeSet x0 = c.x_class(0);
  if (!x0.is_subset_of(s.f.edge_set) || !is_matching(g, x0))
    throw Error(Errc::InvalidColoring, "X0 is not a matching in F");
  s.m = make_matching_in_f(g, s.f, x0);
  s.h = reduce(g, s.f, s.m);
  try {
    s.fm = f_matching_from_edges(g, s.h, c.x_class(2));
    s.fc = f_complement(g, s.h, s.fm);
  } catch (const Error& e) {
    throw Error(Errc::InvalidColoring, std::string("X2 is not an F-matching: ") + e.what());
  }
  if (!s.fc.three_even()) throw Error(Errc::InvalidColoring, "extracted F-complement is not 3-even");
  return s;
}

}  // namespace z4z2
