#pragma once

#include "structures.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace z4z2 {

/// An edge of K_odd together with the path of H_odd realizing it.
struct KOddEdge {
  int a = -1, b = -1;       // K_odd vertices, a <= b
  Vertex ca = -1, cb = -1;  // path ends on the odd cycles a and b
  FPath path;               // from ca to cb; interior vertices lie on even cycles
};

/// Odd cycles of F contracted, with the 2-vertex chains of H_odd = G - M_even between them.
struct OddCycleIncidenceGraph {
  std::vector<int> cycles;           // K_odd vertex -> odd cycle index in F
  std::vector<int> vertex_of_cycle;  // F cycle index -> K_odd vertex, -1 for even cycles
  std::vector<KOddEdge> edges;       // sorted by (a, b, realizing edge list)
  EdgeSet m_even;

  int vertex_count() const { return static_cast<int>(cycles.size()); }
};

/// Perfect matching of F_even selected by one phase (0 or 1) per even cycle.
inline EdgeSet even_matching_from_phases(const TwoFactor& f, const std::vector<int>& phases) {
  EdgeSet m(f.edge_set.universe());
  auto even = f.even_cycles();
  for (std::size_t k = 0; k < even.size(); ++k) m |= even_cycle_matching(f, even[k], phases.at(k));
  return m;
}

/// Visits every perfect matching of F_even (two per even cycle, last cycle
/// fastest). `fn(EdgeSet)` returns false to stop.
template <class Fn>
void for_each_even_matching(const TwoFactor& f, Fn&& fn) {
  const std::size_t k = f.even_cycles().size();
  std::vector<int> phases(k, 0);
  for (;;) {
    if (!fn(even_matching_from_phases(f, phases))) return;
    std::size_t i = k;
    while (i > 0 && ++phases[i - 1] == 2) phases[--i] = 0;
    if (i == 0) return;
  }
}

inline OddCycleIncidenceGraph build_k_odd(const CubicGraph& g, const TwoFactor& f, const EdgeSet& m_even) {
  const auto n = static_cast<std::size_t>(g.order());
  EdgeSet even = f.even_edges();
  if (!m_even.is_subset_of(even) || !is_matching(g, m_even))
    throw Error(Errc::NotPerfectOnEven, "M_even is not a matching inside the even cycles");
  std::size_t even_vertices = 0;
  for (int c : f.even_cycles()) even_vertices += f.cycles[static_cast<std::size_t>(c)].size();
  if (2 * m_even.size() != even_vertices) throw Error(Errc::NotPerfectOnEven, "M_even leaves an even-cycle vertex uncovered");

  OddCycleIncidenceGraph k;
  k.m_even = m_even;
  k.vertex_of_cycle.assign(f.cycles.size(), -1);
  for (int c : f.odd_cycles()) {
    k.vertex_of_cycle[static_cast<std::size_t>(c)] = static_cast<int>(k.cycles.size());
    k.cycles.push_back(c);
  }
  auto on_odd = [&](Vertex v) { return f.is_odd(f.cycle_of[static_cast<std::size_t>(v)]); };
  auto non_f_edge = [&](Vertex v) {
    for (EdgeId e : g.incident(v))
      if (!f.edge_set.contains(e)) return e;
    throw Error(Errc::MalformedStructure, "vertex without a non-F edge");
  };

  std::vector<char> seen(n, 0);
  for (Vertex c = 0; c < g.order(); ++c) {
    if (!on_odd(c) || seen[static_cast<std::size_t>(c)]) continue;
    FPath p;
    p.vertices.push_back(c);
    Vertex at = c;
    EdgeId via = non_f_edge(c);
    for (;;) {
      p.edges.push_back(via);
      at = g.other(via, at);
      p.vertices.push_back(at);
      if (on_odd(at)) break;
      // at is a 2-vertex of H_odd: continue on whichever of its two H_odd edges we did not arrive by
      for (EdgeId e : g.incident(at))
        if (e != via && !m_even.contains(e)) {
          via = e;
          break;
        }
    }
    seen[static_cast<std::size_t>(c)] = seen[static_cast<std::size_t>(at)] = 1;
    KOddEdge ke;
    ke.a = k.vertex_of_cycle[static_cast<std::size_t>(f.cycle_of[static_cast<std::size_t>(c)])];
    ke.b = k.vertex_of_cycle[static_cast<std::size_t>(f.cycle_of[static_cast<std::size_t>(at)])];
    ke.ca = c;
    ke.cb = at;
    if (ke.a > ke.b || (ke.a == ke.b && ke.ca > ke.cb)) {
      std::swap(ke.a, ke.b);
      std::swap(ke.ca, ke.cb);
      std::reverse(p.vertices.begin(), p.vertices.end());
      std::reverse(p.edges.begin(), p.edges.end());
    }
    ke.path = std::move(p);
    k.edges.push_back(std::move(ke));
  }
  std::sort(k.edges.begin(), k.edges.end(), [](const KOddEdge& x, const KOddEdge& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.path.edges < y.path.edges;
  });
  return k;
}

/// Visits the perfect matchings of K_odd (as lists of edge indices) in
/// canonical order: the lowest unmatched vertex tries its edges in order, so
/// among parallel edges the lexicographically least realizing path comes
/// first. Loops never take part. `fn` returns false to stop.
template <class Fn>
void for_each_k_perfect_matching(const OddCycleIncidenceGraph& k, Fn&& fn) {
  const int nv = k.vertex_count();
  std::vector<char> matched(static_cast<std::size_t>(nv), 0);
  std::vector<int> chosen;
  bool stop = false;
  auto rec = [&](auto&& self) -> void {
    int v = 0;
    while (v < nv && matched[static_cast<std::size_t>(v)]) ++v;
    if (v == nv) {
      if (!fn(chosen)) stop = true;
      return;
    }
    for (int i = 0; i < static_cast<int>(k.edges.size()) && !stop; ++i) {
      const KOddEdge& e = k.edges[static_cast<std::size_t>(i)];
      if (e.a == e.b || (e.a != v && e.b != v)) continue;
      int w = e.a == v ? e.b : e.a;
      if (matched[static_cast<std::size_t>(w)]) continue;
      matched[static_cast<std::size_t>(v)] = matched[static_cast<std::size_t>(w)] = 1;
      chosen.push_back(i);
      self(self);
      chosen.pop_back();
      matched[static_cast<std::size_t>(v)] = matched[static_cast<std::size_t>(w)] = 0;
    }
  };
  rec(rec);
}

/// A maximum matching of F with a simple F-matching in H = G - M.
struct DerivedMatching {
  MatchingInF m;
  ReducedGraph h;
  FMatching fm;
  std::vector<int> k_matching;  // indices into OddCycleIncidenceGraph::edges
};

/// Expands one perfect matching of K_odd: u_i is the lower-indexed cycle
/// neighbour of c_i, or the other one if that collides with a path end.
inline std::optional<DerivedMatching> derive_from_k_matching(const CubicGraph& g, const TwoFactor& f,
                                                             const OddCycleIncidenceGraph& k,
                                                             const std::vector<int>& k_matching) {
  std::vector<char> is_end(static_cast<std::size_t>(g.order()), 0);
  for (int i : k_matching) {
    is_end[static_cast<std::size_t>(k.edges[static_cast<std::size_t>(i)].ca)] = 1;
    is_end[static_cast<std::size_t>(k.edges[static_cast<std::size_t>(i)].cb)] = 1;
  }
  auto pick_u = [&](Vertex c) -> std::optional<Vertex> {
    int cyc = f.cycle_of[static_cast<std::size_t>(c)];
    const auto& cv = f.cycles[static_cast<std::size_t>(cyc)];
    const int len = static_cast<int>(cv.size());
    int p = f.position[static_cast<std::size_t>(c)];
    Vertex n1 = cv[static_cast<std::size_t>((p + 1) % len)], n2 = cv[static_cast<std::size_t>((p + len - 1) % len)];
    Vertex lo = std::min(n1, n2), hi = std::max(n1, n2);
    if (!is_end[static_cast<std::size_t>(lo)]) return lo;
    if (!is_end[static_cast<std::size_t>(hi)]) return hi;
    return std::nullopt;
  };

  EdgeSet m = k.m_even;
  std::vector<FPath> paths;
  std::vector<char> cycle_done(f.cycles.size(), 0);
  for (int i : k_matching) {
    const KOddEdge& ke = k.edges[static_cast<std::size_t>(i)];
    auto ua = pick_u(ke.ca), ub = pick_u(ke.cb);
    if (!ua || !ub) return std::nullopt;
    for (Vertex u : {*ua, *ub}) {
      int cyc = f.cycle_of[static_cast<std::size_t>(u)];
      if (cycle_done[static_cast<std::size_t>(cyc)]++) return std::nullopt;  // two path ends on one cycle
      m |= odd_cycle_matching(f, cyc, f.position[static_cast<std::size_t>(u)]);
    }
    FPath p;
    p.vertices.push_back(*ua);
    p.edges.push_back(*g.edge_between(*ua, ke.ca));
    p.vertices.insert(p.vertices.end(), ke.path.vertices.begin(), ke.path.vertices.end());
    p.edges.insert(p.edges.end(), ke.path.edges.begin(), ke.path.edges.end());
    p.edges.push_back(*g.edge_between(ke.cb, *ub));
    p.vertices.push_back(*ub);
    paths.push_back(std::move(p));
  }
  DerivedMatching out;
  out.m = make_matching_in_f(g, f, m);
  out.h = reduce(g, f, out.m);
  out.fm = make_f_matching(g, out.h, std::move(paths));
  validate_f_matching(g, out.h, out.fm);
  if (!out.fm.simple) throw Error(Errc::MalformedStructure, "derived F-matching is not simple");
  out.k_matching = k_matching;
  return out;
}

/// First derived matching over the perfect matchings of K_odd, or nullopt
/// when K_odd has none.
inline std::optional<DerivedMatching> derive_matching(const CubicGraph& g, const TwoFactor& f,
                                                      const OddCycleIncidenceGraph& k) {
  std::optional<DerivedMatching> out;
  for_each_k_perfect_matching(k, [&](const std::vector<int>& mk) {
    out = derive_from_k_matching(g, f, k, mk);
    return !out.has_value();
  });
  return out;
}

}  // namespace z4z2
