#pragma once

#include "factor.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace z4z2 {

/// A matching inside the 2-factor F.
struct MatchingInF {
  EdgeSet edges;
  /// Covers every vertex except exactly one per odd cycle of F.
  bool maximum = false;
};

inline bool is_maximum_in(const TwoFactor& f, const CubicGraph& g, const EdgeSet& m) {
  std::vector<int> uncovered(f.cycles.size(), 0);
  std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
  m.for_each([&](EdgeId e) {
    covered[static_cast<std::size_t>(g.edge(e).u)] = 1;
    covered[static_cast<std::size_t>(g.edge(e).v)] = 1;
  });
  for (Vertex v = 0; v < g.order(); ++v)
    if (!covered[static_cast<std::size_t>(v)]) ++uncovered[static_cast<std::size_t>(f.cycle_of[static_cast<std::size_t>(v)])];
  for (int c = 0; c < f.cycle_count(); ++c)
    if (uncovered[static_cast<std::size_t>(c)] != (f.is_odd(c) ? 1 : 0)) return false;
  return true;
}

inline MatchingInF make_matching_in_f(const CubicGraph& g, const TwoFactor& f, EdgeSet edges) {
  if (!edges.is_subset_of(f.edge_set)) throw Error(Errc::NotAMatching, "matching uses edges outside F");
  if (!is_matching(g, edges)) throw Error(Errc::NotAMatching, "edges share a vertex");
  bool maximum = is_maximum_in(f, g, edges);
  return {std::move(edges), maximum};
}

/// The perfect matching of an odd cycle minus the vertex at `skip_position`.
inline EdgeSet odd_cycle_matching(const TwoFactor& f, int cycle, int skip_position) {
  const auto& ce = f.cycle_edges[static_cast<std::size_t>(cycle)];
  const int len = static_cast<int>(ce.size());
  EdgeSet out(f.edge_set.universe());
  for (int t = 0; t < (len - 1) / 2; ++t) out.insert(ce[static_cast<std::size_t>((skip_position + 1 + 2 * t) % len)]);
  return out;
}

/// One of the two perfect matchings of an even cycle (`phase` 0 or 1).
inline EdgeSet even_cycle_matching(const TwoFactor& f, int cycle, int phase) {
  const auto& ce = f.cycle_edges[static_cast<std::size_t>(cycle)];
  EdgeSet out(f.edge_set.universe());
  for (std::size_t k = static_cast<std::size_t>(phase); k < ce.size(); k += 2) out.insert(ce[k]);
  return out;
}

/// Visits every maximum matching of F. Odd cycles choose their uncovered
/// vertex by cycle position, even cycles choose a phase; the last cycle
/// varies fastest. `fn` returns false to stop.
template <class Fn>
void for_each_maximum_matching(const CubicGraph& g, const TwoFactor& f, Fn&& fn) {
  const int k = f.cycle_count();
  std::vector<int> choice(static_cast<std::size_t>(k), 0);
  auto radix = [&](int c) {
    return f.is_odd(c) ? static_cast<int>(f.cycles[static_cast<std::size_t>(c)].size()) : 2;
  };
  for (;;) {
    EdgeSet m = g.no_edges();
    for (int c = 0; c < k; ++c)
      m |= f.is_odd(c) ? odd_cycle_matching(f, c, choice[static_cast<std::size_t>(c)])
                       : even_cycle_matching(f, c, choice[static_cast<std::size_t>(c)]);
    if (!fn(MatchingInF{std::move(m), true})) return;
    int c = k - 1;
    while (c >= 0 && ++choice[static_cast<std::size_t>(c)] == radix(c)) choice[static_cast<std::size_t>(c--)] = 0;
    if (c < 0) return;
  }
}

/// H = G - M with its vertices split into 2-vertices and 3-vertices.
struct ReducedGraph {
  EdgeSet f_edges;
  EdgeSet odd_cycle_edges;
  EdgeSet matching;
  EdgeSet edges;
  std::vector<char> three;
  std::vector<Vertex> three_vertices;
  std::vector<std::vector<EdgeId>> incident;
  std::vector<std::vector<Vertex>> components;
  std::vector<int> component_of;

  bool is_three(Vertex v) const { return three[static_cast<std::size_t>(v)] != 0; }
};

inline ReducedGraph reduce(const CubicGraph& g, const TwoFactor& f, const MatchingInF& m) {
  if (!m.edges.is_subset_of(f.edge_set) || !is_matching(g, m.edges))
    throw Error(Errc::NotAMatching, "M is not a matching in F");
  const auto n = static_cast<std::size_t>(g.order());
  ReducedGraph h;
  h.f_edges = f.edge_set;
  h.odd_cycle_edges = f.odd_edges();
  h.matching = m.edges;
  h.edges = g.all_edges() - m.edges;
  h.three.assign(n, 1);
  m.edges.for_each([&](EdgeId e) {
    h.three[static_cast<std::size_t>(g.edge(e).u)] = 0;
    h.three[static_cast<std::size_t>(g.edge(e).v)] = 0;
  });
  h.incident.resize(n);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (h.is_three(v)) h.three_vertices.push_back(v);
    for (EdgeId e : g.incident(v))
      if (h.edges.contains(e)) h.incident[static_cast<std::size_t>(v)].push_back(e);
  }
  h.component_of.assign(n, -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (h.component_of[static_cast<std::size_t>(s)] != -1) continue;
    const int id = static_cast<int>(h.components.size());
    std::vector<Vertex> comp, stack{s};
    h.component_of[static_cast<std::size_t>(s)] = id;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (EdgeId e : h.incident[static_cast<std::size_t>(v)]) {
        Vertex w = g.other(e, v);
        if (h.component_of[static_cast<std::size_t>(w)] == -1) {
          h.component_of[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    h.components.push_back(std::move(comp));
  }
  return h;
}

/// A path of H given as its vertex and edge sequences (`edges[k]` joins
/// `vertices[k]` and `vertices[k + 1]`).
struct FPath {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;

  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  friend bool operator==(const FPath&, const FPath&) = default;
};

/// Vertex-disjoint F-paths whose end-vertices are exactly the 3-vertices of H.
struct FMatching {
  std::vector<FPath> paths;
  EdgeSet edge_set;
  /// Only end-edges of the paths lie on odd cycles of F.
  bool simple = false;
};

/// Walk from `s` along `first`, passing 2-vertices, up to the next 3-vertex
/// (possibly `s` itself).
inline FPath walk_thread(const CubicGraph& g, const ReducedGraph& h, Vertex s, EdgeId first) {
  FPath t;
  t.vertices.push_back(s);
  EdgeId e = first;
  Vertex at = s;
  for (;;) {
    t.edges.push_back(e);
    at = g.other(e, at);
    t.vertices.push_back(at);
    if (h.is_three(at)) return t;
    const auto& inc = h.incident[static_cast<std::size_t>(at)];
    e = inc[0] == e ? inc[1] : inc[0];
  }
}

inline bool interior_avoids_odd_cycles(const ReducedGraph& h, const FPath& p) {
  for (std::size_t k = 1; k + 1 < p.edges.size(); ++k)
    if (h.odd_cycle_edges.contains(p.edges[k])) return false;
  return true;
}

inline FMatching make_f_matching(const CubicGraph& g, const ReducedGraph& h, std::vector<FPath> paths) {
  FMatching fm;
  fm.edge_set = g.no_edges();
  fm.simple = true;
  for (const FPath& p : paths) {
    for (EdgeId e : p.edges) fm.edge_set.insert(e);
    fm.simple = fm.simple && interior_avoids_odd_cycles(h, p);
  }
  fm.paths = std::move(paths);
  return fm;
}

/// Checks every F-matching invariant; throws MalformedStructure naming the first breach.
inline void validate_f_matching(const CubicGraph& g, const ReducedGraph& h, const FMatching& fm) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> used(n, 0);
  std::vector<int> ends(n, 0);
  for (const FPath& p : fm.paths) {
    if (p.vertices.size() < 2 || p.edges.size() + 1 != p.vertices.size())
      throw Error(Errc::MalformedStructure, "degenerate F-path");
    for (std::size_t k = 0; k < p.edges.size(); ++k) {
      const Edge& ed = g.edge(p.edges[k]);
      Vertex a = p.vertices[k], b = p.vertices[k + 1];
      if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)))
        throw Error(Errc::MalformedStructure, "path edge does not join consecutive vertices");
      if (!h.edges.contains(p.edges[k])) throw Error(Errc::MalformedStructure, "path uses an edge outside H");
    }
    for (Vertex v : p.vertices)
      if (used[static_cast<std::size_t>(v)]++) throw Error(Errc::MalformedStructure, "F-paths are not vertex-disjoint");
    if (!h.is_three(p.front()) || !h.is_three(p.back()))
      throw Error(Errc::MalformedStructure, "F-path end-vertex is not a 3-vertex");
    for (std::size_t k = 1; k + 1 < p.vertices.size(); ++k)
      if (h.is_three(p.vertices[k])) throw Error(Errc::MalformedStructure, "F-path interior contains a 3-vertex");
    if (!h.f_edges.contains(p.edges.front()) || !h.f_edges.contains(p.edges.back()))
      throw Error(Errc::MalformedStructure, "F-path end-edge is not in F");
    ++ends[static_cast<std::size_t>(p.front())];
    ++ends[static_cast<std::size_t>(p.back())];
  }
  for (Vertex v : h.three_vertices)
    if (ends[static_cast<std::size_t>(v)] != 1)
      throw Error(Errc::MalformedStructure, "3-vertex " + std::to_string(v) + " is not covered exactly once");
}

enum class SearchStatus { Found, Absent, BudgetExhausted };

inline constexpr std::size_t kDefaultSearchNodes = 2'000'000;

struct FMatchingSearch {
  SearchStatus status = SearchStatus::Absent;
  std::size_t nodes = 0;
};

/// Exhaustive search over F-matchings. Grows paths from the lowest uncovered
/// 3-vertex, trying its F-edges in index order. `fn(const FMatching&)`
/// returns false to stop (status Found); running out of candidates gives
/// Absent, exceeding `node_budget` gives BudgetExhausted.
template <class Fn>
FMatchingSearch for_each_f_matching(const CubicGraph& g, const ReducedGraph& h, bool require_simple,
                                    std::size_t node_budget, Fn&& fn) {
  const auto n = static_cast<std::size_t>(g.order());
  // Each 3-vertex has at most two candidate F-paths, one per incident F-edge.
  std::vector<std::vector<FPath>> candidates(n);
  for (Vertex s : h.three_vertices) {
    for (EdgeId e : h.incident[static_cast<std::size_t>(s)]) {
      if (!h.f_edges.contains(e)) continue;
      FPath t = walk_thread(g, h, s, e);
      if (t.back() == s || !h.f_edges.contains(t.edges.back())) continue;
      if (require_simple && !interior_avoids_odd_cycles(h, t)) continue;
      candidates[static_cast<std::size_t>(s)].push_back(std::move(t));
    }
  }

  FMatchingSearch result;
  std::vector<char> covered(n, 0);
  std::vector<FPath> chosen;
  bool stop = false;

  std::function<void()> search = [&]() {
    if (stop) return;
    if (++result.nodes > node_budget) {
      result.status = SearchStatus::BudgetExhausted;
      stop = true;
      return;
    }
    auto it = std::find_if(h.three_vertices.begin(), h.three_vertices.end(),
                           [&](Vertex v) { return !covered[static_cast<std::size_t>(v)]; });
    if (it == h.three_vertices.end()) {
      if (!fn(make_f_matching(g, h, chosen))) {
        result.status = SearchStatus::Found;
        stop = true;
      }
      return;
    }
    Vertex s = *it;
    for (const FPath& p : candidates[static_cast<std::size_t>(s)]) {
      if (covered[static_cast<std::size_t>(p.back())]) continue;
      covered[static_cast<std::size_t>(s)] = covered[static_cast<std::size_t>(p.back())] = 1;
      chosen.push_back(p);
      search();
      chosen.pop_back();
      covered[static_cast<std::size_t>(s)] = covered[static_cast<std::size_t>(p.back())] = 0;
      if (stop) return;
    }
  };
  search();
  return result;
}

struct FMatchingResult {
  SearchStatus status = SearchStatus::Absent;
  std::optional<FMatching> matching;
  std::size_t nodes = 0;
};

inline FMatchingResult find_f_matching(const CubicGraph& g, const ReducedGraph& h, bool require_simple,
                                       std::size_t node_budget = kDefaultSearchNodes) {
  FMatchingResult out;
  FMatchingSearch s = for_each_f_matching(g, h, require_simple, node_budget, [&](const FMatching& fm) {
    out.matching = fm;
    return false;
  });
  out.status = s.status;
  out.nodes = s.nodes;
  return out;
}

/// Splits an edge set of H into paths between 3-vertices. Throws
/// MalformedStructure if the set is not a disjoint union of such paths.
inline FMatching f_matching_from_edges(const CubicGraph& g, const ReducedGraph& h, const EdgeSet& edges) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<std::vector<EdgeId>> inc(n);
  edges.for_each([&](EdgeId e) {
    inc[static_cast<std::size_t>(g.edge(e).u)].push_back(e);
    inc[static_cast<std::size_t>(g.edge(e).v)].push_back(e);
  });
  std::vector<char> done(n, 0);
  std::vector<FPath> paths;
  std::size_t used = 0;
  for (Vertex s : h.three_vertices) {
    if (done[static_cast<std::size_t>(s)]) continue;
    if (inc[static_cast<std::size_t>(s)].size() != 1)
      throw Error(Errc::MalformedStructure, "3-vertex " + std::to_string(s) + " is not the end of exactly one path");
    FPath p;
    p.vertices.push_back(s);
    Vertex at = s;
    EdgeId via = inc[static_cast<std::size_t>(s)][0];
    for (;;) {
      p.edges.push_back(via);
      at = g.other(via, at);
      p.vertices.push_back(at);
      if (p.edges.size() > edges.size()) throw Error(Errc::MalformedStructure, "path walk does not terminate");
      if (h.is_three(at)) break;
      const auto& i2 = inc[static_cast<std::size_t>(at)];
      if (i2.size() != 2) throw Error(Errc::MalformedStructure, "path breaks at vertex " + std::to_string(at));
      via = i2[0] == via ? i2[1] : i2[0];
    }
    if (inc[static_cast<std::size_t>(at)].size() != 1 || at == s)
      throw Error(Errc::MalformedStructure, "path end " + std::to_string(at) + " is not a clean 3-vertex end");
    done[static_cast<std::size_t>(s)] = done[static_cast<std::size_t>(at)] = 1;
    used += p.edges.size();
    paths.push_back(std::move(p));
  }
  if (used != edges.size()) throw Error(Errc::MalformedStructure, "edge set contains a cycle away from 3-vertices");
  FMatching fm = make_f_matching(g, h, std::move(paths));
  validate_f_matching(g, h, fm);
  return fm;
}

/// A cycle of the F-complement.
struct Loop {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;  // edges[k] joins vertices[k] and vertices[k + 1] (cyclically)
  int three_count = 0;

  bool three_even() const { return three_count % 2 == 0; }
  friend bool operator==(const Loop&, const Loop&) = default;
};

struct FComplement {
  std::vector<Loop> loops;
  EdgeSet edge_set;
  std::vector<int> loop_of;  // vertex -> loop index, -1 if on no loop

  bool three_even() const {
    return std::all_of(loops.begin(), loops.end(), [](const Loop& l) { return l.three_even(); });
  }
  int three_odd_count() const {
    return static_cast<int>(std::count_if(loops.begin(), loops.end(), [](const Loop& l) { return !l.three_even(); }));
  }
};

/// Rotates and orients a cycle of H: start at its lowest 3-vertex (lowest
/// vertex if it has none), first edge toward the lower-indexed neighbour.
inline Loop canonical_loop(const CubicGraph& g, const ReducedGraph& h, std::vector<Vertex> cyc) {
  const std::size_t len = cyc.size();
  std::size_t start = 0;
  bool have_three = false;
  for (std::size_t k = 0; k < len; ++k) {
    bool t = h.is_three(cyc[k]);
    if ((t && !have_three) || (t == have_three && cyc[k] < cyc[start])) {
      start = k;
      have_three = have_three || t;
    }
  }
  std::rotate(cyc.begin(), cyc.begin() + static_cast<std::ptrdiff_t>(start), cyc.end());
  if (cyc[len - 1] < cyc[1]) std::reverse(cyc.begin() + 1, cyc.end());
  Loop l;
  l.vertices = std::move(cyc);
  for (std::size_t k = 0; k < len; ++k) {
    auto e = g.edge_between(l.vertices[k], l.vertices[(k + 1) % len]);
    if (!e) throw Error(Errc::MalformedStructure, "loop vertices are not adjacent");
    l.edges.push_back(*e);
    l.three_count += h.is_three(l.vertices[k]) ? 1 : 0;
  }
  return l;
}

/// Decomposes H - E(P) into loops and records their 3-parity.
inline FComplement f_complement(const CubicGraph& g, const ReducedGraph& h, const FMatching& fm) {
  validate_f_matching(g, h, fm);
  const auto n = static_cast<std::size_t>(g.order());
  EdgeSet rest = h.edges - fm.edge_set;
  std::vector<std::vector<EdgeId>> inc(n);
  rest.for_each([&](EdgeId e) {
    inc[static_cast<std::size_t>(g.edge(e).u)].push_back(e);
    inc[static_cast<std::size_t>(g.edge(e).v)].push_back(e);
  });
  for (Vertex v = 0; v < g.order(); ++v) {
    std::size_t d = inc[static_cast<std::size_t>(v)].size();
    if (d != 0 && d != 2)
      throw Error(Errc::MalformedStructure, "vertex " + std::to_string(v) + " has degree " + std::to_string(d) +
                                                " in the F-complement");
    if (h.is_three(v) && d != 2) throw Error(Errc::MalformedStructure, "3-vertex off every loop");
  }
  FComplement fc;
  fc.edge_set = rest;
  fc.loop_of.assign(n, -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (inc[static_cast<std::size_t>(s)].empty() || fc.loop_of[static_cast<std::size_t>(s)] != -1) continue;
    std::vector<Vertex> cyc;
    Vertex at = s;
    EdgeId via = inc[static_cast<std::size_t>(s)][0];
    do {
      fc.loop_of[static_cast<std::size_t>(at)] = static_cast<int>(fc.loops.size());
      cyc.push_back(at);
      at = g.other(via, at);
      const auto& i2 = inc[static_cast<std::size_t>(at)];
      via = i2[0] == via ? i2[1] : i2[0];
    } while (at != s);
    Loop l = canonical_loop(g, h, std::move(cyc));
    if (l.vertices.size() % 2 != 0) throw Error(Errc::MalformedStructure, "odd loop");
    for (std::size_t k = 0; k < l.edges.size(); ++k)
      if (h.f_edges.contains(l.edges[k]) == h.f_edges.contains(l.edges[(k + 1) % l.edges.size()]))
        throw Error(Errc::MalformedStructure, "loop does not alternate F and non-F edges");
    fc.loops.push_back(std::move(l));
  }
  return fc;
}

enum class MainComponentKind { ThetaGraph, KayakPaddle, Other };

struct MainComponent {
  MainComponentKind kind = MainComponentKind::Other;
  Vertex r1 = -1, r2 = -1;
  /// Threads between 3-vertices: for a theta graph the three r1-r2 paths;
  /// for a kayak paddle the handle (r1 to r2) then the r1 and r2 blades.
  std::vector<FPath> threads;
};

/// Shape of the H-component holding the two 3-vertices.
inline MainComponent classify_main_component(const CubicGraph& g, const ReducedGraph& h) {
  if (h.three_vertices.size() != 2)
    throw Error(Errc::WrongVertexCount, "expected two 3-vertices, found " + std::to_string(h.three_vertices.size()));
  MainComponent mc;
  mc.r1 = h.three_vertices[0];
  mc.r2 = h.three_vertices[1];
  std::vector<FPath> handles, blades1, blades2;
  EdgeSet seen = g.no_edges();
  for (Vertex r : {mc.r1, mc.r2}) {
    for (EdgeId e : h.incident[static_cast<std::size_t>(r)]) {
      if (seen.contains(e)) continue;
      FPath t = walk_thread(g, h, r, e);
      for (EdgeId x : t.edges) seen.insert(x);
      if (t.back() != r)
        handles.push_back(std::move(t));
      else
        (r == mc.r1 ? blades1 : blades2).push_back(std::move(t));
    }
  }
  if (handles.size() == 3) {
    mc.kind = MainComponentKind::ThetaGraph;
    mc.threads = std::move(handles);
  } else if (handles.size() == 1 && blades1.size() == 1 && blades2.size() == 1) {
    mc.kind = MainComponentKind::KayakPaddle;
    mc.threads = {handles[0], blades1[0], blades2[0]};
  }
  return mc;
}

}  // namespace z4z2
