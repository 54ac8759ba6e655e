#pragma once

#include "coloring.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace z4z2 {

/// A component of F - E_P, where E_P holds the end-edges of the F-paths.
struct FComponent {
  bool cycle = false;
  std::vector<Vertex> vertices;  // u0 ... ug (u0 not repeated for cycles)
  std::vector<EdgeId> edges;     // edges[k] joins vertices[k] and vertices[k + 1], cyclically for cycles
};

struct ComponentFamily {
  std::vector<FComponent> components;
  std::vector<int> component_of_edge;  // -1 off F - E_P
  std::vector<int> position_of_edge;
  EdgeSet end_edges;
};

/// An edge of B between a component and a loop or F-path.
struct BEdge {
  int component = -1;
  int side = -1;  // loops are 0 .. L-1, F-paths L .. L+P-1
  std::vector<EdgeId> shared;
  EdgeId selected = -1;  // lowest shared edge index
};

/// The bipartite loop-cycle-incidence graph B.
struct LoopCycleIncidenceGraph {
  int component_count = 0;
  int loop_count = 0;
  int path_count = 0;
  std::vector<BEdge> edges;  // sorted by (component, side)
  std::vector<std::vector<int>> at_component;
  std::vector<std::vector<int>> at_side;

  bool is_path_side(int side) const { return side >= loop_count; }
};

struct IncidenceData {
  ComponentFamily comps;
  LoopCycleIncidenceGraph b;
};

inline IncidenceData build_B(const CubicGraph& g, const TwoFactor& f, const MatchingInF& m, const FMatching& fm,
                             const FComplement& fc) {
  const auto n = static_cast<std::size_t>(g.order());
  IncidenceData out;
  ComponentFamily& cf = out.comps;
  cf.end_edges = g.no_edges();
  for (const FPath& p : fm.paths) {
    cf.end_edges.insert(p.edges.front());
    cf.end_edges.insert(p.edges.back());
  }
  EdgeSet rest = f.edge_set - cf.end_edges;
  std::vector<std::vector<EdgeId>> inc(n);
  rest.for_each([&](EdgeId e) {
    inc[static_cast<std::size_t>(g.edge(e).u)].push_back(e);
    inc[static_cast<std::size_t>(g.edge(e).v)].push_back(e);
  });
  cf.component_of_edge.assign(static_cast<std::size_t>(g.size()), -1);
  cf.position_of_edge.assign(static_cast<std::size_t>(g.size()), -1);
  std::vector<char> seen(n, 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    if (inc[static_cast<std::size_t>(s)].empty())
      throw Error(Errc::MalformedStructure, "vertex " + std::to_string(s) + " is isolated in F - E_P");
    std::vector<Vertex> members, stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (EdgeId e : inc[static_cast<std::size_t>(v)]) {
        Vertex w = g.other(e, v);
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    FComponent c;
    Vertex start = -1;
    for (Vertex v : members)
      if (inc[static_cast<std::size_t>(v)].size() == 1 && (start == -1 || v < start)) start = v;
    c.cycle = start == -1;
    EdgeId via;
    if (c.cycle) {
      start = *std::min_element(members.begin(), members.end());
      const auto& i0 = inc[static_cast<std::size_t>(start)];
      via = g.other(i0[0], start) < g.other(i0[1], start) ? i0[0] : i0[1];
    } else {
      via = inc[static_cast<std::size_t>(start)][0];
    }
    Vertex at = start;
    c.vertices.push_back(start);
    for (;;) {
      c.edges.push_back(via);
      at = g.other(via, at);
      if (at == start) break;
      c.vertices.push_back(at);
      const auto& i2 = inc[static_cast<std::size_t>(at)];
      if (i2.size() == 1) break;
      via = i2[0] == via ? i2[1] : i2[0];
    }
    const int id = static_cast<int>(cf.components.size());
    for (std::size_t k = 0; k < c.edges.size(); ++k) {
      cf.component_of_edge[static_cast<std::size_t>(c.edges[k])] = id;
      cf.position_of_edge[static_cast<std::size_t>(c.edges[k])] = static_cast<int>(k);
      if (k > 0 && m.edges.contains(c.edges[k]) == m.edges.contains(c.edges[k - 1]))
        throw Error(Errc::MalformedStructure, "component of F - E_P does not alternate M and non-M edges");
    }
    cf.components.push_back(std::move(c));
  }

  LoopCycleIncidenceGraph& b = out.b;
  b.component_count = static_cast<int>(cf.components.size());
  b.loop_count = static_cast<int>(fc.loops.size());
  b.path_count = static_cast<int>(fm.paths.size());
  std::vector<int> side_of_edge(static_cast<std::size_t>(g.size()), -1);
  for (int i = 0; i < b.loop_count; ++i)
    for (EdgeId e : fc.loops[static_cast<std::size_t>(i)].edges) side_of_edge[static_cast<std::size_t>(e)] = i;
  for (int i = 0; i < b.path_count; ++i)
    for (EdgeId e : fm.paths[static_cast<std::size_t>(i)].edges)
      side_of_edge[static_cast<std::size_t>(e)] = b.loop_count + i;
  std::map<std::pair<int, int>, std::vector<EdgeId>> shared;
  rest.for_each([&](EdgeId e) {
    if (m.edges.contains(e)) return;
    int side = side_of_edge[static_cast<std::size_t>(e)];
    if (side == -1) throw Error(Errc::MalformedStructure, "non-M edge of F is on no loop or path");
    shared[{cf.component_of_edge[static_cast<std::size_t>(e)], side}].push_back(e);
  });
  b.at_component.resize(static_cast<std::size_t>(b.component_count));
  b.at_side.resize(static_cast<std::size_t>(b.loop_count + b.path_count));
  for (auto& [key, list] : shared) {
    BEdge be;
    be.component = key.first;
    be.side = key.second;
    be.shared = std::move(list);
    be.selected = be.shared.front();
    const int id = static_cast<int>(b.edges.size());
    b.at_component[static_cast<std::size_t>(be.component)].push_back(id);
    b.at_side[static_cast<std::size_t>(be.side)].push_back(id);
    b.edges.push_back(std::move(be));
  }
  return out;
}

/// Result of testing the correction hypothesis on B - P.
struct Hypothesis {
  bool feasible = true;
  std::vector<std::pair<int, int>> pairs;  // 3-odd loops paired within a component of B - P
  std::vector<std::vector<int>> routes;    // B-edge ids joining each pair, avoiding F-path vertices
  std::vector<int> offending_loops;        // 3-odd loops of a component with odd count
};

inline Hypothesis check_hypothesis(const LoopCycleIncidenceGraph& b, const FComplement& fc) {
  Hypothesis out;
  // B - P vertices: components 0 .. C-1, loops C .. C+L-1.
  const int nc = b.component_count, nl = b.loop_count;
  auto neighbours = [&](int node) {
    std::vector<std::pair<int, int>> nb;  // (node, B-edge)
    if (node < nc) {
      for (int id : b.at_component[static_cast<std::size_t>(node)])
        if (!b.is_path_side(b.edges[static_cast<std::size_t>(id)].side))
          nb.push_back({nc + b.edges[static_cast<std::size_t>(id)].side, id});
    } else {
      for (int id : b.at_side[static_cast<std::size_t>(node - nc)])
        nb.push_back({b.edges[static_cast<std::size_t>(id)].component, id});
    }
    std::sort(nb.begin(), nb.end());
    return nb;
  };

  std::vector<int> comp(static_cast<std::size_t>(nc + nl), -1);
  std::vector<std::vector<int>> odd_by_comp;
  for (int l = 0; l < nl; ++l) {
    if (comp[static_cast<std::size_t>(nc + l)] != -1) continue;
    const int id = static_cast<int>(odd_by_comp.size());
    odd_by_comp.emplace_back();
    std::deque<int> queue{nc + l};
    comp[static_cast<std::size_t>(nc + l)] = id;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      if (v >= nc && !fc.loops[static_cast<std::size_t>(v - nc)].three_even()) odd_by_comp.back().push_back(v - nc);
      for (auto [w, e] : neighbours(v))
        if (comp[static_cast<std::size_t>(w)] == -1) {
          comp[static_cast<std::size_t>(w)] = id;
          queue.push_back(w);
        }
    }
  }
  auto lowest = [&](int l) {
    const auto& vs = fc.loops[static_cast<std::size_t>(l)].vertices;
    return *std::min_element(vs.begin(), vs.end());
  };
  for (auto& odd : odd_by_comp) {
    if (odd.size() % 2 != 0) {
      out.feasible = false;
      out.offending_loops = odd;
      out.pairs.clear();
      out.routes.clear();
      return out;
    }
    std::sort(odd.begin(), odd.end(), [&](int a, int c) { return lowest(a) < lowest(c); });
    for (std::size_t k = 0; k < odd.size(); k += 2) {
      const int from = nc + odd[k], to = nc + odd[k + 1];
      std::vector<int> parent_edge(static_cast<std::size_t>(nc + nl), -1), parent(static_cast<std::size_t>(nc + nl), -1);
      std::vector<char> seen(static_cast<std::size_t>(nc + nl), 0);
      std::deque<int> queue{from};
      seen[static_cast<std::size_t>(from)] = 1;
      while (!queue.empty() && !seen[static_cast<std::size_t>(to)]) {
        int v = queue.front();
        queue.pop_front();
        for (auto [w, e] : neighbours(v))
          if (!seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = 1;
            parent[static_cast<std::size_t>(w)] = v;
            parent_edge[static_cast<std::size_t>(w)] = e;
            queue.push_back(w);
          }
      }
      std::vector<int> route;
      for (int v = to; v != from; v = parent[static_cast<std::size_t>(v)])
        route.push_back(parent_edge[static_cast<std::size_t>(v)]);
      std::reverse(route.begin(), route.end());
      out.pairs.push_back({odd[k], odd[k + 1]});
      out.routes.push_back(std::move(route));
    }
  }
  return out;
}

/// A trail in B between two 3-odd loops.
struct BWalk {
  int from_loop = -1, to_loop = -1;
  std::vector<int> bedges;  // in walking order; consecutive pairs pass through one component
};

/// Edge-disjoint trails pairing all 3-odd loops, with the B-edges at each
/// component paired consecutively along it.
struct PathFamily {
  std::vector<BWalk> walks;
  std::vector<char> used;                                     // per B-edge
  std::vector<std::vector<std::pair<int, int>>> component_pairs;  // per component, in position order
};

inline int selected_position(const ComponentFamily& comps, const LoopCycleIncidenceGraph& b, int bedge) {
  return comps.position_of_edge[static_cast<std::size_t>(b.edges[static_cast<std::size_t>(bedge)].selected)];
}

/// True when, on every component, the selected edges of each visit are
/// adjacent in the position order of all selected edges there.
inline bool non_interlaced(const ComponentFamily& comps, const LoopCycleIncidenceGraph& b, const PathFamily& pf) {
  for (const auto& pairs : pf.component_pairs) {
    std::vector<int> pos;
    for (auto [x, y] : pairs) {
      pos.push_back(selected_position(comps, b, x));
      pos.push_back(selected_position(comps, b, y));
    }
    for (std::size_t k = 0; k + 1 < pos.size(); k += 2)
      if (pos[k] >= pos[k + 1] || (k >= 1 && pos[k - 1] >= pos[k])) return false;
  }
  return true;
}

/// Symmetric difference of the routes, then consecutive re-pairing on each
/// component, then trails re-derived; closed trails are dropped.
inline PathFamily normalize_paths(const ComponentFamily& comps, const LoopCycleIncidenceGraph& b, const FComplement& fc,
                                  const std::vector<std::vector<int>>& routes) {
  const std::size_t ne = b.edges.size();
  std::vector<char> in_join(ne, 0);
  for (const auto& r : routes)
    for (int id : r) in_join[static_cast<std::size_t>(id)] ^= 1;

  auto join_at = [&](const std::vector<int>& ids) {
    std::vector<int> out;
    for (int id : ids)
      if (in_join[static_cast<std::size_t>(id)]) out.push_back(id);
    return out;
  };
  for (int c = 0; c < b.component_count; ++c)
    if (join_at(b.at_component[static_cast<std::size_t>(c)]).size() % 2 != 0)
      throw Error(Errc::NormalizationFailed, "odd degree at component " + std::to_string(c));
  for (int l = 0; l < b.loop_count; ++l) {
    bool odd = join_at(b.at_side[static_cast<std::size_t>(l)]).size() % 2 != 0;
    if (odd != !fc.loops[static_cast<std::size_t>(l)].three_even())
      throw Error(Errc::NormalizationFailed, "odd-degree loops differ from the 3-odd loops");
  }

  std::vector<int> partner_c(ne, -1), partner_l(ne, -1);
  for (int c = 0; c < b.component_count; ++c) {
    auto ids = join_at(b.at_component[static_cast<std::size_t>(c)]);
    std::sort(ids.begin(), ids.end(),
              [&](int x, int y) { return selected_position(comps, b, x) < selected_position(comps, b, y); });
    for (std::size_t k = 0; k < ids.size(); k += 2) {
      partner_c[static_cast<std::size_t>(ids[k])] = ids[k + 1];
      partner_c[static_cast<std::size_t>(ids[k + 1])] = ids[k];
    }
  }
  std::vector<int> terminal(static_cast<std::size_t>(b.loop_count), -1);
  for (int l = 0; l < b.loop_count; ++l) {
    auto ids = join_at(b.at_side[static_cast<std::size_t>(l)]);
    std::size_t k = 0;
    if (ids.size() % 2 == 1) terminal[static_cast<std::size_t>(l)] = ids[k++];
    for (; k < ids.size(); k += 2) {
      partner_l[static_cast<std::size_t>(ids[k])] = ids[k + 1];
      partner_l[static_cast<std::size_t>(ids[k + 1])] = ids[k];
    }
  }

  PathFamily pf;
  pf.used.assign(ne, 0);
  for (int l = 0; l < b.loop_count; ++l) {
    int e = terminal[static_cast<std::size_t>(l)];
    if (e == -1 || pf.used[static_cast<std::size_t>(e)]) continue;
    BWalk w;
    w.from_loop = l;
    for (;;) {
      int e2 = partner_c[static_cast<std::size_t>(e)];
      w.bedges.push_back(e);
      w.bedges.push_back(e2);
      pf.used[static_cast<std::size_t>(e)] = pf.used[static_cast<std::size_t>(e2)] = 1;
      int l2 = b.edges[static_cast<std::size_t>(e2)].side;
      if (terminal[static_cast<std::size_t>(l2)] == e2) {
        w.to_loop = l2;
        break;
      }
      e = partner_l[static_cast<std::size_t>(e2)];
      if (e == -1 || pf.used[static_cast<std::size_t>(e)])
        throw Error(Errc::NormalizationFailed, "trail broke off at loop " + std::to_string(l2));
    }
    pf.walks.push_back(std::move(w));
  }

  std::vector<int> ends(static_cast<std::size_t>(b.loop_count), 0);
  for (const BWalk& w : pf.walks) {
    ++ends[static_cast<std::size_t>(w.from_loop)];
    ++ends[static_cast<std::size_t>(w.to_loop)];
  }
  for (int l = 0; l < b.loop_count; ++l)
    if (ends[static_cast<std::size_t>(l)] != (fc.loops[static_cast<std::size_t>(l)].three_even() ? 0 : 1))
      throw Error(Errc::NormalizationFailed, "trails do not pair the 3-odd loops");

  pf.component_pairs.resize(static_cast<std::size_t>(b.component_count));
  for (int c = 0; c < b.component_count; ++c) {
    std::vector<int> ids;
    for (int id : b.at_component[static_cast<std::size_t>(c)])
      if (pf.used[static_cast<std::size_t>(id)]) ids.push_back(id);
    std::sort(ids.begin(), ids.end(),
              [&](int x, int y) { return selected_position(comps, b, x) < selected_position(comps, b, y); });
    for (std::size_t k = 0; k < ids.size(); k += 2) {
      if (partner_c[static_cast<std::size_t>(ids[k])] != ids[k + 1])
        throw Error(Errc::NormalizationFailed, "visits interlace on component " + std::to_string(c));
      pf.component_pairs[static_cast<std::size_t>(c)].push_back({ids[k], ids[k + 1]});
    }
  }
  return pf;
}

/// M-paths on the components between paired selected edges.
struct QFamily {
  std::vector<std::vector<std::vector<EdgeId>>> paths;  // per component, per visit
  EdgeSet edges;
};

inline QFamily build_q_family(const CubicGraph& g, const ComponentFamily& comps, const LoopCycleIncidenceGraph& b,
                              const PathFamily& pf, const MatchingInF& m) {
  QFamily q;
  q.edges = g.no_edges();
  q.paths.resize(comps.components.size());
  for (std::size_t c = 0; c < comps.components.size(); ++c) {
    const FComponent& comp = comps.components[c];
    std::set<EdgeId> selected;
    for (auto [x, y] : pf.component_pairs[c]) {
      selected.insert(b.edges[static_cast<std::size_t>(x)].selected);
      selected.insert(b.edges[static_cast<std::size_t>(y)].selected);
    }
    for (auto [x, y] : pf.component_pairs[c]) {
      int p1 = selected_position(comps, b, x), p2 = selected_position(comps, b, y);
      std::vector<EdgeId> path(comp.edges.begin() + p1 + 1, comp.edges.begin() + p2);
      if (path.empty() || path.size() % 2 == 0) throw Error(Errc::NotAnMPath, "Q has even or zero length");
      for (std::size_t k = 0; k < path.size(); ++k) {
        if (m.edges.contains(path[k]) != (k % 2 == 0)) throw Error(Errc::NotAnMPath, "Q does not alternate from M");
        if (selected.count(path[k])) throw Error(Errc::NotAnMPath, "Q contains a selected edge");
        q.edges.insert(path[k]);
      }
      q.paths[c].push_back(std::move(path));
    }
  }
  return q;
}

/// M* = (M \ Q) + (Q n E(P)), checked to be a matching in F.
inline MatchingInF modify_matching(const CubicGraph& g, const TwoFactor& f, const MatchingInF& m, const QFamily& q,
                                   const FMatching& fm) {
  EdgeSet star = (m.edges - q.edges) | (q.edges & fm.edge_set);
  if (!star.is_subset_of(f.edge_set)) throw ClaimViolation("D", "M* leaves F");
  if (!is_matching(g, star)) throw ClaimViolation("D", "M* is not a matching");
  return MatchingInF{star, is_maximum_in(f, g, star)};
}

enum class CorrectionStatus { Colored, Infeasible, Failed };

struct CorrectionOutcome {
  CorrectionStatus status = CorrectionStatus::Failed;
  bool trivial = false;  // F-complement was already 3-even
  int three_odd_loops = 0;
  int new_three_vertices = 0;
  std::map<std::string, bool> claims;  // "D" .. "J"
  std::string detail;
  std::optional<MatchingInF> m_star;
  std::optional<FMatching> fm_star;
  std::optional<FComplement> fc_star;
  std::optional<EdgeColoring> coloring;
  nlohmann::json diagnostics;
};

inline std::string to_string(CorrectionStatus s) {
  switch (s) {
    case CorrectionStatus::Colored: return "colored";
    case CorrectionStatus::Infeasible: return "infeasible";
    case CorrectionStatus::Failed: return "failed";
  }
  return "failed";
}

inline std::vector<std::vector<EdgeId>> loop_edge_sets(const FComplement& fc) {
  std::vector<std::vector<EdgeId>> out;
  for (const Loop& l : fc.loops) {
    auto e = l.edges;
    std::sort(e.begin(), e.end());
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Full correction chain for one (F, M, P) candidate. Never throws for
/// instance-level failures; the outcome records where the chain stopped.
inline CorrectionOutcome correct_and_color(const CubicGraph& g, const TwoFactor& f, const MatchingInF& m,
                                           const FMatching& fm, const FComplement& fc) {
  CorrectionOutcome out;
  out.three_odd_loops = fc.three_odd_count();
  out.trivial = out.three_odd_loops == 0;
  auto record = [&](const std::string& claim, bool ok, const std::string& what) {
    out.claims[claim] = ok;
    if (!ok) throw ClaimViolation(claim, what);
  };
  try {
    IncidenceData inc = build_B(g, f, m, fm, fc);
    Hypothesis hyp = check_hypothesis(inc.b, fc);
    if (!hyp.feasible) {
      out.status = CorrectionStatus::Infeasible;
      out.detail = "a component of B - P holds " + std::to_string(hyp.offending_loops.size()) + " 3-odd loops";
    } else {
      PathFamily pf = normalize_paths(inc.comps, inc.b, fc, hyp.routes);
      if (!non_interlaced(inc.comps, inc.b, pf)) throw Error(Errc::NormalizationFailed, "visits still interlace");
      QFamily q = build_q_family(g, inc.comps, inc.b, pf, m);
      MatchingInF m_star = modify_matching(g, f, m, q, fm);
      out.claims["D"] = true;

      ReducedGraph h = reduce(g, f, m);
      ReducedGraph h_star = reduce(g, f, m_star);
      bool e_ok = std::all_of(h.three_vertices.begin(), h.three_vertices.end(),
                              [&](Vertex v) { return h_star.is_three(v); });
      record("E", e_ok, "a 3-vertex of H lost its degree");
      record("F", fc.edge_set.is_subset_of(h_star.edges), "a loop edge entered M*");
      std::vector<int> fresh(fc.loops.size(), 0);
      bool g_ok = true;
      for (Vertex v : h_star.three_vertices) {
        if (h.is_three(v)) continue;
        ++out.new_three_vertices;
        int l = fc.loop_of[static_cast<std::size_t>(v)];
        if (l == -1)
          g_ok = false;
        else
          ++fresh[static_cast<std::size_t>(l)];
      }
      record("G", g_ok, "a new 3-vertex lies off every loop");

      FMatching fm_star;
      try {
        fm_star = f_matching_from_edges(g, h_star, h_star.edges - fc.edge_set);
        out.claims["H"] = true;
      } catch (const Error& e) {
        record("H", false, e.what());
      }
      FComplement fc_star = f_complement(g, h_star, fm_star);
      record("I", loop_edge_sets(fc_star) == loop_edge_sets(fc), "loops changed");
      bool parity_ok = true;
      for (std::size_t l = 0; l < fc.loops.size(); ++l)
        if ((fresh[l] % 2 == 1) == fc.loops[l].three_even()) parity_ok = false;
      record("J", fc_star.three_even() && parity_ok, "F-complement of the corrected matching is not 3-even");

      out.coloring = construct(g, f, m_star, fm_star, fc_star);
      out.m_star = std::move(m_star);
      out.fm_star = std::move(fm_star);
      out.fc_star = std::move(fc_star);
      out.status = CorrectionStatus::Colored;
    }
  } catch (const ClaimViolation& e) {
    out.status = CorrectionStatus::Failed;
    out.claims[e.claim()] = false;
    out.detail = e.what();
  } catch (const Error& e) {
    out.status = CorrectionStatus::Failed;
    out.detail = e.what();
  }
  nlohmann::json claims = nlohmann::json::object();
  for (const auto& [k, v] : out.claims) claims[k] = v;
  out.diagnostics = {{"stage", "correction"},          {"status", to_string(out.status)},
                     {"three_odd_loops", out.three_odd_loops}, {"new_three_vertices", out.new_three_vertices},
                     {"claims", claims},                {"detail", out.detail}};
  return out;
}

}  // namespace z4z2
