#pragma once

#include "coloring.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <deque>
#include <optional>
#include <vector>

namespace z4z2 {

inline constexpr std::size_t kDefaultOracleNodes = 200'000'000;

struct SearchStats {
  std::size_t nodes = 0;
  double millis = 0.0;
};

struct OracleVerdict {
  bool colorable = false;
  std::optional<EdgeColoring> witness;
  SearchStats stats;
};

struct OracleOptions {
  std::size_t node_budget = kDefaultOracleNodes;
  /// Disables the colour-symmetry reduction on the first two edges.
  bool paranoid = false;
};

namespace detail {

class Stopwatch {
 public:
  double millis() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Candidate colours for the first two edges at vertex 0: orbit
/// representatives of Aut(Z4 x Z2), then of the stabilizer of the first.
struct SymmetryTable {
  std::vector<GroupElement> first;
  std::array<std::vector<GroupElement>, 8> second;  // indexed by the first colour

  SymmetryTable() {
    auto autos = automorphisms();
    auto reps = [&](const std::vector<Automorphism>& group, GroupElement skip) {
      std::vector<GroupElement> out;
      std::array<bool, 8> covered{};
      for (GroupElement g : nonzero_elements()) {
        if (g == skip || covered[static_cast<std::size_t>(g.index())]) continue;
        out.push_back(g);
        for (const Automorphism& phi : group) covered[static_cast<std::size_t>(phi[static_cast<std::size_t>(g.index())].index())] = true;
      }
      return out;
    };
    first = reps(autos, GroupElement{});
    for (GroupElement r : first) {
      std::vector<Automorphism> stab;
      for (const Automorphism& phi : autos)
        if (phi[static_cast<std::size_t>(r.index())] == r) stab.push_back(phi);
      second[static_cast<std::size_t>(r.index())] = reps(stab, r);
    }
  }
};

inline const SymmetryTable& symmetry_table() {
  static const SymmetryTable table;
  return table;
}

}  // namespace detail

/// Exact Z4 x Z2 colorability by backtracking over edges in index order.
/// Throws BudgetExhausted past `options.node_budget` nodes.
inline OracleVerdict brute_force_z4z2(const CubicGraph& g, const OracleOptions& options = {}) {
  detail::Stopwatch clock;
  OracleVerdict out;
  const int m = g.size();
  std::vector<int> color(static_cast<std::size_t>(m), -1);  // element index
  const auto& sym = detail::symmetry_table();
  const auto nonzero = nonzero_elements();

  auto fits = [&](Vertex v) {
    const auto& inc = g.incident(v);
    int vals[3], k = 0;
    for (EdgeId e : inc)
      if (color[static_cast<std::size_t>(e)] != -1) vals[k++] = color[static_cast<std::size_t>(e)];
    if (k < 2) return true;
    GroupElement a = GroupElement::from_index(vals[0]), b = GroupElement::from_index(vals[1]);
    if (a == b) return false;
    GroupElement third = -(a + b);
    if (k == 3) return third == GroupElement::from_index(vals[2]);
    return !third.is_zero() && third != a && third != b;
  };

  std::vector<GroupElement> candidates;
  auto rec = [&](auto&& self, int e) -> bool {
    if (++out.stats.nodes > options.node_budget)
      throw Error(Errc::BudgetExhausted, "oracle exceeded " + std::to_string(options.node_budget) + " nodes");
    if (e == m) return true;
    std::vector<GroupElement> local;
    if (!options.paranoid && e == 0) {
      local = sym.first;
    } else if (!options.paranoid && e == 1) {
      local = sym.second[static_cast<std::size_t>(color[0])];
    } else {
      local.assign(nonzero.begin(), nonzero.end());
    }
    const Edge& ed = g.edge(e);
    for (GroupElement c : local) {
      color[static_cast<std::size_t>(e)] = c.index();
      if (fits(ed.u) && fits(ed.v) && self(self, e + 1)) return true;
    }
    color[static_cast<std::size_t>(e)] = -1;
    return false;
  };
  // The symmetry shortcut assumes edges 0 and 1 meet at vertex 0, which the canonical order guarantees.
  out.colorable = m > 0 && rec(rec, 0);
  if (out.colorable) {
    EdgeColoring c(m);
    for (EdgeId e = 0; e < m; ++e) c[e] = GroupElement::from_index(color[static_cast<std::size_t>(e)]);
    if (!verify(g, c).all()) throw Error(Errc::InvalidColoring, "oracle witness failed verification");
    out.witness = std::move(c);
  }
  out.stats.millis = clock.millis();
  return out;
}

struct ThreeColorVerdict {
  bool colorable = false;
  std::vector<int> classes;  // 0, 1, 2 per edge; -1 for removed edges
  SearchStats stats;
};

/// Exact proper 3-edge-colorability of G minus `removed` (a subcubic graph
/// when non-empty). Colours are introduced in first-use order.
inline ThreeColorVerdict is_3_edge_colorable(const CubicGraph& g, const EdgeSet& removed,
                                             std::size_t node_budget = kDefaultOracleNodes) {
  detail::Stopwatch clock;
  ThreeColorVerdict out;
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<EdgeId> order;
  std::vector<char> placed(static_cast<std::size_t>(g.size()), 0), seen(n, 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::deque<Vertex> queue{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (EdgeId e : g.incident(v)) {
        if (removed.contains(e)) continue;
        if (!placed[static_cast<std::size_t>(e)]) {
          placed[static_cast<std::size_t>(e)] = 1;
          order.push_back(e);
        }
        Vertex w = g.other(e, v);
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  out.classes.assign(static_cast<std::size_t>(g.size()), -1);
  auto clash = [&](EdgeId e, int c) {
    for (Vertex v : {g.edge(e).u, g.edge(e).v})
      for (EdgeId f : g.incident(v))
        if (f != e && out.classes[static_cast<std::size_t>(f)] == c) return true;
    return false;
  };
  auto rec = [&](auto&& self, std::size_t i, int used) -> bool {
    if (++out.stats.nodes > node_budget)
      throw Error(Errc::BudgetExhausted, "3-edge-coloring search exceeded " + std::to_string(node_budget) + " nodes");
    if (i == order.size()) return true;
    EdgeId e = order[i];
    for (int c = 0; c < std::min(3, used + 1); ++c) {
      if (clash(e, c)) continue;
      out.classes[static_cast<std::size_t>(e)] = c;
      if (self(self, i + 1, std::max(used, c + 1))) return true;
    }
    out.classes[static_cast<std::size_t>(e)] = -1;
    return false;
  };
  out.colorable = rec(rec, 0, 0);
  if (!out.colorable) out.classes.assign(static_cast<std::size_t>(g.size()), -1);
  out.stats.millis = clock.millis();
  return out;
}

inline ThreeColorVerdict is_3_edge_colorable(const CubicGraph& g, std::size_t node_budget = kDefaultOracleNodes) {
  return is_3_edge_colorable(g, g.no_edges(), node_budget);
}

struct CharacterizationOptions {
  std::size_t node_budget = kDefaultSearchNodes;
  std::optional<std::size_t> pm_limit;
};

struct CharacterizationVerdict {
  std::optional<Structures> witness;
  std::size_t nodes = 0;
  std::size_t factors = 0;  // perfect matchings scanned
  double millis = 0.0;
};

/// Visits every matching of F (any size, not just maximum) in a fixed
/// order: cycles in order, each edge of a cycle in or out. `fn` returns
/// false to stop; returns false if stopped.
template <class Fn>
bool for_each_matching_in(const CubicGraph& g, const TwoFactor& f, Fn&& fn) {
  std::vector<EdgeId> seq;
  std::vector<int> cycle_start;  // index into seq of each edge's cycle start
  for (const auto& ce : f.cycle_edges) {
    int start = static_cast<int>(seq.size());
    for (EdgeId e : ce) {
      seq.push_back(e);
      cycle_start.push_back(start);
    }
  }
  std::vector<char> take(seq.size(), 0);
  EdgeSet cur = g.no_edges();
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == seq.size()) return fn(MatchingInF{cur, is_maximum_in(f, g, cur)});
    if (!self(self, i + 1)) return false;
    const std::size_t start = static_cast<std::size_t>(cycle_start[i]);
    const bool last_of_cycle = i + 1 == seq.size() || static_cast<std::size_t>(cycle_start[i + 1]) != start;
    bool blocked = (i > start && take[i - 1]) || (last_of_cycle && i > start && take[start]);
    if (blocked) return true;
    take[i] = 1;
    cur.insert(seq[i]);
    bool go = self(self, i + 1);
    cur.erase(seq[i]);
    take[i] = 0;
    return go;
  };
  return rec(rec, 0);
}

/// Exhaustive search for (F, M, P) with a 3-even F-complement. Throws
/// BudgetExhausted when the node budget runs out before a verdict.
inline CharacterizationVerdict characterization_search(const CubicGraph& g, const CharacterizationOptions& options = {}) {
  detail::Stopwatch clock;
  CharacterizationVerdict out;
  PerfectMatchingStream stream(g, options.pm_limit);
  while (auto pm = stream.next()) {
    ++out.factors;
    TwoFactor f = two_factor(g, *pm);
    for_each_matching_in(g, f, [&](const MatchingInF& m) {
      if (++out.nodes > options.node_budget)
        throw Error(Errc::BudgetExhausted, "characterization search exceeded its node budget");
      ReducedGraph h = reduce(g, f, m);
      FMatchingSearch s = for_each_f_matching(g, h, false, options.node_budget - out.nodes, [&](const FMatching& fm) {
        FComplement fc = f_complement(g, h, fm);
        if (!fc.three_even()) return true;
        out.witness = Structures{f, m, h, fm, std::move(fc)};
        return false;
      });
      out.nodes += s.nodes;
      if (s.status == SearchStatus::BudgetExhausted)
        throw Error(Errc::BudgetExhausted, "characterization search exceeded its node budget");
      return !out.witness.has_value();
    });
    if (out.witness) break;
  }
  if (!out.witness && !stream.exhausted())
    throw Error(Errc::BudgetExhausted, "perfect matching limit reached before a verdict");
  out.millis = clock.millis();
  return out;
}

struct CountVerdict {
  int value = 0;
  std::vector<EdgeId> edges;  // a minimum removal set
  SearchStats stats;
};

/// Minimum number of edges whose deletion leaves a 3-edge-colorable graph.
inline CountVerdict resistance(const CubicGraph& g, std::size_t node_budget = kDefaultOracleNodes) {
  detail::Stopwatch clock;
  CountVerdict out;
  const int m = g.size();
  for (int k = 0; k <= m; ++k) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
      EdgeSet removed(static_cast<std::size_t>(m), idx);
      auto v = is_3_edge_colorable(g, removed, node_budget - std::min(node_budget, out.stats.nodes));
      out.stats.nodes += v.stats.nodes;
      if (v.colorable) {
        out.value = k;
        out.edges = idx;
        out.stats.millis = clock.millis();
        return out;
      }
      int i = k - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  throw Error(Errc::BudgetExhausted, "no removal set found");
}

/// Minimum size of a matching whose edge reduction is 3-edge-colorable.
/// Reductions that create loops or parallel edges are skipped.
inline CountVerdict reduction_number(const CubicGraph& g, std::size_t node_budget = kDefaultOracleNodes) {
  detail::Stopwatch clock;
  CountVerdict out;
  const int m = g.size();
  auto remaining = [&] { return node_budget - std::min(node_budget, out.stats.nodes); };
  {
    auto v = is_3_edge_colorable(g, remaining());
    out.stats.nodes += v.stats.nodes;
    if (v.colorable) {
      out.stats.millis = clock.millis();
      return out;
    }
  }
  std::vector<char> touched(static_cast<std::size_t>(g.order()), 0);
  std::vector<EdgeId> chosen;
  auto rec = [&](auto&& self, int from, int k) -> bool {
    if (static_cast<int>(chosen.size()) == k) {
      EdgeSet removed(static_cast<std::size_t>(m), chosen);
      std::optional<CubicGraph> reduced;
      try {
        reduced = edge_reduction(g, removed);
      } catch (const Error&) {
        return false;
      }
      auto v = is_3_edge_colorable(*reduced, remaining());
      out.stats.nodes += v.stats.nodes;
      return v.colorable;
    }
    for (int e = from; e < m; ++e) {
      const Edge& ed = g.edge(e);
      if (touched[static_cast<std::size_t>(ed.u)] || touched[static_cast<std::size_t>(ed.v)]) continue;
      touched[static_cast<std::size_t>(ed.u)] = touched[static_cast<std::size_t>(ed.v)] = 1;
      chosen.push_back(e);
      bool hit = self(self, e + 1, k);
      if (hit) return true;
      chosen.pop_back();
      touched[static_cast<std::size_t>(ed.u)] = touched[static_cast<std::size_t>(ed.v)] = 0;
    }
    return false;
  };
  for (int k = 1; 2 * k <= g.order(); ++k) {
    if (rec(rec, 0, k)) {
      out.value = k;
      out.edges = chosen;
      out.stats.millis = clock.millis();
      return out;
    }
  }
  throw Error(Errc::BudgetExhausted, "no reducing matching found");
}

/// Number of automorphisms, by extending vertex maps along BFS order.
inline std::size_t automorphism_count(const CubicGraph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<Vertex> order, parent(n, -1);
  std::vector<char> seen(n, 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::deque<Vertex> q{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop_front();
      order.push_back(v);
      for (EdgeId e : g.incident(v)) {
        Vertex w = g.other(e, v);
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          parent[static_cast<std::size_t>(w)] = v;
          q.push_back(w);
        }
      }
    }
  }
  std::vector<Vertex> image(n, -1);
  std::vector<char> used(n, 0);
  std::size_t count = 0;
  auto adjacent = [&](Vertex a, Vertex b) { return g.edge_between(a, b).has_value(); };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == order.size()) {
      ++count;
      return;
    }
    Vertex v = order[i];
    std::vector<Vertex> options;
    if (parent[static_cast<std::size_t>(v)] == -1) {
      for (Vertex w = 0; w < g.order(); ++w) options.push_back(w);
    } else {
      Vertex pw = image[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      for (EdgeId e : g.incident(pw)) options.push_back(g.other(e, pw));
    }
    for (Vertex w : options) {
      if (used[static_cast<std::size_t>(w)]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = adjacent(order[j], v) == adjacent(image[static_cast<std::size_t>(order[j])], w);
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = w;
      used[static_cast<std::size_t>(w)] = 1;
      self(self, i + 1);
      used[static_cast<std::size_t>(w)] = 0;
      image[static_cast<std::size_t>(v)] = -1;
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace z4z2
