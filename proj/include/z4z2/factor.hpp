#pragma once

#include "graph.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace z4z2 {

/// Spanning 2-regular subgraph, stored as its cycle decomposition.
///
/// Cycles are canonical: each starts at its smallest vertex and proceeds
/// toward the smaller of that vertex's two cycle neighbours; cycles are
/// listed by increasing first vertex. `cycle_edges[i][k]` joins
/// `cycles[i][k]` and `cycles[i][(k + 1) % len]`.
struct TwoFactor {
  std::vector<std::vector<Vertex>> cycles;
  std::vector<std::vector<EdgeId>> cycle_edges;
  EdgeSet edge_set;
  EdgeSet complement;  // the perfect matching E(G) - E(F)
  std::vector<int> cycle_of;
  std::vector<int> position;

  int cycle_count() const { return static_cast<int>(cycles.size()); }
  bool is_odd(int c) const { return cycles[static_cast<std::size_t>(c)].size() % 2 == 1; }

  int odd_count() const {
    int k = 0;
    for (int c = 0; c < cycle_count(); ++c) k += is_odd(c) ? 1 : 0;
    return k;
  }

  std::vector<int> odd_cycles() const {
    std::vector<int> out;
    for (int c = 0; c < cycle_count(); ++c)
      if (is_odd(c)) out.push_back(c);
    return out;
  }

  std::vector<int> even_cycles() const {
    std::vector<int> out;
    for (int c = 0; c < cycle_count(); ++c)
      if (!is_odd(c)) out.push_back(c);
    return out;
  }

  EdgeSet edges_of(const std::vector<int>& which) const {
    EdgeSet out(edge_set.universe());
    for (int c : which)
      for (EdgeId e : cycle_edges[static_cast<std::size_t>(c)]) out.insert(e);
    return out;
  }

  EdgeSet odd_edges() const { return edges_of(odd_cycles()); }
  EdgeSet even_edges() const { return edges_of(even_cycles()); }
};

/// Cycle decomposition of E(G) minus a perfect matching.
inline TwoFactor two_factor(const CubicGraph& g, const EdgeSet& pm) {
  if (pm.universe() != static_cast<std::size_t>(g.size()) || !is_perfect_matching(g, pm))
    throw Error(Errc::NotPerfectMatching, "edge set is not a perfect matching");
  const auto n = static_cast<std::size_t>(g.order());
  TwoFactor f;
  f.complement = pm;
  f.edge_set = g.all_edges() - pm;
  f.cycle_of.assign(n, -1);
  f.position.assign(n, -1);

  auto factor_edges = [&](Vertex v) {
    std::array<EdgeId, 2> out{-1, -1};
    int k = 0;
    for (EdgeId e : g.incident(v))
      if (!pm.contains(e)) out[static_cast<std::size_t>(k++)] = e;
    return out;
  };

  for (Vertex s = 0; s < g.order(); ++s) {
    if (f.cycle_of[static_cast<std::size_t>(s)] != -1) continue;
    auto [e0, e1] = factor_edges(s);
    EdgeId first = g.other(e0, s) < g.other(e1, s) ? e0 : e1;
    const int id = f.cycle_count();
    std::vector<Vertex> cyc;
    std::vector<EdgeId> cyc_edges;
    Vertex at = s;
    EdgeId via = first;
    do {
      f.cycle_of[static_cast<std::size_t>(at)] = id;
      f.position[static_cast<std::size_t>(at)] = static_cast<int>(cyc.size());
      cyc.push_back(at);
      cyc_edges.push_back(via);
      at = g.other(via, at);
      auto [a, b] = factor_edges(at);
      via = (a == via) ? b : a;
    } while (at != s);
    f.cycles.push_back(std::move(cyc));
    f.cycle_edges.push_back(std::move(cyc_edges));
  }
  return f;
}

/// Streams perfect matchings in lexicographic order of their sorted edge
/// index lists. Backtracks on the lowest uncovered vertex, trying its edges
/// in index order; single consumer.
class PerfectMatchingStream {
 public:
  explicit PerfectMatchingStream(const CubicGraph& g, std::optional<std::size_t> limit = std::nullopt)
      : g_(g), limit_(limit), covered_(static_cast<std::size_t>(g.order()), 0) {}

  std::optional<EdgeSet> next() {
    if (exhausted_ || (limit_ && produced_ >= *limit_)) return std::nullopt;
    if (!advance()) {
      exhausted_ = true;
      return std::nullopt;
    }
    ++produced_;
    EdgeSet pm = g_.no_edges();
    for (const Frame& f : stack_) pm.insert(f.chosen);
    return pm;
  }

  std::size_t produced() const { return produced_; }
  /// True once the stream ran out of matchings (as opposed to hitting the limit).
  bool exhausted() const { return exhausted_; }

 private:
  struct Frame {
    Vertex v;
    int slot;
    EdgeId chosen;
  };

  bool advance() {
    bool descend = !started_;
    started_ = true;
    for (;;) {
      if (descend) {
        Vertex start = stack_.empty() ? 0 : stack_.back().v + 1;
        Vertex v = start;
        while (v < g_.order() && covered_[static_cast<std::size_t>(v)]) ++v;
        if (v == g_.order()) return true;
        stack_.push_back({v, 0, -1});
      }
      if (stack_.empty()) return false;
      Frame& f = stack_.back();
      if (f.chosen != -1) {
        covered_[static_cast<std::size_t>(g_.other(f.chosen, f.v))] = 0;
        covered_[static_cast<std::size_t>(f.v)] = 0;
        f.chosen = -1;
      }
      descend = false;
      while (f.slot < 3) {
        EdgeId e = g_.incident(f.v)[static_cast<std::size_t>(f.slot++)];
        Vertex w = g_.other(e, f.v);
        if (covered_[static_cast<std::size_t>(w)]) continue;
        f.chosen = e;
        covered_[static_cast<std::size_t>(f.v)] = 1;
        covered_[static_cast<std::size_t>(w)] = 1;
        descend = true;
        break;
      }
      if (!descend) {
        stack_.pop_back();
        if (stack_.empty()) return false;
      }
    }
  }

  CubicGraph g_;  // owned, so temporaries are safe
  std::optional<std::size_t> limit_;
  std::vector<char> covered_;
  std::vector<Frame> stack_;
  std::size_t produced_ = 0;
  bool started_ = false;
  bool exhausted_ = false;
};

/// No limit up to 30 vertices; above that, `budget` matchings.
inline std::optional<std::size_t> default_pm_limit(int order, std::size_t budget) {
  if (order <= 30) return std::nullopt;
  return budget;
}

inline std::vector<EdgeSet> enumerate_perfect_matchings(const CubicGraph& g,
                                                        std::optional<std::size_t> limit = std::nullopt) {
  PerfectMatchingStream stream(g, limit);
  std::vector<EdgeSet> out;
  while (auto pm = stream.next()) out.push_back(std::move(*pm));
  if (out.empty() && (!limit || *limit > 0)) throw Error(Errc::NoPerfectMatching, "graph has no perfect matching");
  return out;
}

struct OddnessWitness {
  TwoFactor factor;
  int oddness = 0;
  bool proven_minimal = false;  // false when the scan stopped at the limit
};

/// A 2-factor with the fewest odd cycles; the first one in matching order wins ties.
inline OddnessWitness oddness_witness(const CubicGraph& g, std::optional<std::size_t> limit = std::nullopt) {
  PerfectMatchingStream stream(g, limit);
  std::optional<OddnessWitness> best;
  while (auto pm = stream.next()) {
    TwoFactor f = two_factor(g, *pm);
    int odd = f.odd_count();
    if (!best || odd < best->oddness) best = OddnessWitness{std::move(f), odd, false};
    if (best->oddness == 0) {
      best->proven_minimal = true;
      return *best;
    }
  }
  if (!best) throw Error(Errc::NoPerfectMatching, "graph has no perfect matching");
  best->proven_minimal = stream.exhausted();
  return *best;
}

}  // namespace z4z2
