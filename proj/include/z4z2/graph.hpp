#pragma once

#include "edge_set.hpp"
#include "error.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace z4z2 {

struct Edge {
  Vertex u = 0;  // u < v
  Vertex v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple cubic graph with canonical indexing: edges are sorted by
/// (min endpoint, max endpoint) and an edge's index is its position in that
/// order. Immutable after construction.
class CubicGraph {
 public:
  /// The empty graph; a placeholder until assigned.
  CubicGraph() = default;

  /// Validates and canonicalizes. Throws NotCubic, NotSimple or Disconnected.
  /// Edge-reduced graphs may legitimately fall apart, hence the opt-out.
  static CubicGraph from_edges(int order, std::vector<std::pair<Vertex, Vertex>> edges,
                               bool require_connected = true) {
    if (order < 4 || order % 2 != 0)
      throw Error(Errc::NotCubic, "a cubic graph needs an even order >= 4, got " + std::to_string(order));
    std::vector<Edge> canon;
    canon.reserve(edges.size());
    for (auto [a, b] : edges) {
      if (a < 0 || b < 0 || a >= order || b >= order)
        throw Error(Errc::BadParameter, "vertex out of range in edge list");
      if (a == b) throw Error(Errc::NotSimple, "self-loop at vertex " + std::to_string(a));
      canon.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(canon.begin(), canon.end());
    if (std::adjacent_find(canon.begin(), canon.end()) != canon.end())
      throw Error(Errc::NotSimple, "parallel edges");

    CubicGraph g;
    g.order_ = order;
    g.edges_ = std::move(canon);
    g.incident_.assign(static_cast<std::size_t>(order), {-1, -1, -1});
    std::vector<int> degree(static_cast<std::size_t>(order), 0);
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.edges_.size()); ++e) {
      for (Vertex w : {g.edges_[e].u, g.edges_[e].v}) {
        int& d = degree[static_cast<std::size_t>(w)];
        if (d == 3) throw Error(Errc::NotCubic, "vertex " + std::to_string(w) + " has degree > 3");
        g.incident_[static_cast<std::size_t>(w)][static_cast<std::size_t>(d++)] = e;
      }
    }
    for (Vertex w = 0; w < order; ++w)
      if (degree[static_cast<std::size_t>(w)] != 3)
        throw Error(Errc::NotCubic, "vertex " + std::to_string(w) + " has degree " +
                                        std::to_string(degree[static_cast<std::size_t>(w)]));
    if (require_connected && !g.connected()) throw Error(Errc::Disconnected, "graph is not connected");
    return g;
  }

  int order() const { return order_; }
  int size() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const { return edges_; }

  /// The three incident edges of `v`, in increasing index order.
  const std::array<EdgeId, 3>& incident(Vertex v) const { return incident_[static_cast<std::size_t>(v)]; }

  Vertex other(EdgeId e, Vertex v) const {
    const Edge& ed = edge(e);
    return ed.u == v ? ed.v : ed.u;
  }

  std::optional<EdgeId> edge_between(Vertex a, Vertex b) const {
    for (EdgeId e : incident(a))
      if (other(e, a) == b) return e;
    return std::nullopt;
  }

  bool connected() const { return component_count() == 1; }

  int component_count() const {
    std::vector<char> seen(static_cast<std::size_t>(order_), 0);
    int count = 0;
    for (Vertex s = 0; s < order_; ++s) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      ++count;
      std::vector<Vertex> stack{s};
      seen[static_cast<std::size_t>(s)] = 1;
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (EdgeId e : incident(v)) {
          Vertex w = other(e, v);
          if (!seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = 1;
            stack.push_back(w);
          }
        }
      }
    }
    return count;
  }

  EdgeSet no_edges() const { return EdgeSet(edges_.size()); }
  EdgeSet all_edges() const { return EdgeSet(edges_.size()).complement(); }

  std::vector<std::pair<Vertex, Vertex>> edge_pairs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) out.emplace_back(e.u, e.v);
    return out;
  }

  friend bool operator==(const CubicGraph& a, const CubicGraph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:

  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::array<EdgeId, 3>> incident_;
};

/// An edge subset together with the degree each vertex has in it.
struct SubgraphView {
  EdgeSet edges;
  std::vector<int> degree;

  SubgraphView(const CubicGraph& g, EdgeSet subset) : edges(std::move(subset)), degree(static_cast<std::size_t>(g.order()), 0) {
    edges.for_each([&](EdgeId e) {
      ++degree[static_cast<std::size_t>(g.edge(e).u)];
      ++degree[static_cast<std::size_t>(g.edge(e).v)];
    });
  }
};

inline bool is_matching(const CubicGraph& g, const EdgeSet& set) {
  SubgraphView view(g, set);
  return std::all_of(view.degree.begin(), view.degree.end(), [](int d) { return d <= 1; });
}

inline bool is_perfect_matching(const CubicGraph& g, const EdgeSet& set) {
  SubgraphView view(g, set);
  return std::all_of(view.degree.begin(), view.degree.end(), [](int d) { return d == 1; });
}

/// Cut edges via an iterative lowpoint DFS.
inline EdgeSet find_bridges(const CubicGraph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  EdgeSet bridges = g.no_edges();
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  struct Frame {
    Vertex v;
    EdgeId parent_edge;
    int slot;
  };
  for (Vertex root = 0; root < g.order(); ++root) {
    if (disc[static_cast<std::size_t>(root)] != -1) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.slot < 3) {
        EdgeId e = g.incident(f.v)[static_cast<std::size_t>(f.slot++)];
        if (e == f.parent_edge) continue;
        Vertex w = g.other(e, f.v);
        auto wi = static_cast<std::size_t>(w);
        if (disc[wi] == -1) {
          disc[wi] = low[wi] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], disc[wi]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      Vertex parent = stack.back().v;
      auto pi = static_cast<std::size_t>(parent);
      auto vi = static_cast<std::size_t>(done.v);
      low[pi] = std::min(low[pi], low[vi]);
      if (low[vi] > disc[pi]) bridges.insert(done.parent_edge);
    }
  }
  return bridges;
}

inline bool is_bridgeless(const CubicGraph& g) { return find_bridges(g).empty(); }

/// Length of a shortest cycle.
inline int girth(const CubicGraph& g) {
  int best = std::numeric_limits<int>::max();
  const auto n = static_cast<std::size_t>(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    std::vector<int> dist(n, -1);
    std::vector<EdgeId> via(n, -1);
    std::queue<Vertex> q;
    dist[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (EdgeId e : g.incident(v)) {
        if (e == via[static_cast<std::size_t>(v)]) continue;
        Vertex w = g.other(e, v);
        auto wi = static_cast<std::size_t>(w);
        if (dist[wi] == -1) {
          dist[wi] = dist[static_cast<std::size_t>(v)] + 1;
          via[wi] = e;
          q.push(w);
        } else {
          best = std::min(best, dist[static_cast<std::size_t>(v)] + dist[wi] + 1);
        }
      }
    }
  }
  return best;
}

/// Deletes the edges of a matching and suppresses the resulting 2-vertices.
/// Surviving vertices keep their relative order. Throws NotAMatching,
/// SelfLoopCreated (including a circle with no surviving vertex) or
/// MultiEdgeCreated. The result may be disconnected.
inline CubicGraph edge_reduction(const CubicGraph& g, const EdgeSet& removed) {
  if (!is_matching(g, removed)) throw Error(Errc::NotAMatching, "removed edges share a vertex");
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<char> suppressed(n, 0);
  removed.for_each([&](EdgeId e) {
    suppressed[static_cast<std::size_t>(g.edge(e).u)] = 1;
    suppressed[static_cast<std::size_t>(g.edge(e).v)] = 1;
  });
  std::vector<int> relabel(n, -1);
  int kept = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (!suppressed[v]) relabel[v] = kept++;

  EdgeSet visited = g.no_edges();
  std::vector<std::pair<Vertex, Vertex>> result;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (suppressed[static_cast<std::size_t>(s)]) continue;
    for (EdgeId first : g.incident(s)) {
      if (visited.contains(first)) continue;
      EdgeId e = first;
      Vertex at = s;
      for (;;) {
        visited.insert(e);
        at = g.other(e, at);
        if (!suppressed[static_cast<std::size_t>(at)]) break;
        EdgeId next = -1;
        for (EdgeId f : g.incident(at))
          if (f != e && !removed.contains(f)) next = f;
        e = next;
      }
      if (at == s) throw Error(Errc::SelfLoopCreated, "suppression closes a loop at vertex " + std::to_string(s));
      result.emplace_back(relabel[static_cast<std::size_t>(s)], relabel[static_cast<std::size_t>(at)]);
    }
  }
  if ((visited | removed) != g.all_edges())
    throw Error(Errc::SelfLoopCreated, "suppression leaves a circle without vertices");
  if (kept == 0) throw Error(Errc::SelfLoopCreated, "every vertex was suppressed");

  std::vector<std::pair<Vertex, Vertex>> sorted = result;
  for (auto& [a, b] : sorted)
    if (a > b) std::swap(a, b);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(Errc::MultiEdgeCreated, "suppression creates parallel edges");
  return CubicGraph::from_edges(kept, std::move(result), /*require_connected=*/false);
}

}  // namespace z4z2
