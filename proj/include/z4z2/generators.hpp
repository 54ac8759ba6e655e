#pragma once

#include "factor.hpp"
#include "graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace z4z2 {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

/// Outer 5-cycle 0..4, spokes i - i+5, inner pentagram i+5 - (i+2 mod 5)+5.
inline CubicGraph petersen() {
  EdgeList e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return CubicGraph::from_edges(10, std::move(e));
}

/// Dot product of two Petersen copies. The first copy (0..9) loses the
/// edges 0-1 and `second_cut`; the second loses its adjacent vertices 0 and 1
/// and its remaining vertices become 10..17. Cut 7-9 gives the first
/// Blanusa snark, cut 5-7 the second.
inline CubicGraph blanusa(int which) {
  if (which != 1 && which != 2) throw Error(Errc::BadParameter, "Blanusa snark index must be 1 or 2");
  const std::pair<Vertex, Vertex> cut1{0, 1};
  const std::pair<Vertex, Vertex> cut2 = which == 1 ? std::pair<Vertex, Vertex>{7, 9} : std::pair<Vertex, Vertex>{5, 7};
  EdgeList e;
  for (auto [u, v] : petersen().edge_pairs()) {
    std::pair<Vertex, Vertex> p{u, v};
    if (p != cut1 && p != cut2) e.push_back(p);
  }
  // Second copy without vertices 0 and 1; vertex w >= 2 becomes w + 8.
  for (auto [u, v] : petersen().edge_pairs())
    if (u >= 2 && v >= 2) e.push_back({u + 8, v + 8});
  // Neighbours of the deleted pair in the second copy: 0 -> {5, 4}, 1 -> {2, 6}.
  e.push_back({cut1.first, 5 + 8});
  e.push_back({cut1.second, 4 + 8});
  e.push_back({cut2.first, 2 + 8});
  e.push_back({cut2.second, 6 + 8});
  return CubicGraph::from_edges(18, std::move(e));
}

/// Flower snark J_k (k odd >= 5): a_i = 4i, b_i = 4i+1, c_i = 4i+2, d_i = 4i+3;
/// a_i joins b_i, c_i, d_i; the b's form a k-cycle and the c's and d's one 2k-cycle.
inline CubicGraph flower(int k) {
  if (k < 5 || k % 2 == 0) throw Error(Errc::BadParameter, "flower snark needs an odd k >= 5");
  auto a = [](int i) { return 4 * i; };
  auto b = [&](int i) { return 4 * (i % k) + 1; };
  auto c = [&](int i) { return 4 * (i % k) + 2; };
  auto d = [&](int i) { return 4 * (i % k) + 3; };
  EdgeList e;
  for (int i = 0; i < k; ++i) {
    e.push_back({a(i), b(i)});
    e.push_back({a(i), c(i)});
    e.push_back({a(i), d(i)});
    e.push_back({b(i), b(i + 1)});
    if (i + 1 < k) {
      e.push_back({c(i), c(i + 1)});
      e.push_back({d(i), d(i + 1)});
    }
  }
  e.push_back({c(k - 1), d(0)});
  e.push_back({d(k - 1), c(0)});
  return CubicGraph::from_edges(4 * k, std::move(e));
}

inline CubicGraph complete_k4() { return CubicGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

inline CubicGraph complete_k33() {
  EdgeList e;
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) e.push_back({i, j});
  return CubicGraph::from_edges(6, std::move(e));
}

/// Triangular prism: triangles 0,1,2 and 3,4,5, rungs i - i+3.
inline CubicGraph prism() {
  return CubicGraph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

/// 3-cube on bit strings 0..7.
inline CubicGraph cube_q3() {
  EdgeList e;
  for (int v = 0; v < 8; ++v)
    for (int bit = 1; bit < 8; bit <<= 1)
      if (v < (v ^ bit)) e.push_back({v, v ^ bit});
  return CubicGraph::from_edges(8, std::move(e));
}

struct NamedGraph {
  std::string name;
  CubicGraph graph;
};

/// 3-edge-colorable controls: K4, K3,3, prism, Q3.
inline std::vector<NamedGraph> controls() {
  return {{"k4", complete_k4()}, {"k33", complete_k33()}, {"prism", prism()}, {"q3", cube_q3()}};
}

struct PermutationSpec {
  int n = 0;
  std::vector<int> pi;
};

struct PermutationGraph {
  CubicGraph graph;
  EdgeSet spokes;  // complement of the defining 2-factor
};

/// Cycles 0..n-1 and n..2n-1 joined by spokes i - n + pi(i).
inline PermutationGraph permutation_graph(const PermutationSpec& spec) {
  const int n = spec.n;
  if (n < 3 || static_cast<int>(spec.pi.size()) != n) throw Error(Errc::BadParameter, "permutation size mismatch");
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int p : spec.pi) {
    if (p < 0 || p >= n || hit[static_cast<std::size_t>(p)]) throw Error(Errc::BadParameter, "pi is not a permutation");
    hit[static_cast<std::size_t>(p)] = 1;
  }
  EdgeList e;
  for (int i = 0; i < n; ++i) {
    e.push_back({i, (i + 1) % n});
    e.push_back({n + i, n + (i + 1) % n});
    e.push_back({i, n + spec.pi[static_cast<std::size_t>(i)]});
  }
  PermutationGraph out{CubicGraph::from_edges(2 * n, std::move(e)), {}};
  out.spokes = out.graph.no_edges();
  for (int i = 0; i < n; ++i) out.spokes.insert(*out.graph.edge_between(i, n + spec.pi[static_cast<std::size_t>(i)]));
  return out;
}

/// Uniform-ish random connected simple cubic graph on `order` vertices via
/// the configuration model with rejection.
inline CubicGraph random_cubic(int order, std::uint64_t seed) {
  if (order < 4 || order % 2 != 0) throw Error(Errc::BadParameter, "order must be even and >= 4");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> points;
  for (Vertex v = 0; v < order; ++v) points.insert(points.end(), 3, v);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::shuffle(points.begin(), points.end(), rng);
    EdgeList e;
    bool ok = true;
    for (std::size_t k = 0; k < points.size() && ok; k += 2) {
      auto p = std::minmax(points[k], points[k + 1]);
      if (p.first == p.second) ok = false;
      e.push_back({p.first, p.second});
    }
    if (!ok) continue;
    try {
      return CubicGraph::from_edges(order, std::move(e));
    } catch (const Error&) {
    }
  }
  throw Error(Errc::BadParameter, "could not sample a simple connected cubic graph");
}

struct PermutationSample {
  PermutationSpec spec;
  PermutationGraph graph;
  std::uint64_t draw = 0;  // index of the draw that produced it
};

/// Rejection sampler for permutation snarks. Draws cycle through `ns`
/// round-robin, each with a uniformly shuffled pi from one seeded stream;
/// `is_snark` decides acceptance. Repeated permutations are skipped.
inline std::vector<PermutationSample> sample_permutation_snarks(
    std::size_t count, std::uint64_t seed, const std::vector<int>& ns,
    const std::function<bool(const CubicGraph&)>& is_snark, std::size_t max_draws = 200000) {
  if (ns.empty()) throw Error(Errc::BadParameter, "no cycle lengths given");
  std::mt19937_64 rng(seed);
  std::vector<PermutationSample> out;
  std::vector<std::vector<int>> seen;
  for (std::size_t draw = 0; draw < max_draws && out.size() < count; ++draw) {
    PermutationSpec spec;
    spec.n = ns[draw % ns.size()];
    spec.pi.resize(static_cast<std::size_t>(spec.n));
    std::iota(spec.pi.begin(), spec.pi.end(), 0);
    std::shuffle(spec.pi.begin(), spec.pi.end(), rng);
    if (std::find(seen.begin(), seen.end(), spec.pi) != seen.end()) continue;
    PermutationGraph pg;
    try {
      pg = permutation_graph(spec);
    } catch (const Error&) {
      continue;
    }
    if (!is_snark(pg.graph)) continue;
    seen.push_back(spec.pi);
    out.push_back({spec, std::move(pg), draw});
  }
  return out;
}

}  // namespace z4z2
