#pragma once

#include "coloring.hpp"
#include "graph6.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace z4z2 {

using json = nlohmann::json;

inline json verdicts_json(const Verdicts& v) {
  return {{"proper", v.proper}, {"nowhere_zero", v.nowhere_zero}, {"zero_sum", v.zero_sum}};
}

/// Self-contained record of a coloring plus the structures read off it.
/// Edge indices refer to the sorted edge list of the decoded graph6 graph.
inline json make_certificate(const CubicGraph& g, const EdgeColoring& c, const std::string& stage,
                             const std::string& note = {}) {
  Verdicts v = verify(g, c);
  if (!v.all()) throw Error(Errc::InvalidColoring, "refusing to certify a coloring that does not verify");
  Structures s = extract(g, c);

  json j;
  j["graph6"] = to_graph6(g);
  j["two_factor"] = s.f.cycles;
  json m = json::array();
  s.m.edges.for_each([&](EdgeId e) { m.push_back({g.edge(e).u, g.edge(e).v}); });
  j["matching"] = m;
  json paths = json::array();
  for (const FPath& p : s.fm.paths) paths.push_back(p.vertices);
  j["f_matching"] = paths;
  json loops = json::array();
  for (const Loop& l : s.fc.loops)
    loops.push_back({{"vertices", l.vertices}, {"three_count", l.three_count}, {"three_even", l.three_even()}});
  j["loops"] = loops;
  json col = json::array();
  for (GroupElement x : c.colors()) col.push_back({int(x.x), int(x.y)});
  j["coloring"] = col;
  j["verdicts"] = verdicts_json(v);
  j["stage"] = stage;
  if (!note.empty()) j["note"] = note;
  return j;
}

struct CertificateCheck {
  Verdicts recomputed;
  bool verdicts_match = false;
  bool structures_match = false;
  std::vector<std::string> problems;

  bool valid() const { return recomputed.all() && verdicts_match && structures_match; }
};

namespace detail {

inline EdgeSet edges_along(const CubicGraph& g, const std::vector<Vertex>& walk, bool closed) {
  EdgeSet s = g.no_edges();
  const std::size_t n = walk.size();
  for (std::size_t k = 0; k + (closed ? 0 : 1) < n; ++k) {
    auto e = g.edge_between(walk[k], walk[(k + 1) % n]);
    if (!e) throw Error(Errc::MalformedCertificate, "listed vertices are not adjacent");
    s.insert(*e);
  }
  return s;
}

}  // namespace detail

/// Re-derives everything in a certificate. Throws MalformedCertificate (or
/// MalformedGraph6 and friends) when the document cannot be read at all;
/// content that reads but does not check out is reported in `problems`.
inline CertificateCheck check_certificate(const json& j) {
  CertificateCheck out;
  CubicGraph g;
  EdgeColoring c;
  try {
    g = parse_graph6(j.at("graph6").get<std::string>());
    const json& col = j.at("coloring");
    if (!col.is_array() || static_cast<int>(col.size()) != g.size())
      throw Error(Errc::MalformedCertificate, "coloring length does not match the edge count");
    c = EdgeColoring(g.size());
    for (EdgeId e = 0; e < g.size(); ++e) {
      const json& pair = col[static_cast<std::size_t>(e)];
      if (!pair.is_array() || pair.size() != 2) throw Error(Errc::MalformedCertificate, "color is not an [x,y] pair");
      int x = pair[0].get<int>(), y = pair[1].get<int>();
      if (x < 0 || x > 3 || y < 0 || y > 1) throw Error(Errc::MalformedCertificate, "color out of range");
      c[e] = GroupElement(x, y);
    }
  } catch (const json::exception& e) {
    throw Error(Errc::MalformedCertificate, e.what());
  }

  out.recomputed = verify(g, c);
  try {
    const json& rv = j.at("verdicts");
    Verdicts recorded{rv.at("proper").get<bool>(), rv.at("nowhere_zero").get<bool>(), rv.at("zero_sum").get<bool>()};
    out.verdicts_match = recorded == out.recomputed;
    if (!out.verdicts_match) out.problems.push_back("recorded verdicts differ from recomputed ones");
  } catch (const json::exception& e) {
    out.problems.push_back(std::string("verdicts unreadable: ") + e.what());
  }
  if (!out.recomputed.all()) {
    out.problems.push_back("coloring does not verify");
    return out;
  }

  try {
    Structures s = extract(g, c);
    EdgeSet f = g.no_edges();
    for (const auto& cyc : j.at("two_factor")) f |= detail::edges_along(g, cyc.get<std::vector<Vertex>>(), true);
    EdgeSet m = g.no_edges();
    for (const auto& e : j.at("matching")) {
      auto id = g.edge_between(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
      if (!id) throw Error(Errc::MalformedCertificate, "matching edge not in graph");
      m.insert(*id);
    }
    EdgeSet p = g.no_edges();
    for (const auto& path : j.at("f_matching")) p |= detail::edges_along(g, path.get<std::vector<Vertex>>(), false);
    EdgeSet l = g.no_edges();
    for (const auto& loop : j.at("loops")) l |= detail::edges_along(g, loop.at("vertices").get<std::vector<Vertex>>(), true);
    bool ok = true;
    auto expect = [&](bool cond, const char* what) {
      if (!cond) {
        ok = false;
        out.problems.push_back(what);
      }
    };
    expect(f == s.f.edge_set, "two_factor differs from the complement of Y0");
    expect(m == s.m.edges, "matching differs from X0");
    expect(p == s.fm.edge_set, "f_matching differs from X2");
    expect(l == s.fc.edge_set, "loops differ from the F-complement");
    out.structures_match = ok;
  } catch (const json::exception& e) {
    out.problems.push_back(std::string("structures unreadable: ") + e.what());
  } catch (const Error& e) {
    out.problems.push_back(e.what());
  }
  return out;
}

}  // namespace z4z2
