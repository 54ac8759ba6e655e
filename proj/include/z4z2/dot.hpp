#pragma once

#include "coloring.hpp"

#include <sstream>
#include <string>

namespace z4z2 {

/// DOT rendering of a coloring: F edges coloured per cycle, M dashed,
/// F-path edges bold, every edge labelled with its (x,y) colour.
inline std::string to_dot(const CubicGraph& g, const EdgeColoring& c) {
  static const char* palette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "deeppink", "teal"};
  Structures s = extract(g, c);
  std::ostringstream os;
  os << "graph G {\n  node [shape=circle];\n";
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    os << "  " << ed.u << " -- " << ed.v << " [label=\"" << int(c[e].x) << ',' << int(c[e].y) << '"';
    if (s.f.edge_set.contains(e)) {
      int cyc = s.f.cycle_of[static_cast<std::size_t>(ed.u)];
      os << ", color=" << palette[cyc % 8];
    } else {
      os << ", color=gray";
    }
    if (s.m.edges.contains(e)) os << ", style=dashed";
    if (s.fm.edge_set.contains(e)) os << ", penwidth=3";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace z4z2
