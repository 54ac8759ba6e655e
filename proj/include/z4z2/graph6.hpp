#pragma once

#include "graph.hpp"

#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace z4z2 {

/// Order and edge list of an arbitrary simple graph in graph6.
struct Graph6Data {
  int order = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
};

inline Graph6Data decode_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Error(Errc::MalformedGraph6, "empty input");
  for (char c : text)
    if (c < 63 || c > 126) throw Error(Errc::MalformedGraph6, "byte outside 63..126");

  auto val = [&](std::size_t i) { return static_cast<long long>(text[i]) - 63; };
  std::size_t pos = 0;
  long long n = 0;
  if (text[0] != 126) {
    n = val(0);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) throw Error(Errc::MalformedGraph6, "truncated order field");
    n = (val(1) << 12) | (val(2) << 6) | val(3);
    pos = 4;
  } else {
    if (text.size() < 8) throw Error(Errc::MalformedGraph6, "truncated order field");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | val(i);
    pos = 8;
  }
  const long long bits = n * (n - 1) / 2;
  const long long chunks = (bits + 5) / 6;
  if (static_cast<long long>(text.size() - pos) != chunks)
    throw Error(Errc::MalformedGraph6, "expected " + std::to_string(chunks) + " data bytes, got " +
                                           std::to_string(text.size() - pos));

  Graph6Data out;
  out.order = static_cast<int>(n);
  long long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      long long byte = val(pos + static_cast<std::size_t>(k / 6));
      if ((byte >> (5 - k % 6)) & 1) out.edges.emplace_back(i, j);
    }
  }
  for (; k < chunks * 6; ++k)
    if ((val(pos + static_cast<std::size_t>(k / 6)) >> (5 - k % 6)) & 1)
      throw Error(Errc::MalformedGraph6, "non-zero padding bits");
  return out;
}

/// Parses one graph6 string into a validated cubic graph.
inline CubicGraph parse_graph6(std::string_view text) {
  Graph6Data data = decode_graph6(text);
  return CubicGraph::from_edges(data.order, std::move(data.edges));
}

inline std::string to_graph6(int order, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::string out;
  const long long n = order;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift : {30, 24, 18, 12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  const long long bits = n * (n - 1) / 2;
  std::vector<unsigned char> data(static_cast<std::size_t>((bits + 5) / 6), 0);
  for (auto [a, b] : edges) {
    long long i = std::min(a, b), j = std::max(a, b);
    long long k = j * (j - 1) / 2 + i;
    data[static_cast<std::size_t>(k / 6)] |= static_cast<unsigned char>(1u << (5 - k % 6));
  }
  for (unsigned char c : data) out.push_back(static_cast<char>(c + 63));
  return out;
}

inline std::string to_graph6(const CubicGraph& g) { return to_graph6(g.order(), g.edge_pairs()); }

/// One graph6 record per line; blank lines and lines starting with '#' are skipped.
struct Graph6Line {
  int line_number = 0;
  std::string text;
};

inline std::vector<Graph6Line> read_graph6_lines(std::istream& in) {
  std::vector<Graph6Line> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back({number, line});
  }
  return out;
}

}  // namespace z4z2
