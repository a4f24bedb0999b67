#ifndef PVC_CERTIFICATE_HPP
#define PVC_CERTIFICATE_HPP

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pvc/coloring.hpp"
#include "pvc/graph.hpp"

namespace pvc {

// Certificate text:
//
//   vertex-coloring palette=3        edge-coloring palette=2
//   0:1                              0-1:1
//   1:2                              1-2:2
//   ...                              ...
//
// Entries may appear in any order and may share a line; every vertex (edge)
// must be listed exactly once. palette=0 carries no entries.

inline std::string format_certificate(const VertexColoring& c) {
  std::ostringstream out;
  out << "vertex-coloring palette=" << c.palette << '\n';
  for (std::size_t v = 0; v < c.colors.size(); ++v) out << v << ':' << c.colors[v] << '\n';
  return out.str();
}

inline std::string format_certificate(const Graph& g, const EdgeColoring& c) {
  std::ostringstream out;
  out << "edge-coloring palette=" << c.palette << '\n';
  for (std::size_t i = 0; i < c.colors.size(); ++i)
    out << g.edges()[i].first << '-' << g.edges()[i].second << ':' << c.colors[i] << '\n';
  return out.str();
}

using Certificate = std::variant<VertexColoring, EdgeColoring>;

namespace detail {

inline int parse_int(std::string_view s, const char* what) {
  if (s.empty()) throw std::invalid_argument(std::string("certificate: missing ") + what);
  int value = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') throw std::invalid_argument(std::string("certificate: bad ") + what + " '" + std::string(s) + "'");
    value = value * 10 + (ch - '0');
    if (value > 1'000'000) throw std::invalid_argument("certificate: number too large");
  }
  return value;
}

}  // namespace detail

/// Parses either certificate kind against g; validates totality and range.
inline Certificate parse_certificate(const Graph& g, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string kind, palette_field;
  if (!(in >> kind >> palette_field)) throw std::invalid_argument("certificate: missing header");
  if (!palette_field.starts_with("palette=")) throw std::invalid_argument("certificate: expected palette=<p>");
  const int palette = detail::parse_int(std::string_view(palette_field).substr(8), "palette");

  std::vector<std::string> entries;
  for (std::string tok; in >> tok;) entries.push_back(tok);

  if (kind == "vertex-coloring") {
    VertexColoring c;
    c.palette = palette;
    if (palette == 0) {
      if (!entries.empty()) throw std::invalid_argument("certificate: palette 0 takes no entries");
      return c;
    }
    c.colors.assign(static_cast<std::size_t>(g.order()), 0);
    for (const auto& e : entries) {
      const auto colon = e.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("certificate: entry '" + e + "' is not v:color");
      const int v = detail::parse_int(std::string_view(e).substr(0, colon), "vertex");
      const int col = detail::parse_int(std::string_view(e).substr(colon + 1), "color");
      if (v >= g.order()) throw std::invalid_argument("certificate: vertex " + std::to_string(v) + " out of range");
      if (c.colors[v] != 0) throw std::invalid_argument("certificate: vertex " + std::to_string(v) + " listed twice");
      c.colors[v] = col;
    }
    if (std::count(c.colors.begin(), c.colors.end(), 0))
      throw std::invalid_argument("certificate: not every vertex is colored");
    validate_coloring(g, c);
    return c;
  }
  if (kind == "edge-coloring") {
    EdgeColoring c;
    c.palette = palette;
    c.colors.assign(static_cast<std::size_t>(g.size()), 0);
    for (const auto& e : entries) {
      const auto dash = e.find('-'), colon = e.find(':');
      if (dash == std::string::npos || colon == std::string::npos || colon < dash)
        throw std::invalid_argument("certificate: entry '" + e + "' is not u-v:color");
      const int u = detail::parse_int(std::string_view(e).substr(0, dash), "vertex");
      const int v = detail::parse_int(std::string_view(e).substr(dash + 1, colon - dash - 1), "vertex");
      const int col = detail::parse_int(std::string_view(e).substr(colon + 1), "color");
      if (u >= g.order() || v >= g.order() || u == v || !g.adjacent(u, v))
        throw std::invalid_argument("certificate: " + e + " is not an edge of the graph");
      const int id = g.edge_index(u, v);
      if (c.colors[id] != 0) throw std::invalid_argument("certificate: edge listed twice");
      c.colors[id] = col;
    }
    if (std::count(c.colors.begin(), c.colors.end(), 0))
      throw std::invalid_argument("certificate: not every edge is colored");
    validate_coloring(g, c);
    return c;
  }
  throw std::invalid_argument("certificate: unknown kind '" + kind + "'");
}

}  // namespace pvc

#endif  // PVC_CERTIFICATE_HPP
