#ifndef PVC_COLORING_HPP
#define PVC_COLORING_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pvc/graph.hpp"

namespace pvc {

/// Total assignment vertex -> color in 1..palette.
///
/// Palette 0 is the empty coloring: no vertex carries a color, so only paths
/// without internal vertices (single edges) can satisfy any predicate.
struct VertexColoring {
  int palette = 0;
  std::vector<int> colors;

  VertexColoring() = default;
  VertexColoring(int palette_size, std::vector<int> assignment)
      : palette(palette_size), colors(std::move(assignment)) {}

  static VertexColoring uniform(int n, int color = 1) {
    return VertexColoring(color, std::vector<int>(static_cast<std::size_t>(n), color));
  }

  /// 0 means uncolored (only under the empty palette).
  int operator[](Vertex v) const { return colors.empty() ? 0 : colors[v]; }
  bool empty() const { return palette == 0; }

  friend bool operator==(const VertexColoring&, const VertexColoring&) = default;
};

/// Total assignment edge -> color, indexed by Graph::edges() order.
struct EdgeColoring {
  int palette = 0;
  std::vector<int> colors;

  int of(const Graph& g, Vertex u, Vertex v) const { return colors[g.edge_index(u, v)]; }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

/// Vertex sequence x_0 = u, ..., x_len = v.
using PathWitness = std::vector<Vertex>;

struct PairPaths {
  Vertex u = 0, v = 0;
  std::vector<PathWitness> paths;
};

/// Outcome of a whole-graph predicate: witnesses per pair on pass, the
/// lexicographically first failing pair otherwise.
struct Verdict {
  bool pass = false;
  std::vector<PairPaths> witness;
  std::optional<std::pair<Vertex, Vertex>> failing_pair;

  static Verdict passed(std::vector<PairPaths> w = {}) { return {true, std::move(w), std::nullopt}; }
  static Verdict failed(Vertex u, Vertex v) { return {false, {}, std::make_pair(u, v)}; }
  explicit operator bool() const { return pass; }
};

inline void validate_coloring(const Graph& g, const VertexColoring& c) {
  if (c.palette < 0) throw std::invalid_argument("negative palette");
  if (c.palette == 0) {
    if (!c.colors.empty()) throw std::invalid_argument("palette 0 requires an empty assignment");
    return;
  }
  if (static_cast<int>(c.colors.size()) != g.order())
    throw std::invalid_argument("vertex coloring must assign every vertex");
  for (int x : c.colors)
    if (x < 1 || x > c.palette) throw std::invalid_argument("vertex color outside 1..palette");
}

inline void validate_coloring(const Graph& g, const EdgeColoring& c) {
  if (static_cast<int>(c.colors.size()) != g.size())
    throw std::invalid_argument("edge coloring must assign every edge");
  for (int x : c.colors)
    if (x < 1 || x > c.palette) throw std::invalid_argument("edge color outside 1..palette");
}

inline void validate_path(const Graph& g, const PathWitness& p) {
  if (p.size() < 2) throw std::invalid_argument("path needs at least two vertices");
  VertexSet seen = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= g.order()) throw std::invalid_argument("path vertex out of range");
    if (contains(seen, p[i])) throw std::invalid_argument("path repeats a vertex");
    seen |= bit(p[i]);
    if (i && !g.adjacent(p[i - 1], p[i])) throw std::invalid_argument("path uses a non-edge");
  }
}

/// Consecutive internal vertices differ in color; every internal vertex must
/// be colored. Endpoint colors are unconstrained.
inline bool is_vertex_proper_path(const Graph& g, const VertexColoring& c, const PathWitness& p) {
  validate_path(g, p);
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    if (c[p[i]] == 0) return false;
    if (i >= 2 && c[p[i]] == c[p[i - 1]]) return false;
  }
  return true;
}

/// Internal vertices pairwise distinct in color.
inline bool is_vertex_rainbow_path(const Graph& g, const VertexColoring& c, const PathWitness& p) {
  validate_path(g, p);
  std::vector<int> seen;
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    const int x = c[p[i]];
    if (x == 0 || std::find(seen.begin(), seen.end(), x) != seen.end()) return false;
    seen.push_back(x);
  }
  return true;
}

/// Consecutive edges differ in color.
inline bool is_proper_edge_path(const Graph& g, const EdgeColoring& ec, const PathWitness& p) {
  validate_path(g, p);
  for (std::size_t i = 2; i < p.size(); ++i)
    if (ec.of(g, p[i - 2], p[i - 1]) == ec.of(g, p[i - 1], p[i])) return false;
  return true;
}

/// Adjacent vertices always differ (and every vertex is colored).
inline bool is_proper_coloring(const Graph& g, const VertexColoring& c) {
  if (c.empty()) return false;
  for (auto [u, v] : g.edges())
    if (c[u] == c[v]) return false;
  return true;
}

}  // namespace pvc

#endif  // PVC_COLORING_HPP
