#ifndef PVC_GEODESIC_HPP
#define PVC_GEODESIC_HPP

#include <optional>
#include <vector>

#include "pvc/coloring.hpp"
#include "pvc/graph.hpp"

namespace pvc {

// Both searches walk the layered DAG of u-v geodesics: layer i holds the
// vertices x with d(u,x) = i and d(x,v) = d(u,v) - i.

/// Vertex-proper u-v geodesic by DP over the layers. reach[x] records whether
/// some proper prefix u..x exists; an arc between two internal vertices is
/// admitted only when their colors differ. Predecessors are the least id.
inline std::optional<PathWitness> vertex_proper_geodesic(const Graph& g, const DistanceMatrix& dist,
                                                         const VertexColoring& c, Vertex u, Vertex v) {
  const int d = dist(u, v);
  if (d == DistanceMatrix::kUnreachable || u == v) return std::nullopt;
  if (d == 1) return PathWitness{u, v};
  std::vector<Vertex> pred(static_cast<std::size_t>(g.order()), -1);
  VertexSet reached = bit(u);
  for (int layer = 1; layer <= d; ++layer) {
    const VertexSet candidates = dist.geodesic_layer(u, v, layer);
    VertexSet next = 0;
    for (VertexSet s = candidates; s; s &= s - 1) {
      const Vertex x = lowest(s);
      const bool internal = layer < d;
      if (internal && c[x] == 0) continue;
      for (VertexSet t = g.neighbors(x) & reached; t; t &= t - 1) {
        const Vertex y = lowest(t);
        if (internal && layer >= 2 && c[y] == c[x]) continue;
        pred[x] = y;
        next |= bit(x);
        break;
      }
    }
    if (!next) return std::nullopt;
    reached = next;
  }
  PathWitness path(static_cast<std::size_t>(d) + 1);
  Vertex x = v;
  for (int i = d; i >= 0; --i) {
    path[i] = x;
    x = pred[x];
  }
  return path;
}

namespace detail {

inline bool rainbow_extend(const Graph& g, const DistanceMatrix& dist, const VertexColoring& c, Vertex v, int d,
                           PathWitness& path, std::uint64_t used) {
  const Vertex x = path.back();
  const int layer = static_cast<int>(path.size()) - 1;
  if (layer == d) return x == v;
  for (VertexSet s = g.neighbors(x); s; s &= s - 1) {
    const Vertex y = lowest(s);
    if (dist(path.front(), y) != layer + 1 || dist(y, v) != d - layer - 1) continue;
    if (y != v) {
      const int col = c[y];
      if (col == 0 || ((used >> (col - 1)) & 1U)) continue;
      path.push_back(y);
      if (rainbow_extend(g, dist, c, v, d, path, used | (std::uint64_t{1} << (col - 1)))) return true;
    } else {
      path.push_back(y);
      if (rainbow_extend(g, dist, c, v, d, path, used)) return true;
    }
    path.pop_back();
  }
  return false;
}

}  // namespace detail

/// Vertex-rainbow u-v geodesic by depth-first search of the layered DAG,
/// carrying the set of internal colors used so far.
inline std::optional<PathWitness> vertex_rainbow_geodesic(const Graph& g, const DistanceMatrix& dist,
                                                          const VertexColoring& c, Vertex u, Vertex v) {
  const int d = dist(u, v);
  if (d == DistanceMatrix::kUnreachable || u == v) return std::nullopt;
  PathWitness path{u};
  if (detail::rainbow_extend(g, dist, c, v, d, path, 0)) return path;
  return std::nullopt;
}

inline std::optional<PathWitness> has_vertex_proper_geodesic(const Graph& g, const VertexColoring& c, Vertex u,
                                                             Vertex v) {
  return vertex_proper_geodesic(g, DistanceMatrix(g), c, u, v);
}

inline std::optional<PathWitness> has_vertex_rainbow_geodesic(const Graph& g, const VertexColoring& c, Vertex u,
                                                              Vertex v) {
  return vertex_rainbow_geodesic(g, DistanceMatrix(g), c, u, v);
}

}  // namespace pvc

#endif  // PVC_GEODESIC_HPP
