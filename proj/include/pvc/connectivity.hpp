#ifndef PVC_CONNECTIVITY_HPP
#define PVC_CONNECTIVITY_HPP

#include <deque>
#include <limits>
#include <vector>

#include "pvc/graph.hpp"

namespace pvc {

/// Maximum number of internally disjoint u-v paths whose internal vertices lie
/// in `allowed`, ignoring colors. The direct edge uv counts once when
/// `use_edge` is set. Stops early once `limit` paths are found.
///
/// Unit vertex capacities via the usual in/out split, augmenting paths by BFS.
inline int local_connectivity(const Graph& g, Vertex u, Vertex v, VertexSet allowed, bool use_edge = true,
                              int limit = std::numeric_limits<int>::max()) {
  int found = (use_edge && g.adjacent(u, v)) ? 1 : 0;
  if (found >= limit) return found;

  allowed &= ~(bit(u) | bit(v));
  const VertexSet live = allowed | bit(u) | bit(v);
  const int n = g.order();
  const int nodes = 2 * n;
  // node 2x = x_in, 2x+1 = x_out
  std::vector<int> cap(static_cast<std::size_t>(nodes) * nodes, 0);
  auto c = [&](int a, int b) -> int& { return cap[static_cast<std::size_t>(a) * nodes + b]; };
  constexpr int kInf = 1 << 20;
  for (VertexSet s = live; s; s &= s - 1) {
    const Vertex x = lowest(s);
    c(2 * x, 2 * x + 1) = (x == u || x == v) ? kInf : 1;
    for (VertexSet t = g.neighbors(x) & live; t; t &= t - 1) {
      const Vertex y = lowest(t);
      if ((x == u && y == v) || (x == v && y == u)) continue;
      c(2 * x + 1, 2 * y) = 1;
    }
  }
  const int source = 2 * u + 1, sink = 2 * v;
  std::vector<int> parent(static_cast<std::size_t>(nodes));
  while (found < limit) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[source] = source;
    std::deque<int> queue{source};
    while (!queue.empty() && parent[sink] < 0) {
      const int a = queue.front();
      queue.pop_front();
      for (int b = 0; b < nodes; ++b)
        if (parent[b] < 0 && c(a, b) > 0) {
          parent[b] = a;
          queue.push_back(b);
        }
    }
    if (parent[sink] < 0) break;
    for (int b = sink; b != source; b = parent[b]) {
      c(parent[b], b) -= 1;
      c(b, parent[b]) += 1;
    }
    ++found;
  }
  return found;
}

/// Vertex connectivity. Complete graphs get n-1; disconnected graphs get 0.
inline int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 2 || !g.is_connected()) return 0;
  if (g.is_complete()) return n - 1;
  int best = n - 1;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) best = std::min(best, local_connectivity(g, u, v, g.vertices(), false, best));
  return best;
}

}  // namespace pvc

#endif  // PVC_CONNECTIVITY_HPP
