#ifndef PVC_TESTS_SUPPORT_HPP
#define PVC_TESTS_SUPPORT_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "pvc/enumerate.hpp"
#include "pvc/family.hpp"
#include "pvc/graph.hpp"

namespace pvc::test {

inline Graph path(int n) { return make_family(FamilyDescriptor::path(n)); }
inline Graph cycle(int n) { return make_family(FamilyDescriptor::cycle(n)); }
inline Graph complete(int n) { return make_family(FamilyDescriptor::complete(n)); }
inline Graph wheel(int n) { return make_family(FamilyDescriptor::wheel(n)); }
inline Graph bipartite(int a, int b) { return make_family(FamilyDescriptor::complete_bipartite(a, b)); }
inline Graph multipartite(std::vector<int> parts) {
  return make_family(FamilyDescriptor::complete_multipartite(std::move(parts)));
}

// Triangle 0,1,2 with pendants 3,4,5.
inline Graph net() { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}); }

inline Graph petersen() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(i, i + 5);
    es.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, es);
}

/// Random spanning tree plus each remaining pair with probability p.
inline Graph random_connected(std::mt19937& rng, int n, double p = 0.3) {
  std::vector<Edge> es;
  std::bernoulli_distribution extra(p);
  for (int v = 1; v < n; ++v) es.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [u, v] : es) u = perm[u], v = perm[v];
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (extra(rng)) es.emplace_back(u, v);
  return Graph(n, es);
}

inline const std::vector<Graph>& small_corpus() {
  static const std::vector<Graph> corpus = enumerate_connected_graphs(kMinEnumeratedOrder, kMaxEnumeratedOrder);
  return corpus;
}

/// Every simple u-v path, by plain DFS.
inline std::vector<std::vector<Vertex>> all_simple_paths(const Graph& g, Vertex u, Vertex v) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> cur{u};
  std::function<void(VertexSet)> dfs = [&](VertexSet used) {
    const Vertex x = cur.back();
    if (x == v) {
      out.push_back(cur);
      return;
    }
    for (Vertex y = 0; y < g.order(); ++y)
      if (g.adjacent(x, y) && !contains(used, y)) {
        cur.push_back(y);
        dfs(used | bit(y));
        cur.pop_back();
      }
  };
  dfs(bit(u));
  return out;
}

inline std::vector<int> colors_from_index(std::uint64_t index, int n, int palette) {
  std::vector<int> colors(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    colors[i] = static_cast<int>(index % palette) + 1;
    index /= palette;
  }
  return colors;
}

}  // namespace pvc::test

#endif  // PVC_TESTS_SUPPORT_HPP
