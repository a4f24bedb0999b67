#ifndef PVC_VERDICTS_HPP
#define PVC_VERDICTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "pvc/coloring.hpp"
#include "pvc/connectivity.hpp"
#include "pvc/disjoint_paths.hpp"
#include "pvc/geodesic.hpp"
#include "pvc/graph.hpp"
#include "pvc/guards.hpp"

namespace pvc {

// Whole-graph predicates. Each checker front-loads the per-graph work
// (distances, connectivity, guards) so that passes() can be called once per
// candidate coloring inside the solvers; verdict() adds witnesses. Pairs are
// visited in lexicographic order, so the first failure is the reported one.

namespace detail {

template <class PairFn>
Verdict all_pairs_verdict(int n, bool want_witness, PairFn&& pair_paths) {
  std::vector<PairPaths> witness;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      std::optional<std::vector<PathWitness>> paths = pair_paths(u, v);
      if (!paths) return Verdict::failed(u, v);
      if (want_witness) witness.push_back({u, v, std::move(*paths)});
    }
  return Verdict::passed(std::move(witness));
}

inline std::optional<std::vector<PathWitness>> wrap(std::optional<PathWitness> p) {
  if (!p) return std::nullopt;
  return std::vector<PathWitness>{std::move(*p)};
}

}  // namespace detail

/// Every pair joined by a vertex-proper geodesic.
class StrongProperChecker {
 public:
  explicit StrongProperChecker(const Graph& g) : g_(g), dist_(g) {
    if (!dist_.all_finite()) throw DisconnectedGraph();
  }

  bool passes(const VertexColoring& c) const {
    const int n = g_.order();
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        const int d = dist_(u, v);
        if (d == 1) continue;
        if (c.empty()) return false;
        if (d == 2) continue;
        if (!vertex_proper_geodesic(g_, dist_, c, u, v)) return false;
      }
    return true;
  }

  Verdict verdict(const VertexColoring& c) const {
    validate_coloring(g_, c);
    return detail::all_pairs_verdict(g_.order(), true, [&](Vertex u, Vertex v) {
      return detail::wrap(vertex_proper_geodesic(g_, dist_, c, u, v));
    });
  }

 private:
  Graph g_;
  DistanceMatrix dist_;
};

/// Every pair joined by a vertex-rainbow geodesic.
class StrongRainbowChecker {
 public:
  explicit StrongRainbowChecker(const Graph& g) : g_(g), dist_(g) {
    if (!dist_.all_finite()) throw DisconnectedGraph();
  }

  bool passes(const VertexColoring& c) const {
    const int n = g_.order();
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        const int d = dist_(u, v);
        if (d == 1) continue;
        if (c.empty()) return false;
        if (d == 2) continue;
        if (!vertex_rainbow_geodesic(g_, dist_, c, u, v)) return false;
      }
    return true;
  }

  Verdict verdict(const VertexColoring& c) const {
    validate_coloring(g_, c);
    return detail::all_pairs_verdict(g_.order(), true, [&](Vertex u, Vertex v) {
      return detail::wrap(vertex_rainbow_geodesic(g_, dist_, c, u, v));
    });
  }

 private:
  Graph g_;
  DistanceMatrix dist_;
};

/// Every pair joined by k internally disjoint vertex-proper paths.
class ProperKConnectedChecker {
 public:
  ProperKConnectedChecker(const Graph& g, int k, const Guards& guards = {}) : g_(g), k_(k) {
    if (!g.is_connected()) throw DisconnectedGraph();
    if (k < 1 || k > vertex_connectivity(g)) throw NotKConnected(k);
    check_path_system_guard(g, k, guards);
  }

  int k() const { return k_; }

  bool passes(const VertexColoring& c) const {
    if (c.empty() && !g_.is_complete()) return false;
    DisjointPathFinder finder(g_, c);
    const int n = g_.order();
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (!finder.find(u, v, k_)) return false;
    return true;
  }

  Verdict verdict(const VertexColoring& c) const {
    validate_coloring(g_, c);
    DisjointPathFinder finder(g_, c);
    return detail::all_pairs_verdict(g_.order(), true, [&](Vertex u, Vertex v) { return finder.find(u, v, k_); });
  }

 private:
  Graph g_;
  int k_;
};

/// Every pair joined by k internally disjoint proper paths (edge coloring).
class ProperKConnectedEdgeChecker {
 public:
  ProperKConnectedEdgeChecker(const Graph& g, int k, const Guards& guards = {}) : g_(g), k_(k) {
    if (!g.is_connected()) throw DisconnectedGraph();
    if (k < 1 || k > vertex_connectivity(g)) throw NotKConnected(k);
    check_path_system_guard(g, k, guards);
  }

  bool passes(const EdgeColoring& c) const {
    DisjointPathFinder finder(g_, c);
    const int n = g_.order();
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (!finder.find(u, v, k_)) return false;
    return true;
  }

  Verdict verdict(const EdgeColoring& c) const {
    validate_coloring(g_, c);
    DisjointPathFinder finder(g_, c);
    return detail::all_pairs_verdict(g_.order(), true, [&](Vertex u, Vertex v) { return finder.find(u, v, k_); });
  }

 private:
  Graph g_;
  int k_;
};

/// Adjacent vertices differ; the failing pair is the first monochromatic edge.
class ProperColoringChecker {
 public:
  explicit ProperColoringChecker(const Graph& g) : g_(g) {}

  bool passes(const VertexColoring& c) const { return is_proper_coloring(g_, c); }

  Verdict verdict(const VertexColoring& c) const {
    validate_coloring(g_, c);
    for (auto [u, v] : g_.edges())
      if (c[u] == 0 || c[u] == c[v]) return Verdict::failed(u, v);
    return Verdict::passed();
  }

 private:
  Graph g_;
};

inline Verdict is_strong_proper_vertex_connected(const Graph& g, const VertexColoring& c) {
  return StrongProperChecker(g).verdict(c);
}

inline Verdict is_strong_rainbow_vertex_connected(const Graph& g, const VertexColoring& c) {
  return StrongRainbowChecker(g).verdict(c);
}

inline Verdict is_proper_vertex_k_connected(const Graph& g, const VertexColoring& c, int k,
                                            const Guards& guards = {}) {
  return ProperKConnectedChecker(g, k, guards).verdict(c);
}

inline Verdict is_proper_k_connected_edges(const Graph& g, const EdgeColoring& c, int k,
                                           const Guards& guards = {}) {
  return ProperKConnectedEdgeChecker(g, k, guards).verdict(c);
}

}  // namespace pvc

#endif  // PVC_VERDICTS_HPP
