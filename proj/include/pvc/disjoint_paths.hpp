#ifndef PVC_DISJOINT_PATHS_HPP
#define PVC_DISJOINT_PATHS_HPP

#include <deque>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "pvc/coloring.hpp"
#include "pvc/connectivity.hpp"
#include "pvc/graph.hpp"
#include "pvc/guards.hpp"

namespace pvc {

class NotKConnected : public std::domain_error {
 public:
  explicit NotKConnected(int k)
      : std::domain_error("graph is not " + std::to_string(k) + "-connected") {}
};

/// Searches for k internally disjoint u-v paths that are vertex-proper (under
/// a vertex coloring) or proper (under an edge coloring).
///
/// Paths are committed one at a time, each enumerated shortest-first with
/// neighbors in ascending id, and the remaining k-1 are searched among the
/// unused vertices. A branch is cut as soon as the color-blind Menger number
/// of what remains drops below the number of paths still needed. Failed
/// (remaining vertices, edge still free, k) states are memoized per pair.
class DisjointPathFinder {
 public:
  DisjointPathFinder(const Graph& g, const VertexColoring& c) : g_(g), vc_(&c) {}
  DisjointPathFinder(const Graph& g, const EdgeColoring& c) : g_(g), ec_(&c) {}

  std::optional<std::vector<PathWitness>> find(Vertex u, Vertex v, int k) {
    u_ = u;
    v_ = v;
    failed_.clear();
    std::vector<PathWitness> out;
    if (k <= 0) return out;
    if (search(g_.vertices() & ~(bit(u) | bit(v)), true, k, out)) return out;
    return std::nullopt;
  }

 private:
  bool admissible(const PathWitness& prefix, Vertex next) const {
    if (vc_) {
      if (next == v_) return true;
      const int col = (*vc_)[next];
      if (col == 0) return false;
      return prefix.size() < 2 || (*vc_)[prefix.back()] != col;
    }
    if (prefix.size() < 2) return true;
    const Vertex a = prefix[prefix.size() - 2], b = prefix.back();
    return ec_->of(g_, a, b) != ec_->of(g_, b, next);
  }

  // For vertex colorings a single proper path reduces to reachability: walks
  // shortcut to paths without breaking properness, so BFS over properly
  // colored arcs among the allowed vertices decides it.
  std::optional<PathWitness> single_vertex_proper(VertexSet avail, bool edge_free) const {
    if (edge_free && g_.adjacent(u_, v_)) return PathWitness{u_, v_};
    const VertexColoring& c = *vc_;
    VertexSet colored = 0;
    for (VertexSet s = avail; s; s &= s - 1)
      if (c[lowest(s)] != 0) colored |= bit(lowest(s));
    std::vector<Vertex> parent(static_cast<std::size_t>(g_.order()), -1);
    std::deque<Vertex> queue;
    VertexSet seen = g_.neighbors(u_) & colored;
    for (VertexSet s = seen; s; s &= s - 1) {
      parent[lowest(s)] = u_;
      queue.push_back(lowest(s));
    }
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      if (g_.adjacent(x, v_)) {
        PathWitness p{v_};
        for (Vertex y = x; y != u_; y = parent[y]) p.push_back(y);
        p.push_back(u_);
        return PathWitness(p.rbegin(), p.rend());
      }
      for (VertexSet s = g_.neighbors(x) & colored & ~seen; s; s &= s - 1) {
        const Vertex y = lowest(s);
        if (c[y] == c[x]) continue;
        seen |= bit(y);
        parent[y] = x;
        queue.push_back(y);
      }
    }
    return std::nullopt;
  }

  bool search(VertexSet avail, bool edge_free, int k, std::vector<PathWitness>& out) {
    if (k == 0) return true;
    const auto key = std::make_tuple(avail, edge_free, k);
    if (failed_.contains(key)) return false;
    if (local_connectivity(g_, u_, v_, avail, edge_free, k) < k) {
      failed_.insert(key);
      return false;
    }
    if (k == 1 && vc_) {
      if (auto p = single_vertex_proper(avail, edge_free)) {
        out.push_back(std::move(*p));
        return true;
      }
      failed_.insert(key);
      return false;
    }

    // Hop distance to v through allowed vertices, used to prune by length.
    std::vector<int> to_v(static_cast<std::size_t>(g_.order()), 1 << 20);
    {
      VertexSet seen = bit(v_), frontier = bit(v_);
      for (int depth = 0; frontier; ++depth) {
        VertexSet next = 0;
        for (VertexSet f = frontier; f; f &= f - 1) {
          to_v[lowest(f)] = depth;
          next |= g_.neighbors(lowest(f)) & avail;
        }
        frontier = next & ~seen;
        seen |= next;
      }
    }

    if (edge_free && g_.adjacent(u_, v_)) {
      out.push_back({u_, v_});
      if (search(avail, false, k - 1, out)) return true;
      out.pop_back();
    }
    const int longest = popcount(avail) + 1;
    PathWitness path{u_};
    for (int len = 2; len <= longest; ++len)
      if (extend(avail, edge_free, k, len, path, 0, to_v, out)) return true;
    failed_.insert(key);
    return false;
  }

  bool extend(VertexSet avail, bool edge_free, int k, int len, PathWitness& path, VertexSet used,
              const std::vector<int>& to_v, std::vector<PathWitness>& out) {
    const Vertex x = path.back();
    const int steps = static_cast<int>(path.size()) - 1;
    if (steps == len - 1) {
      if (!g_.adjacent(x, v_) || !admissible(path, v_)) return false;
      path.push_back(v_);
      out.push_back(path);
      path.pop_back();
      if (search(avail & ~used, edge_free, k - 1, out)) return true;
      out.pop_back();
      return false;
    }
    for (VertexSet s = g_.neighbors(x) & avail & ~used; s; s &= s - 1) {
      const Vertex y = lowest(s);
      if (steps + 1 + to_v[y] > len) continue;
      if (!admissible(path, y)) continue;
      path.push_back(y);
      const bool done = extend(avail, edge_free, k, len, path, used | bit(y), to_v, out);
      path.pop_back();
      if (done) return true;
    }
    return false;
  }

  const Graph& g_;
  const VertexColoring* vc_ = nullptr;
  const EdgeColoring* ec_ = nullptr;
  Vertex u_ = 0, v_ = 0;
  std::set<std::tuple<VertexSet, bool, int>> failed_;
};

inline void check_path_system_guard(const Graph& g, int k, const Guards& guards) {
  if (k > guards.max_k) throw GuardViolation("disjoint path search", k);
  if (k <= 2)
    check_order_guard("disjoint path search with k <= 2", g.order(), guards.max_n_paths_k2);
  else
    check_order_guard("disjoint path search with k >= 3", g.order(), guards.max_n_paths_k3);
}

/// k internally disjoint vertex-proper u-v paths, or nothing.
/// Throws NotKConnected when k exceeds the vertex connectivity.
inline std::optional<std::vector<PathWitness>> find_k_disjoint_vertex_proper_paths(
    const Graph& g, const VertexColoring& c, Vertex u, Vertex v, int k, const Guards& guards = {}) {
  if (k < 1 || k > vertex_connectivity(g)) throw NotKConnected(k);
  check_path_system_guard(g, k, guards);
  return DisjointPathFinder(g, c).find(u, v, k);
}

/// k internally disjoint proper (edge-colored) u-v paths, or nothing.
inline std::optional<std::vector<PathWitness>> find_k_disjoint_proper_edge_paths(
    const Graph& g, const EdgeColoring& c, Vertex u, Vertex v, int k, const Guards& guards = {}) {
  if (k < 1 || k > vertex_connectivity(g)) throw NotKConnected(k);
  check_path_system_guard(g, k, guards);
  return DisjointPathFinder(g, c).find(u, v, k);
}

}  // namespace pvc

#endif  // PVC_DISJOINT_PATHS_HPP
