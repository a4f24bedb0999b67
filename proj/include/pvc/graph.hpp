#ifndef PVC_GRAPH_HPP
#define PVC_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pvc {

using Vertex = int;
/// Bit i set means vertex i is a member.
using VertexSet = std::uint64_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kMaxOrder = 64;

inline constexpr VertexSet bit(Vertex v) { return VertexSet{1} << v; }
inline constexpr bool contains(VertexSet s, Vertex v) { return (s >> v) & 1U; }
inline int popcount(VertexSet s) { return std::popcount(s); }
inline Vertex lowest(VertexSet s) { return std::countr_zero(s); }
inline VertexSet full_set(int n) { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }

/// Thrown when an operation needs a connected graph and did not get one.
class DisconnectedGraph : public std::domain_error {
 public:
  DisconnectedGraph() : std::domain_error("graph is disconnected") {}
};

/// Simple undirected graph on vertices 0..n-1, adjacency kept as bitset rows.
/// Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Validates and deduplicates the edge list.
  Graph(int n, std::span<const Edge> edges) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
    if (n < 1 || n > kMaxOrder)
      throw std::invalid_argument("graph order must be in 1.." + std::to_string(kMaxOrder));
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") has a vertex out of range");
      if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
      rows_[u] |= bit(v);
      rows_[v] |= bit(u);
    }
    index_edges();
  }

  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds from adjacency rows; rejects asymmetric rows and loops.
  static Graph from_rows(std::vector<VertexSet> rows) {
    const int n = static_cast<int>(rows.size());
    if (n < 1 || n > kMaxOrder)
      throw std::invalid_argument("graph order must be in 1.." + std::to_string(kMaxOrder));
    for (int u = 0; u < n; ++u) {
      if (contains(rows[u], u)) throw std::invalid_argument("self-loop in adjacency rows");
      if (rows[u] & ~full_set(n)) throw std::invalid_argument("adjacency row out of range");
      for (VertexSet s = rows[u]; s; s &= s - 1)
        if (!contains(rows[lowest(s)], u))
          throw std::invalid_argument("adjacency rows are not symmetric");
    }
    Graph g;
    g.n_ = n;
    g.rows_ = std::move(rows);
    g.index_edges();
    return g;
  }

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  VertexSet vertices() const { return full_set(n_); }

  bool adjacent(Vertex u, Vertex v) const { return contains(rows_[u], v); }
  VertexSet neighbors(Vertex v) const { return rows_[v]; }
  int degree(Vertex v) const { return popcount(rows_[v]); }
  int max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }
  const std::vector<VertexSet>& rows() const { return rows_; }

  /// Edges (u < v) in lexicographic order; this order indexes edge colorings.
  const std::vector<Edge>& edges() const { return edges_; }
  /// Position of edge uv in edges(), or -1.
  int edge_index(Vertex u, Vertex v) const { return edge_id_[static_cast<std::size_t>(u) * n_ + v]; }

  bool is_complete() const { return size() == n_ * (n_ - 1) / 2; }

  bool is_connected() const {
    VertexSet seen = bit(0), frontier = bit(0);
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet s = frontier; s; s &= s - 1) next |= rows_[lowest(s)];
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == vertices();
  }

  /// Induced subgraph relabelled in ascending vertex order.
  Graph induced(VertexSet keep) const {
    std::vector<Vertex> ids;
    for (VertexSet s = keep; s; s &= s - 1) ids.push_back(lowest(s));
    std::vector<Edge> es;
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = i + 1; j < ids.size(); ++j)
        if (adjacent(ids[i], ids[j])) es.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph(static_cast<int>(ids.size()), es);
  }

  /// Graph with vertex v renamed perm[v].
  Graph relabeled(std::span<const Vertex> perm) const {
    std::vector<Edge> es;
    es.reserve(edges_.size());
    for (auto [u, v] : edges_) es.emplace_back(perm[u], perm[v]);
    return Graph(n_, es);
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

 private:
  void index_edges() {
    edges_.clear();
    edge_id_.assign(static_cast<std::size_t>(n_) * n_, -1);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (adjacent(u, v)) {
          const int id = static_cast<int>(edges_.size());
          edge_id_[static_cast<std::size_t>(u) * n_ + v] = id;
          edge_id_[static_cast<std::size_t>(v) * n_ + u] = id;
          edges_.emplace_back(u, v);
        }
  }

  int n_ = 0;
  std::vector<VertexSet> rows_;
  std::vector<Edge> edges_;
  std::vector<int> edge_id_;
};

inline Graph build_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

/// Hop distances; kUnreachable marks pairs in different components.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = std::numeric_limits<int>::max();

  DistanceMatrix() = default;
  explicit DistanceMatrix(const Graph& g) : n_(g.order()), d_(static_cast<std::size_t>(n_) * n_, kUnreachable) {
    for (Vertex s = 0; s < n_; ++s) {
      VertexSet seen = bit(s), frontier = bit(s);
      for (int depth = 0; frontier; ++depth) {
        VertexSet next = 0;
        for (VertexSet f = frontier; f; f &= f - 1) {
          const Vertex x = lowest(f);
          at(s, x) = depth;
          next |= g.neighbors(x);
        }
        frontier = next & ~seen;
        seen |= next;
      }
    }
  }

  int order() const { return n_; }
  int operator()(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }

  /// Largest finite entry.
  int max_finite() const {
    int best = 0;
    for (int x : d_)
      if (x != kUnreachable) best = std::max(best, x);
    return best;
  }
  bool all_finite() const {
    return std::none_of(d_.begin(), d_.end(), [](int x) { return x == kUnreachable; });
  }

  /// Vertices at distance `layer` from u that also lie on some u-v geodesic.
  VertexSet geodesic_layer(Vertex u, Vertex v, int layer) const {
    const int d = (*this)(u, v);
    VertexSet s = 0;
    for (Vertex x = 0; x < n_; ++x)
      if ((*this)(u, x) == layer && (*this)(x, v) == d - layer) s |= bit(x);
    return s;
  }

 private:
  int& at(Vertex u, Vertex v) { return d_[static_cast<std::size_t>(u) * n_ + v]; }

  int n_ = 0;
  std::vector<int> d_;
};

inline DistanceMatrix all_pairs_distances(const Graph& g) { return DistanceMatrix(g); }

inline int diameter(const DistanceMatrix& d) {
  if (!d.all_finite()) throw DisconnectedGraph();
  return d.max_finite();
}

inline int diameter(const Graph& g) { return diameter(DistanceMatrix(g)); }

}  // namespace pvc

#endif  // PVC_GRAPH_HPP
