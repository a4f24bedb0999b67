#ifndef PVC_ENUMERATE_HPP
#define PVC_ENUMERATE_HPP

#include <algorithm>
#include <numeric>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pvc/graph.hpp"
#include "pvc/graph6.hpp"

namespace pvc {

/// Upper-triangle adjacency bits in graph6 column order, as a '0'/'1' string.
inline std::string adjacency_bitstring(const Graph& g) {
  std::string s;
  const int n = g.order();
  s.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) s.push_back(g.adjacent(i, j) ? '1' : '0');
  return s;
}

/// Adjacency bitstring packed MSB-first, so numeric order is string order.
inline std::uint64_t adjacency_code(const Graph& g, std::span<const Vertex> perm) {
  const int n = g.order();
  std::uint64_t code = 0;
  for (Vertex j = 1; j < n; ++j) {
    const VertexSet row = g.neighbors(perm[j]);
    for (Vertex i = 0; i < j; ++i) code = (code << 1) | (contains(row, perm[i]) ? 1U : 0U);
  }
  return code;
}

/// Relabelling minimizing the adjacency bitstring over all n! permutations.
/// Fine up to n = 9 or so.
inline Graph canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > 11) throw std::invalid_argument("canonical form by permutation search limited to n <= 11");
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = adjacency_code(g, perm);
  std::vector<Vertex> best_perm = perm;
  while (std::next_permutation(perm.begin(), perm.end())) {
    // perm[new] = old
    const std::uint64_t code = adjacency_code(g, perm);
    if (code < best) {
      best = code;
      best_perm = perm;
    }
  }
  std::vector<Vertex> inverse(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) inverse[best_perm[i]] = i;
  return g.relabeled(inverse);
}

inline std::string canonical_graph6(const Graph& g) { return encode_graph6(canonical_form(g)); }

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

inline constexpr int kMinEnumeratedOrder = 3;
inline constexpr int kMaxEnumeratedOrder = 6;

/// One canonical representative per isomorphism class of connected graphs of
/// order n, ordered by edge count and then by canonical bitstring.
inline std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < kMinEnumeratedOrder || n > kMaxEnumeratedOrder)
    throw std::invalid_argument("built-in enumeration supports orders 3..6; ingest graph6 for larger orders");
  const int slots = n * (n - 1) / 2;
  std::vector<Edge> slot_edges;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) slot_edges.emplace_back(i, j);

  std::set<std::pair<int, std::string>> seen;
  std::vector<Edge> es;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots); ++mask) {
    if (std::popcount(mask) < n - 1) continue;
    es.clear();
    for (int s = 0; s < slots; ++s)
      if ((mask >> s) & 1U) es.push_back(slot_edges[s]);
    Graph g(n, es);
    if (!g.is_connected()) continue;
    seen.emplace(g.size(), adjacency_bitstring(canonical_form(g)));
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (const auto& [m, bits] : seen) {
    es.clear();
    for (int s = 0; s < slots; ++s)
      if (bits[s] == '1') es.push_back(slot_edges[s]);
    out.emplace_back(n, es);
  }
  return out;
}

/// All connected graphs over an inclusive order range, ascending by order.
inline std::vector<Graph> enumerate_connected_graphs(int lo, int hi) {
  std::vector<Graph> out;
  for (int n = lo; n <= hi; ++n) {
    auto part = enumerate_connected_graphs(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace pvc

#endif  // PVC_ENUMERATE_HPP
