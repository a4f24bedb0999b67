#ifndef PVC_FAMILY_HPP
#define PVC_FAMILY_HPP

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "pvc/graph.hpp"

namespace pvc {

enum class FamilyTag { Complete, Cycle, Path, Wheel, CompleteBipartite, CompleteMultipartite, Other };

/// A recognized graph family with its size parameters.
///
///   Path(n), Cycle(n), Complete(n): params = {n}, the order.
///   Wheel(n): params = {n}, the rim length; the graph has n+1 vertices.
///   CompleteBipartite / CompleteMultipartite: params = part sizes, ascending.
struct FamilyDescriptor {
  FamilyTag tag = FamilyTag::Other;
  std::vector<int> params;

  static FamilyDescriptor path(int n) { return {FamilyTag::Path, {n}}; }
  static FamilyDescriptor cycle(int n) { return {FamilyTag::Cycle, {n}}; }
  static FamilyDescriptor complete(int n) { return {FamilyTag::Complete, {n}}; }
  static FamilyDescriptor wheel(int n) { return {FamilyTag::Wheel, {n}}; }
  static FamilyDescriptor complete_bipartite(int a, int b) {
    return {FamilyTag::CompleteBipartite, {std::min(a, b), std::max(a, b)}};
  }
  static FamilyDescriptor complete_multipartite(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end());
    return {FamilyTag::CompleteMultipartite, std::move(parts)};
  }
  static FamilyDescriptor other() { return {}; }

  bool is_partite() const {
    return tag == FamilyTag::CompleteBipartite || tag == FamilyTag::CompleteMultipartite;
  }
  /// Number of parts of a complete multipartite graph.
  int parts() const { return static_cast<int>(params.size()); }
  /// Sum of all part sizes except the largest.
  int m() const { return std::accumulate(params.begin(), params.end() - 1, 0); }

  int order() const {
    switch (tag) {
      case FamilyTag::Wheel: return params.at(0) + 1;
      case FamilyTag::CompleteBipartite:
      case FamilyTag::CompleteMultipartite: return std::accumulate(params.begin(), params.end(), 0);
      case FamilyTag::Other: return 0;
      default: return params.at(0);
    }
  }

  std::string name() const {
    std::ostringstream out;
    switch (tag) {
      case FamilyTag::Path: out << "P_" << params[0]; break;
      case FamilyTag::Cycle: out << "C_" << params[0]; break;
      case FamilyTag::Complete: out << "K_" << params[0]; break;
      case FamilyTag::Wheel: out << "W_" << params[0]; break;
      case FamilyTag::CompleteBipartite:
      case FamilyTag::CompleteMultipartite:
        out << "K_{";
        for (std::size_t i = 0; i < params.size(); ++i) out << (i ? "," : "") << params[i];
        out << "}";
        break;
      case FamilyTag::Other: out << "other"; break;
    }
    return out.str();
  }

  friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

namespace detail {

inline bool all_degrees(const Graph& g, VertexSet s, int d, VertexSet within) {
  for (; s; s &= s - 1)
    if (popcount(g.neighbors(lowest(s)) & within) != d) return false;
  return true;
}

inline bool connected_within(const Graph& g, VertexSet s) {
  if (!s) return true;
  VertexSet seen = bit(lowest(s)), frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f; f &= f - 1) next |= g.neighbors(lowest(f)) & s;
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == s;
}

/// Part sizes if the complement is a disjoint union of cliques, else empty.
inline std::vector<int> multipartite_parts(const Graph& g) {
  const int n = g.order();
  std::vector<int> parts;
  VertexSet assigned = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (contains(assigned, v)) continue;
    const VertexSet part = g.vertices() & ~g.neighbors(v);
    for (VertexSet s = part; s; s &= s - 1)
      if ((g.vertices() & ~g.neighbors(lowest(s))) != part) return {};
    assigned |= part;
    parts.push_back(popcount(part));
  }
  std::sort(parts.begin(), parts.end());
  return parts;
}

}  // namespace detail

/// Recognizes the most specific family in the order
/// Complete > Cycle > Path > Wheel > CompleteBipartite > CompleteMultipartite.
inline FamilyDescriptor recognize_family(const Graph& g) {
  const int n = g.order();
  const VertexSet all = g.vertices();
  if (g.is_complete()) return FamilyDescriptor::complete(n);
  if (!g.is_connected()) return FamilyDescriptor::other();
  // C_4 is reported as K_{2,2}.
  if (n >= 3 && n != 4 && detail::all_degrees(g, all, 2, all)) return FamilyDescriptor::cycle(n);
  if (g.size() == n - 1 && g.max_degree() <= 2) return FamilyDescriptor::path(n);
  if (n >= 5) {
    for (Vertex h = 0; h < n; ++h) {
      if (g.degree(h) != n - 1) continue;
      const VertexSet rim = all & ~bit(h);
      if (detail::all_degrees(g, rim, 2, rim) && detail::connected_within(g, rim))
        return FamilyDescriptor::wheel(n - 1);
    }
  }
  auto parts = detail::multipartite_parts(g);
  if (parts.size() == 2) return FamilyDescriptor::complete_bipartite(parts[0], parts[1]);
  if (parts.size() >= 3) return FamilyDescriptor::complete_multipartite(std::move(parts));
  return FamilyDescriptor::other();
}

/// Canonical labelled instance of a family. Wheels put the hub last; partite
/// families place parts in consecutive id blocks, smallest part first.
inline Graph make_family(const FamilyDescriptor& d) {
  std::vector<Edge> es;
  auto need = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  };
  switch (d.tag) {
    case FamilyTag::Path: {
      need(d.params.size() == 1 && d.params[0] >= 1, "path needs n >= 1");
      const int n = d.params[0];
      for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
      return Graph(n, es);
    }
    case FamilyTag::Cycle: {
      need(d.params.size() == 1 && d.params[0] >= 3, "cycle needs n >= 3");
      const int n = d.params[0];
      for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
      return Graph(n, es);
    }
    case FamilyTag::Complete: {
      need(d.params.size() == 1 && d.params[0] >= 1, "complete graph needs n >= 1");
      const int n = d.params[0];
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
      return Graph(n, es);
    }
    case FamilyTag::Wheel: {
      need(d.params.size() == 1 && d.params[0] >= 3, "wheel needs rim length >= 3");
      const int n = d.params[0];
      for (int i = 0; i < n; ++i) {
        es.emplace_back(i, (i + 1) % n);
        es.emplace_back(i, n);
      }
      return Graph(n + 1, es);
    }
    case FamilyTag::CompleteBipartite:
    case FamilyTag::CompleteMultipartite: {
      const std::size_t want = d.tag == FamilyTag::CompleteBipartite ? 2 : 3;
      need(d.params.size() == want || (want == 3 && d.params.size() > 3), "wrong number of parts");
      need(std::is_sorted(d.params.begin(), d.params.end()), "parts must be ascending");
      need(d.params.front() >= 1, "parts must be non-empty");
      std::vector<int> block;
      for (int p = 0; p < d.parts(); ++p) block.insert(block.end(), d.params[p], p);
      const int n = static_cast<int>(block.size());
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (block[i] != block[j]) es.emplace_back(i, j);
      return Graph(n, es);
    }
    case FamilyTag::Other: break;
  }
  throw std::invalid_argument("no canonical instance for family 'other'");
}

/// K_a with one pendant per clique vertex: 0..a-1 clique, pendant a+i on i.
inline Graph corona_complete(int a) {
  if (a < 1) throw std::invalid_argument("corona needs a >= 1");
  std::vector<Edge> es;
  for (int i = 0; i < a; ++i) {
    for (int j = i + 1; j < a; ++j) es.emplace_back(i, j);
    es.emplace_back(i, a + i);
  }
  return Graph(2 * a, es);
}

}  // namespace pvc

#endif  // PVC_FAMILY_HPP
