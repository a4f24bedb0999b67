#ifndef PVC_CONSTRUCTIONS_HPP
#define PVC_CONSTRUCTIONS_HPP

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

#include "pvc/coloring.hpp"
#include "pvc/family.hpp"
#include "pvc/formulas.hpp"
#include "pvc/graph.hpp"
#include "pvc/solvers.hpp"
#include "pvc/verdicts.hpp"

namespace pvc {

/// Which whole-graph predicate a certificate claims to satisfy.
enum class Predicate { ProperVertexKConnected, StrongProper, StrongRainbow, ProperColoring };

inline const char* to_string(Predicate p) {
  switch (p) {
    case Predicate::ProperVertexKConnected: return "proper-vertex-k-connected";
    case Predicate::StrongProper: return "strong-proper";
    case Predicate::StrongRainbow: return "strong-rainbow";
    case Predicate::ProperColoring: return "proper-coloring";
  }
  return "?";
}

struct TaggedCertificate {
  std::string name;     // parameter witnessed, e.g. "spvc"
  Predicate predicate;  //
  int k = 1;            // only for ProperVertexKConnected
  int value = 0;        // claimed parameter bound (= palette)
  VertexColoring coloring;
};

struct ConstructionOutput {
  Graph graph;
  std::vector<TaggedCertificate> certificates;
};

inline Verdict check_certificate(const Graph& g, const TaggedCertificate& cert, const Guards& guards = {}) {
  switch (cert.predicate) {
    case Predicate::ProperVertexKConnected: return is_proper_vertex_k_connected(g, cert.coloring, cert.k, guards);
    case Predicate::StrongProper: return is_strong_proper_vertex_connected(g, cert.coloring);
    case Predicate::StrongRainbow: return is_strong_rainbow_vertex_connected(g, cert.coloring);
    case Predicate::ProperColoring: return ProperColoringChecker(g).verdict(cert.coloring);
  }
  throw std::logic_error("unknown predicate");
}

/// Two colors by breadth-first depth parity from vertex 0: odd depth gets 1,
/// even depth 2. Every tree path alternates, so pvc <= 2.
inline VertexColoring bfs_parity_coloring(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("parity coloring needs n >= 2");
  if (!g.is_connected()) throw DisconnectedGraph();
  std::vector<int> depth(static_cast<std::size_t>(g.order()), -1);
  std::deque<Vertex> queue{0};
  depth[0] = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (VertexSet s = g.neighbors(x); s; s &= s - 1)
      if (depth[lowest(s)] < 0) {
        depth[lowest(s)] = depth[x] + 1;
        queue.push_back(lowest(s));
      }
  }
  std::vector<int> colors;
  colors.reserve(depth.size());
  for (int d : depth) colors.push_back(d % 2 == 1 ? 1 : 2);
  return VertexColoring(2, std::move(colors));
}

enum class FewColorsCase { Dominating, OneMissing, SharedNeighbor, SeparateNeighborhoods, Chromatic };

inline const char* to_string(FewColorsCase c) {
  switch (c) {
    case FewColorsCase::Dominating: return "dominating-vertex";
    case FewColorsCase::OneMissing: return "one-non-neighbor";
    case FewColorsCase::SharedNeighbor: return "two-non-neighbors-shared";
    case FewColorsCase::SeparateNeighborhoods: return "two-non-neighbors-separate";
    case FewColorsCase::Chromatic: return "chromatic";
  }
  return "?";
}

struct FewColorsColoring {
  FewColorsCase which;
  VertexColoring coloring;
};

/// Strong-proper coloring with fewer than n - 3 colors for connected graphs
/// of order >= 7, by cases on the maximum degree of v (least id attaining it):
///   n-1: one color.
///   n-2: N(v') gets 1, the rest 2, where v' is the non-neighbor of v.
///   n-3: with non-neighbors v' < v'': if they share a neighbor, the least
///        shared one gets 1 and the rest 2; otherwise N(v') gets 1, N(v'')
///        gets 2 and the rest 3.
///   <= n-4: an optimal proper coloring.
inline FewColorsColoring few_colors_coloring(const Graph& g, const Guards& guards = {}) {
  const int n = g.order();
  if (n < 7) throw std::invalid_argument("this coloring needs n >= 7");
  if (!g.is_connected()) throw DisconnectedGraph();
  const int delta = g.max_degree();
  Vertex v = 0;
  while (g.degree(v) != delta) ++v;
  const VertexSet missing = g.vertices() & ~g.neighbors(v) & ~bit(v);

  if (delta == n - 1) return {FewColorsCase::Dominating, VertexColoring::uniform(n)};
  if (delta == n - 2) {
    const VertexSet near = g.neighbors(lowest(missing));
    std::vector<int> colors(static_cast<std::size_t>(n), 2);
    for (VertexSet s = near; s; s &= s - 1) colors[lowest(s)] = 1;
    return {FewColorsCase::OneMissing, VertexColoring(2, std::move(colors))};
  }
  if (delta == n - 3) {
    const Vertex a = lowest(missing);
    const Vertex b = lowest(missing & (missing - 1));
    const VertexSet shared = g.neighbors(a) & g.neighbors(b);
    if (shared) {
      std::vector<int> colors(static_cast<std::size_t>(n), 2);
      colors[lowest(shared)] = 1;
      return {FewColorsCase::SharedNeighbor, VertexColoring(2, std::move(colors))};
    }
    std::vector<int> colors(static_cast<std::size_t>(n), 3);
    for (VertexSet s = g.neighbors(a); s; s &= s - 1) colors[lowest(s)] = 1;
    for (VertexSet s = g.neighbors(b); s; s &= s - 1) colors[lowest(s)] = 2;
    return {FewColorsCase::SeparateNeighborhoods, VertexColoring(3, std::move(colors))};
  }
  return {FewColorsCase::Chromatic, chromatic_number_exact(g, guards).certificate};
}

/// Optimal colorings for cycles (k = 1, 2) and wheels (k = 1..3).
/// Wheels from make_family have the hub last; the hub always gets color 1.
inline VertexColoring optimal_family_coloring(const FamilyDescriptor& d, int k) {
  auto cycle_coloring = [](int n, int kk) -> VertexColoring {
    const int value = pvc_k_cycle(n, kk).value;
    std::vector<int> colors(static_cast<std::size_t>(n));
    if (value == 0) return {};
    if (value == 1) return VertexColoring::uniform(n);
    if (kk == 1) return bfs_parity_coloring(make_family(FamilyDescriptor::cycle(n)));
    for (int i = 0; i < n; ++i) colors[i] = i % 2 + 1;
    if (n % 2 == 1) colors[n - 1] = 3;
    return VertexColoring(value, std::move(colors));
  };

  if (d.tag == FamilyTag::Cycle) {
    const int n = d.params.at(0);
    if (k < 1 || k > 2) throw std::out_of_range("cycle colorings exist for k = 1, 2");
    return cycle_coloring(n, k);
  }
  if (d.tag == FamilyTag::Wheel) {
    const int n = d.params.at(0);
    const int value = pvc_k_wheel(n, k).value;
    if (value == 0) return {};
    if (n == 3 || k == 1) return VertexColoring::uniform(n + 1);
    VertexColoring rim = cycle_coloring(n, k - 1);
    if (rim.empty()) rim = VertexColoring::uniform(n);
    rim.colors.push_back(1);
    return rim;
  }
  throw std::invalid_argument("optimal family colorings exist for cycles and wheels only");
}

/// Corona of K_a with a path of b - a vertices hung off the last pendant.
/// Vertex layout: clique 0..a-1, pendant a+i on i, path 2a..a+b-1 with the
/// first path vertex adjacent to pendant 2a-1. For b = a the path is empty.
/// Certificates: spvc = a (strong-proper) and srvc = b (strong-rainbow).
inline ConstructionOutput corona_path_construction(int a, int b) {
  if (a < 2 || b < a) throw std::invalid_argument("corona-path construction needs 2 <= a <= b");
  const int path_len = b - a;
  const int n = 2 * a + path_len;
  std::vector<Edge> es(corona_complete(a).edges());
  if (path_len > 0) es.emplace_back(2 * a - 1, 2 * a);
  for (int k = 1; k < path_len; ++k) es.emplace_back(2 * a + k - 1, 2 * a + k);
  ConstructionOutput out{Graph(n, es), {}};

  const Vertex last_pendant = 2 * a - 1;
  auto path_vertex = [&](int k) { return 2 * a + k - 1; };  // k = 1..b-a

  std::vector<int> proper(static_cast<std::size_t>(n), 1);
  for (int j = 1; j <= a; ++j) proper[j - 1] = j;
  proper[last_pendant] = 1;
  for (int k = 1; k <= path_len; ++k) proper[path_vertex(k)] = k % 2 == 0 ? 1 : 2;
  out.certificates.push_back({"spvc", Predicate::StrongProper, 1, a, VertexColoring(a, std::move(proper))});

  std::vector<int> rainbow(static_cast<std::size_t>(n), 1);
  for (int j = 1; j <= a; ++j) rainbow[j - 1] = j;
  if (path_len > 0) rainbow[last_pendant] = a + 1;
  for (int k = 1; k <= path_len - 1; ++k) rainbow[path_vertex(k)] = a + 1 + k;
  out.certificates.push_back({"srvc", Predicate::StrongRainbow, 1, b, VertexColoring(b, std::move(rainbow))});
  return out;
}

/// K_b with c-b+1 pendants on vertex 0 and one pendant on each of 1..a-1.
/// Vertex layout: clique 0..b-1, then the pendants of 0, then one pendant
/// each for 1..a-1. Certificates: spvc = a and a proper b-coloring.
inline ConstructionOutput pendant_clique_construction(int a, int b, int c) {
  if (a < 2 || a > b || b > c) throw std::invalid_argument("pendant-clique construction needs 2 <= a <= b <= c");
  const int hub_pendants = c - b + 1;
  const int n = b + hub_pendants + (a - 1);
  std::vector<Edge> es;
  for (int i = 0; i < b; ++i)
    for (int j = i + 1; j < b; ++j) es.emplace_back(i, j);
  for (int k = 0; k < hub_pendants; ++k) es.emplace_back(0, b + k);
  const int first_other = b + hub_pendants;
  for (int i = 1; i < a; ++i) es.emplace_back(i, first_other + i - 1);
  ConstructionOutput out{Graph(n, es), {}};

  std::vector<int> proper(static_cast<std::size_t>(n), 1);
  for (int j = 1; j <= a; ++j) proper[j - 1] = j;
  out.certificates.push_back({"spvc", Predicate::StrongProper, 1, a, VertexColoring(a, std::move(proper))});

  std::vector<int> chi(static_cast<std::size_t>(n), 0);
  for (int j = 1; j <= b; ++j) chi[j - 1] = j;
  for (int k = 0; k < hub_pendants; ++k) chi[b + k] = 2;
  for (int j = 2; j <= a; ++j) chi[first_other + j - 2] = j - 1;
  out.certificates.push_back({"chi", Predicate::ProperColoring, 1, b, VertexColoring(b, std::move(chi))});
  return out;
}

}  // namespace pvc

#endif  // PVC_CONSTRUCTIONS_HPP
