#ifndef PVC_SOLVERS_HPP
#define PVC_SOLVERS_HPP

#include <chrono>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pvc/coloring.hpp"
#include "pvc/connectivity.hpp"
#include "pvc/graph.hpp"
#include "pvc/guards.hpp"
#include "pvc/verdicts.hpp"

namespace pvc {

/// Visits, in lexicographic order, every restricted growth string of the
/// given length over 1..blocks that uses all `blocks` values: position 0 is
/// 1, and a value may appear only once every smaller value has. Each set
/// partition into exactly `blocks` parts is visited once. Stops early when
/// visit returns true; the return value says whether it did.
template <class Visit>
bool for_each_restricted_growth(int length, int blocks, Visit&& visit) {
  std::vector<int> s(static_cast<std::size_t>(length), 0);
  if (length == 0) return blocks == 0 && visit(std::as_const(s));
  if (blocks < 1 || blocks > length) return false;

  // Iterative DFS; top[i] is the largest value among s[0..i].
  std::vector<int> top(static_cast<std::size_t>(length), 0);
  int i = 0;
  s[0] = 0;
  while (i >= 0) {
    const int prev_top = i ? top[i - 1] : 0;
    const int limit = std::min(blocks, prev_top + 1);
    if (++s[i] > limit) {
      s[i] = 0;
      --i;
      continue;
    }
    top[i] = std::max(prev_top, s[i]);
    // Remaining positions must still be able to introduce the missing values.
    if (top[i] + (length - 1 - i) < blocks) continue;
    if (i == length - 1) {
      if (top[i] == blocks && visit(std::as_const(s))) return true;
      continue;
    }
    ++i;
    s[i] = 0;
  }
  return false;
}

struct SolveStats {
  std::uint64_t colorings = 0;
  double seconds = 0.0;
};

template <class Coloring>
struct BasicSolveResult {
  int value = 0;
  Coloring certificate;
  SolveStats stats;
};

using SolveResult = BasicSolveResult<VertexColoring>;
using EdgeSolveResult = BasicSolveResult<EdgeColoring>;

namespace detail {

template <class Coloring, class Pred>
BasicSolveResult<Coloring> minimize(int items, int lower, int upper, Pred&& passes) {
  const auto start = std::chrono::steady_clock::now();
  BasicSolveResult<Coloring> result;
  for (int p = std::max(lower, 0); p <= upper; ++p) {
    Coloring c;
    c.palette = p;
    bool found = false;
    if (p == 0) {
      ++result.stats.colorings;
      found = passes(c);
    } else {
      found = for_each_restricted_growth(items, p, [&](const std::vector<int>& s) {
        ++result.stats.colorings;
        c.colors = s;
        return passes(std::as_const(c));
      });
    }
    if (found) {
      result.value = p;
      result.certificate = std::move(c);
      result.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return result;
    }
  }
  throw std::logic_error("no coloring with at most " + std::to_string(upper) + " colors passes");
}

}  // namespace detail

/// Smallest palette p >= lower (rounds ascending) admitting a passing vertex
/// coloring; the certificate is the lexicographically least passing
/// restricted growth string at that p. `passes` must be monotone in p.
template <class Pred>
SolveResult minimize_palette(const Graph& g, Pred&& passes, int lower) {
  return detail::minimize<VertexColoring>(g.order(), lower, g.order(), std::forward<Pred>(passes));
}

/// Edge analogue of minimize_palette, over the fixed Graph::edges() order.
template <class Pred>
EdgeSolveResult minimize_edge_palette(const Graph& g, Pred&& passes, int lower) {
  return detail::minimize<EdgeColoring>(g.size(), std::max(lower, 1), std::max(g.size(), 1),
                                        std::forward<Pred>(passes));
}

/// 0 for complete graphs, 1 at diameter 2, 2 beyond.
inline int geodesic_lower_bound(const Graph& g) {
  const int d = diameter(g);
  return d <= 1 ? 0 : (d == 2 ? 1 : 2);
}

inline SolveResult spvc_exact(const Graph& g, const Guards& guards = {}) {
  check_order_guard("spvc", g.order(), guards.max_n_solve);
  StrongProperChecker checker(g);
  return minimize_palette(g, [&](const VertexColoring& c) { return checker.passes(c); }, geodesic_lower_bound(g));
}

inline SolveResult srvc_exact(const Graph& g, const Guards& guards = {}) {
  check_order_guard("srvc", g.order(), guards.max_n_solve);
  StrongRainbowChecker checker(g);
  return minimize_palette(g, [&](const VertexColoring& c) { return checker.passes(c); }, geodesic_lower_bound(g));
}

inline SolveResult pvc_k_exact(const Graph& g, int k, const Guards& guards = {}) {
  if (!g.is_connected()) throw DisconnectedGraph();
  if (k < 1 || k > vertex_connectivity(g))
    throw std::out_of_range("pvc_k needs 1 <= k <= vertex connectivity (" +
                            std::to_string(vertex_connectivity(g)) + "), got k = " + std::to_string(k));
  check_order_guard(k == 1 ? "pvc" : "pvc_k with k >= 2", g.order(), k == 1 ? guards.max_n_solve : guards.max_n_solve_k2);
  ProperKConnectedChecker checker(g, k, Guards::unlimited());
  return minimize_palette(g, [&](const VertexColoring& c) { return checker.passes(c); }, 0);
}

inline SolveResult pvc_exact(const Graph& g, const Guards& guards = {}) { return pvc_k_exact(g, 1, guards); }

inline SolveResult chromatic_number_exact(const Graph& g, const Guards& guards = {}) {
  check_order_guard("chromatic number", g.order(), guards.max_n_solve);
  return minimize_palette(g, [&](const VertexColoring& c) { return is_proper_coloring(g, c); }, 1);
}

inline EdgeSolveResult pc_k_exact(const Graph& g, int k, const Guards& guards = {}) {
  if (!g.is_connected()) throw DisconnectedGraph();
  if (k < 1 || k > vertex_connectivity(g))
    throw std::out_of_range("pc_k needs 1 <= k <= vertex connectivity (" + std::to_string(vertex_connectivity(g)) +
                            "), got k = " + std::to_string(k));
  check_order_guard("pc_k", g.order(), guards.max_n_solve_k2);
  ProperKConnectedEdgeChecker checker(g, k, Guards::unlimited());
  return minimize_edge_palette(g, [&](const EdgeColoring& c) { return checker.passes(c); }, 1);
}

/// "param=VALUE colorings=N time=T"
template <class Coloring>
std::string summary_line(const std::string& param, const BasicSolveResult<Coloring>& r) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out << param << '=' << r.value << " colorings=" << r.stats.colorings << " time=" << r.stats.seconds;
  return out.str();
}

}  // namespace pvc

#endif  // PVC_SOLVERS_HPP
