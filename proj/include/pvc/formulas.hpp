#ifndef PVC_FORMULAS_HPP
#define PVC_FORMULAS_HPP

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pvc/enumerate.hpp"
#include "pvc/family.hpp"
#include "pvc/graph.hpp"
#include "pvc/graph6.hpp"
#include "pvc/solvers.hpp"

namespace pvc {

/// A closed-form value and the name of the clause that produced it.
struct FormulaResult {
  int value = 0;
  std::string source;
};

/// Raised when a family has no closed form for the requested parameter.
class NoClosedForm : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline FormulaResult pvc_by_diameter(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("pvc needs a nontrivial graph");
  const int d = diameter(g);
  if (d == 1) return {0, "diameter.complete"};
  if (d == 2) return {1, "diameter.two"};
  return {2, "diameter.three-or-more"};
}

inline FormulaResult pvc_k_cycle(int n, int k) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  if (k == 1) {
    if (n == 3) return {0, "cycle.k1.triangle"};
    if (n <= 5) return {1, "cycle.k1.short"};
    return {2, "cycle.k1.long"};
  }
  if (k == 2) {
    if (n == 3) return {1, "cycle.k2.triangle"};
    if (n % 2 == 0) return {2, "cycle.k2.even"};
    return {3, "cycle.k2.odd"};
  }
  throw std::out_of_range("cycles are only 2-connected; k must be 1 or 2");
}

/// Rim length n; the wheel has n+1 vertices.
inline FormulaResult pvc_k_wheel(int n, int k) {
  if (n < 3) throw std::invalid_argument("wheel needs rim length >= 3");
  if (k < 1 || k > 3) throw std::out_of_range("wheels are only 3-connected; k must be 1..3");
  if (n == 3) return k == 1 ? FormulaResult{0, "wheel.k1.k4"} : FormulaResult{1, "wheel.k4"};
  if (k == 1) return {1, "wheel.k1"};
  const FormulaResult rim = pvc_k_cycle(n, k - 1);
  return {rim.value, "wheel.k" + std::to_string(k) + ".rim:" + rim.source};
}

inline FormulaResult pvc_k_complete(int n, int k) {
  if (n < 2) throw std::invalid_argument("complete graph needs n >= 2");
  if (k < 1 || k > n - 1) throw std::out_of_range("k must lie in 1..n-1 for K_n");
  return k == 1 ? FormulaResult{0, "complete.k1"} : FormulaResult{1, "complete.k2plus"};
}

/// K_{n1,n2}; the parts are sorted internally and the smaller must be >= 2.
inline FormulaResult pvc_k_complete_bipartite(int n1, int n2, int k) {
  if (n1 > n2) std::swap(n1, n2);
  if (n1 < 2) throw std::invalid_argument("complete bipartite closed form needs both parts >= 2");
  if (k < 1 || k > n1) throw std::out_of_range("k must lie in 1..min part size");
  return k == 1 ? FormulaResult{1, "bipartite.k1"} : FormulaResult{2, "bipartite.k2plus"};
}

/// Complete multipartite K_{n_1,...,n_t}, parts ascending, t >= 3, n_t >= 2,
/// 1 <= k <= m where m is the sum of all parts but the largest. Clauses are
/// tried in a fixed order and the first match wins.
inline FormulaResult pvc_k_complete_multipartite(const std::vector<int>& parts, int k) {
  const int t = static_cast<int>(parts.size());
  if (t < 3) throw std::invalid_argument("multipartite closed form needs at least 3 parts");
  if (!std::is_sorted(parts.begin(), parts.end()) || parts.front() < 1)
    throw std::invalid_argument("parts must be positive and ascending");
  if (parts.back() < 2) throw std::invalid_argument("multipartite closed form needs a part of size >= 2");
  // 1-based accessor matching n_1 <= ... <= n_t; n(i) = 0 for i < 1.
  auto n = [&](int i) { return i >= 1 ? parts[i - 1] : 0; };
  int m = 0;
  for (int i = 1; i < t; ++i) m += n(i);
  if (k < 1 || k > m) throw std::out_of_range("k must lie in 1..m = " + std::to_string(m));

  const int top = n(t), second = n(t - 1), third = n(t - 2);

  if (k <= m - 2) {
    if (k <= m - second + 1) return {1, "multipartite.low-k.one"};
    return {2, "multipartite.low-k.two"};
  }
  if (k == m - 1) {
    const bool top_three_equal_odd = top == second && second == third && top % 2 == 1;
    if (second <= 2) return {1, "multipartite.k=m-1.small"};
    if (!top_three_equal_odd) return {2, "multipartite.k=m-1.general"};
    return {3, "multipartite.k=m-1.three-equal-odd"};
  }
  // k == m
  const bool four_fours = t >= 4 && top == 4 && second == 4 && third == 4 && n(t - 3) == 4;
  if (second == 1) return {1, "multipartite.k=m.second-is-one"};
  if (second >= 2 && second <= top - 2) return {2, "multipartite.k=m.gap-two"};
  if ((second == top - 1 && second >= 2 && third <= 2) || (second == top && second >= 2 && third == 1))
    return {2, "multipartite.k=m.near-equal-small-third"};
  if (((second == top - 1 && third >= 3) || (second == top && second >= 3 && third >= 2)) && !four_fours)
    return {3, "multipartite.k=m.near-equal-large-third"};
  if (four_fours) return {4, "multipartite.k=m.four-fours"};
  // All parts of size 2 form the top s, everything else has size 1.
  int s = 0;
  while (s < t && n(t - s) == 2) ++s;
  if (s >= 1 && std::all_of(parts.begin(), parts.end() - s, [](int x) { return x == 1; }))
    return {s, "multipartite.k=m.twos-and-ones"};
  throw std::logic_error("multipartite case tree has no clause for this input");
}

/// pvc_k for any descriptor with a closed form, whatever its tag.
inline FormulaResult pvc_k_family_formula(const FamilyDescriptor& d, int k) {
  switch (d.tag) {
    case FamilyTag::Complete: return pvc_k_complete(d.params[0], k);
    case FamilyTag::Cycle:
      if (d.params[0] == 3 && k == 1) return pvc_k_complete(3, 1);
      return pvc_k_cycle(d.params[0], k);
    case FamilyTag::Wheel: return pvc_k_wheel(d.params[0], k);
    case FamilyTag::CompleteBipartite:
      if (d.params[0] >= 2) return pvc_k_complete_bipartite(d.params[0], d.params[1], k);
      break;
    case FamilyTag::CompleteMultipartite:
      if (d.params.back() >= 2) return pvc_k_complete_multipartite(d.params, k);
      return pvc_k_complete(d.order(), k);
    case FamilyTag::Path:
      if (k == 1) return d.params[0] <= 2 ? FormulaResult{0, "path.k1.edge"}
                                          : FormulaResult{d.params[0] == 3 ? 1 : 2, "path.k1"};
      break;
    case FamilyTag::Other: break;
  }
  throw NoClosedForm("no pvc_k closed form for " + d.name() + " with k = " + std::to_string(k));
}

inline FormulaResult spvc_family_formula(const FamilyDescriptor& d) {
  const int n = d.params.empty() ? 0 : d.params[0];
  switch (d.tag) {
    case FamilyTag::Complete: return {0, "complete"};
    case FamilyTag::Path:
      if (n <= 2) return {0, "complete"};
      return n == 3 ? FormulaResult{1, "path.three"} : FormulaResult{2, "path.long"};
    case FamilyTag::Cycle:
      if (n == 3) return {0, "complete"};
      if (n <= 5) return {1, "cycle.short"};
      return n % 2 == 0 ? FormulaResult{2, "cycle.even"} : FormulaResult{3, "cycle.odd"};
    case FamilyTag::CompleteBipartite:
      if (d.params[1] == 1) return {0, "complete"};
      return {1, "bipartite"};
    case FamilyTag::CompleteMultipartite:
      if (d.params.back() == 1) return {0, "complete"};
      return {1, "multipartite"};
    case FamilyTag::Wheel:
      if (n == 3) return {0, "complete"};
      return {1, "wheel"};
    case FamilyTag::Other: break;
  }
  throw NoClosedForm("no spvc closed form for " + d.name());
}

/// pc_k of K_{t,k} for 2 <= k < t.
inline FormulaResult pc_k_bipartite_formula(int t, int k) {
  if (k < 2 || k >= t) throw std::out_of_range("bipartite pc_k closed form needs 2 <= k < t");
  return {t, "bipartite.pc_k"};
}

// ---------------------------------------------------------------------------
// spvc extremes

enum class SpvcExtremal { AtNMinus2, AtNMinus3, Below };

inline const char* to_string(SpvcExtremal e) {
  switch (e) {
    case SpvcExtremal::AtNMinus2: return "AT_N_MINUS_2";
    case SpvcExtremal::AtNMinus3: return "AT_N_MINUS_3";
    case SpvcExtremal::Below: return "BELOW";
  }
  return "?";
}

struct CatalogEntry {
  int order = 0;
  int spvc = 0;
  std::string graph6;  // canonical
};

/// Connected graphs of orders 3..6 with spvc = n - 3, found by exhaustive
/// enumeration and exact solving. Computed once per process.
inline const std::vector<CatalogEntry>& extremal_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    std::vector<CatalogEntry> out;
    for (int n = kMinEnumeratedOrder; n <= kMaxEnumeratedOrder; ++n)
      for (const Graph& g : enumerate_connected_graphs(n)) {
        const int value = spvc_exact(g).value;
        if (value == n - 3) out.push_back({n, value, canonical_graph6(g)});
      }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return std::tie(a.order, a.graph6) < std::tie(b.order, b.graph6); });
    return out;
  }();
  return catalog;
}

/// Catalog file: one canonical graph6 per line, each group of equal order
/// preceded by "# order n, spvc v".
inline std::string format_catalog(const std::vector<CatalogEntry>& entries) {
  std::ostringstream out;
  int last = -1;
  for (const auto& e : entries) {
    if (e.order != last) out << "# order " << e.order << ", spvc " << e.spvc << '\n';
    last = e.order;
    out << e.graph6 << '\n';
  }
  return out.str();
}

inline std::vector<CatalogEntry> parse_catalog(std::istream& in) {
  std::vector<CatalogEntry> out;
  int order = 0, spvc = 0;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (std::sscanf(line.c_str(), "# order %d, spvc %d", &order, &spvc) != 2)
        throw std::invalid_argument("catalog: bad header '" + line + "'");
      continue;
    }
    const Graph g = parse_graph6(line);
    if (g.order() != order) throw std::invalid_argument("catalog: entry order does not match its header");
    out.push_back({order, spvc, line});
  }
  return out;
}

inline void check_spvc_bound_domain(const Graph& g) {
  if (g.order() < 3) throw std::invalid_argument("extremal classification needs n >= 3");
  if (!g.is_connected()) throw DisconnectedGraph();
}

/// n - 2 exactly on P_3 and P_4, n - 3 exactly on the catalog, and nothing
/// from order 7 up reaches n - 3.
inline SpvcExtremal classify_spvc_extremal(const Graph& g) {
  check_spvc_bound_domain(g);
  const int n = g.order();
  if (n > kMaxEnumeratedOrder) return SpvcExtremal::Below;
  const FamilyDescriptor fam = recognize_family(g);
  if (fam.tag == FamilyTag::Path && (n == 3 || n == 4)) return SpvcExtremal::AtNMinus2;
  const std::string key = canonical_graph6(g);
  for (const auto& e : extremal_catalog())
    if (e.graph6 == key) return SpvcExtremal::AtNMinus3;
  return SpvcExtremal::Below;
}

struct SpvcBoundReport {
  int n = 0;
  int spvc = 0;
  bool within_bounds = false;  // 0 <= spvc <= n - 2
  SpvcExtremal extremal = SpvcExtremal::Below;
  bool consistent = false;  // class agrees with the computed value
};

inline SpvcBoundReport spvc_bound_check(const Graph& g, const Guards& guards = {}) {
  check_spvc_bound_domain(g);
  SpvcBoundReport r;
  r.n = g.order();
  r.spvc = spvc_exact(g, guards).value;
  r.within_bounds = r.spvc >= 0 && r.spvc <= r.n - 2;
  r.extremal = classify_spvc_extremal(g);
  switch (r.extremal) {
    case SpvcExtremal::AtNMinus2: r.consistent = r.spvc == r.n - 2; break;
    case SpvcExtremal::AtNMinus3: r.consistent = r.spvc == r.n - 3; break;
    case SpvcExtremal::Below: r.consistent = r.spvc < r.n - 3; break;
  }
  return r;
}

}  // namespace pvc

#endif  // PVC_FORMULAS_HPP
