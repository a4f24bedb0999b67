#ifndef PVC_SWEEP_HPP
#define PVC_SWEEP_HPP

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "pvc/connectivity.hpp"
#include "pvc/constructions.hpp"
#include "pvc/enumerate.hpp"
#include "pvc/family.hpp"
#include "pvc/formulas.hpp"
#include "pvc/solvers.hpp"
#include "pvc/verdicts.hpp"

namespace pvc {

// ---------------------------------------------------------------------------
// Corpus sweep: every parameter on every graph, every known relation checked.

struct SweepOptions {
  Guards guards;
  bool with_pc = true;         // pc_1 and, where kappa >= 2, pc_2
  bool with_k2 = true;         // pvc_2 where kappa >= 2
  std::set<int> complete_orders;  // orders the corpus covers exhaustively
  bool inject_fault = false;   // harness self-test: corrupt the diameter formula
};

struct GraphRecord {
  std::string graph6;  // canonical
  int n = 0, m = 0, diameter = 0, kappa = 0;
  std::string family;
  int pvc = 0, spvc = 0, srvc = 0, chi = 0;
  std::optional<int> pc, pvc2, pc2;
  bool is_path = false;
};

struct CheckOutcome {
  std::string name;
  int checked = 0;
  std::vector<std::string> counterexamples;  // graph6 witnesses
  bool passed() const { return counterexamples.empty(); }
};

struct OrderTally {
  int graphs = 0;
  int extremal = 0;  // spvc = n - 3
};

struct SweepReport {
  std::vector<GraphRecord> records;  // sorted by canonical graph6
  std::map<int, OrderTally> orders;
  std::vector<CheckOutcome> checks;
  std::vector<CatalogEntry> catalog;
  std::optional<int> probe_min, probe_max;  // pc_2 - pvc_2
  std::vector<std::string> findings;
  double seconds = 0.0;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
  }
  const CheckOutcome* check(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// Reported counts of spvc = n - 3 graphs per order.
inline const std::map<int, int>& expected_extremal_counts() {
  static const std::map<int, int> counts{{3, 1}, {4, 4}, {5, 6}, {6, 1}};
  return counts;
}

inline SweepReport run_sweep(const std::vector<Graph>& corpus, const SweepOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  SweepReport report;
  std::map<std::string, CheckOutcome> checks;
  auto record_check = [&](const std::string& name, bool ok, const std::string& g6) {
    auto& c = checks[name];
    c.name = name;
    ++c.checked;
    if (!ok) c.counterexamples.push_back(g6);
  };

  std::set<std::string> catalog_keys;
  for (const auto& e : extremal_catalog()) catalog_keys.insert(e.graph6);

  for (const Graph& input : corpus) {
    if (!input.is_connected() || input.order() < 2) continue;
    GraphRecord r;
    const Graph g = input.order() <= 9 ? canonical_form(input) : input;
    r.graph6 = encode_graph6(g);
    r.n = g.order();
    r.m = g.size();
    r.diameter = diameter(g);
    r.kappa = vertex_connectivity(g);
    const FamilyDescriptor fam = recognize_family(g);
    r.family = fam.name();
    r.is_path = fam.tag == FamilyTag::Path || (fam.tag == FamilyTag::Complete && r.n == 2);

    const SolveResult pvc = pvc_exact(g, opt.guards);
    const SolveResult spvc = spvc_exact(g, opt.guards);
    const SolveResult srvc = srvc_exact(g, opt.guards);
    const SolveResult chi = chromatic_number_exact(g, opt.guards);
    r.pvc = pvc.value;
    r.spvc = spvc.value;
    r.srvc = srvc.value;
    r.chi = chi.value;
    if (opt.with_pc && r.n <= opt.guards.max_n_solve_k2) r.pc = pc_k_exact(g, 1, opt.guards).value;
    if (r.kappa >= 2 && r.n <= opt.guards.max_n_solve_k2) {
      if (opt.with_k2) r.pvc2 = pvc_k_exact(g, 2, opt.guards).value;
      if (opt.with_k2 && opt.with_pc) r.pc2 = pc_k_exact(g, 2, opt.guards).value;
    }

    const std::string& w = r.graph6;
    FormulaResult diam_formula = pvc_by_diameter(g);
    if (opt.inject_fault && r.diameter == 2) diam_formula.value = 2;
    record_check("pvc-by-diameter", r.pvc == diam_formula.value, w);
    record_check("spvc-by-diameter",
                 (r.spvc == 0) == (r.diameter == 1) && (r.spvc == 1) == (r.diameter == 2), w);
    record_check("sandwich", r.pvc <= r.spvc && r.spvc <= std::min(r.chi, r.srvc), w);
    if (r.n >= 3) {
      record_check("srvc-upper-bound", r.srvc <= r.n - 2, w);
      record_check("srvc-equality-on-paths", (r.srvc == r.n - 2) == r.is_path, w);
      record_check("spvc-upper-bound", r.spvc <= r.n - 2, w);
      record_check("spvc-n-2-set", (r.spvc == r.n - 2) == (r.is_path && r.n <= 4), w);
      const bool extremal = r.spvc == r.n - 3;
      if (r.n <= kMaxEnumeratedOrder)
        record_check("spvc-n-3-catalog", extremal == catalog_keys.contains(w), w);
      else
        record_check("spvc-n-3-catalog", !extremal, w);
      if (extremal && r.n <= kMaxEnumeratedOrder) report.catalog.push_back({r.n, r.spvc, w});
    }
    if (auto closed = [&]() -> std::optional<int> {
          try {
            return spvc_family_formula(fam).value;
          } catch (const NoClosedForm&) {
            return std::nullopt;
          }
        }())
      record_check("spvc-family-formula", *closed == r.spvc, w);
    if (r.pc) record_check("pc-at-least-pvc", *r.pc >= r.pvc, w);
    if (r.pvc2) record_check("pvc2-at-most-chi", *r.pvc2 <= r.chi, w);
    record_check("parity-coloring-certificate", ProperKConnectedChecker(g, 1).passes(bfs_parity_coloring(g)), w);
    record_check("chromatic-certificate-is-strong-proper", StrongProperChecker(g).passes(chi.certificate), w);
    record_check("certificates-self-verify",
                 ProperKConnectedChecker(g, 1).passes(pvc.certificate) &&
                     StrongProperChecker(g).passes(spvc.certificate) &&
                     StrongRainbowChecker(g).passes(srvc.certificate) && is_proper_coloring(g, chi.certificate),
                 w);

    if (r.pvc2 && r.pc2) {
      const int diff = *r.pc2 - *r.pvc2;
      report.probe_min = std::min(report.probe_min.value_or(diff), diff);
      report.probe_max = std::max(report.probe_max.value_or(diff), diff);
      if (diff < 0) report.findings.push_back("pc_2 < pvc_2 on " + w);
    }

    auto& tally = report.orders[r.n];
    ++tally.graphs;
    if (r.n >= 3 && r.spvc == r.n - 3) ++tally.extremal;
    report.records.push_back(std::move(r));
  }

  for (int n : opt.complete_orders) {
    const auto it = expected_extremal_counts().find(n);
    if (it == expected_extremal_counts().end()) continue;
    const int got = report.orders.contains(n) ? report.orders[n].extremal : 0;
    const std::string name = "spvc-n-3-count-order-" + std::to_string(n);
    auto& c = checks[name];
    c.name = name;
    ++c.checked;
    if (got != it->second)
      for (const auto& e : report.catalog)
        if (e.order == n) c.counterexamples.push_back(e.graph6);
    if (got != it->second && c.counterexamples.empty()) c.counterexamples.push_back("(none found)");
  }

  std::sort(report.records.begin(), report.records.end(),
            [](const auto& a, const auto& b) { return std::tie(a.n, a.graph6) < std::tie(b.n, b.graph6); });
  std::sort(report.catalog.begin(), report.catalog.end(),
            [](const auto& a, const auto& b) { return std::tie(a.order, a.graph6) < std::tie(b.order, b.graph6); });
  for (auto& [name, c] : checks) report.checks.push_back(std::move(c));
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

/// Machine format: one key=value record per line, no timing.
inline void write_sweep_machine(std::ostream& out, const SweepReport& r) {
  for (const auto& g : r.records) {
    out << "graph g6=" << g.graph6 << " n=" << g.n << " m=" << g.m << " diam=" << g.diameter << " kappa=" << g.kappa
        << " family=" << g.family << " pvc=" << g.pvc << " spvc=" << g.spvc << " srvc=" << g.srvc << " chi=" << g.chi;
    if (g.pc) out << " pc=" << *g.pc;
    if (g.pvc2) out << " pvc2=" << *g.pvc2;
    if (g.pc2) out << " pc2=" << *g.pc2;
    out << '\n';
  }
  for (const auto& [n, t] : r.orders) out << "order n=" << n << " graphs=" << t.graphs << " extremal=" << t.extremal << '\n';
  for (const auto& c : r.checks) {
    out << "check name=" << c.name << " checked=" << c.checked << " failures=" << c.counterexamples.size()
        << " status=" << (c.passed() ? "pass" : "FAIL") << '\n';
    for (const auto& w : c.counterexamples) out << "counterexample check=" << c.name << " g6=" << w << '\n';
  }
  if (r.probe_min)
    out << "probe param=pc2-minus-pvc2 min=" << *r.probe_min << " max=" << *r.probe_max << '\n';
  for (const auto& f : r.findings) out << "FINDING " << f << '\n';
  std::size_t failed = 0;
  for (const auto& c : r.checks) failed += c.passed() ? 0 : 1;
  out << "summary graphs=" << r.records.size() << " checks=" << r.checks.size() << " failed=" << failed
      << " catalog=" << r.catalog.size() << '\n';
}

inline void write_sweep_human(std::ostream& out, const SweepReport& r) {
  out << "orders:\n";
  for (const auto& [n, t] : r.orders)
    out << "  n=" << n << ": " << t.graphs << " graphs, " << t.extremal << " with spvc = n-3\n";
  out << "checks:\n";
  for (const auto& c : r.checks) {
    out << "  [" << (c.passed() ? "pass" : "FAIL") << "] " << c.name << " (" << c.checked << " graphs)\n";
    for (const auto& w : c.counterexamples) out << "      counterexample: " << w << '\n';
  }
  if (r.probe_min)
    out << "pc_2 - pvc_2 over eligible graphs: min " << *r.probe_min << ", max " << *r.probe_max << '\n';
  for (const auto& f : r.findings) out << "FINDING: " << f << '\n';
  out << "spvc = n-3 graphs: " << r.catalog.size() << '\n';
  out << "graphs: " << r.records.size() << ", time " << r.seconds << " s\n";
}

// ---------------------------------------------------------------------------
// Oracle: closed forms against the exact solvers.

struct OracleRow {
  std::string instance;
  std::string param;
  int formula = 0;
  int solver = 0;
  std::string clause;
  bool agree() const { return formula == solver; }
};

inline std::vector<std::vector<int>> ascending_part_lists(int max_sum, int min_parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int min_part, int remaining) {
    if (static_cast<int>(cur.size()) >= min_parts) out.push_back(cur);
    for (int p = min_part; p <= remaining; ++p) {
      cur.push_back(p);
      rec(p, remaining - p);
      cur.pop_back();
    }
  };
  rec(1, max_sum);
  return out;
}

/// Cycles to n = 9 are searched with the k >= 2 order guard raised to 9:
/// their path systems are tiny.
inline std::vector<OracleRow> run_oracle(const Guards& guards = {}) {
  std::vector<OracleRow> rows;
  auto pvc_row = [&](const FamilyDescriptor& d, int k, const Guards& gd) {
    const Graph g = make_family(d);
    const FormulaResult f = pvc_k_family_formula(d, k);
    const int solved = pvc_k_exact(g, k, gd).value;
    rows.push_back({d.name() + " k=" + std::to_string(k), "pvc_" + std::to_string(k), f.value, solved, f.source});
  };

  Guards cycle_guards = guards;
  cycle_guards.max_n_solve_k2 = std::max(cycle_guards.max_n_solve_k2, 9);
  cycle_guards.max_n_solve = std::max(cycle_guards.max_n_solve, 9);
  for (int n = 3; n <= 9; ++n)
    for (int k = 1; k <= 2; ++k) pvc_row(FamilyDescriptor::cycle(n), k, cycle_guards);
  for (int n = 3; n <= 7; ++n)
    for (int k = 1; k <= 3; ++k) pvc_row(FamilyDescriptor::wheel(n), k, guards);
  for (int n = 3; n <= 6; ++n)
    for (int k = 1; k <= n - 1; ++k) pvc_row(FamilyDescriptor::complete(n), k, guards);
  for (int a = 2; a <= 3; ++a)
    for (int b = a; a + b <= 7; ++b)
      for (int k = 1; k <= a; ++k) pvc_row(FamilyDescriptor::complete_bipartite(a, b), k, guards);
  for (const auto& parts : ascending_part_lists(7, 3)) {
    if (parts.back() < 2) continue;
    const auto d = FamilyDescriptor::complete_multipartite(parts);
    for (int k = 1; k <= d.m(); ++k) pvc_row(d, k, guards);
  }
  for (auto [t, k] : {std::pair{3, 2}, std::pair{4, 2}}) {
    const Graph g = make_family(FamilyDescriptor::complete_bipartite(t, k));
    const std::string name = "K_{" + std::to_string(t) + "," + std::to_string(k) + "}";
    const FormulaResult f = pc_k_bipartite_formula(t, k);
    rows.push_back({name, "pc_" + std::to_string(k), f.value, pc_k_exact(g, k, guards).value, f.source});
    rows.push_back({name, "pvc_" + std::to_string(k), 2, pvc_k_exact(g, k, guards).value, "bipartite.k2plus"});
  }
  return rows;
}

inline void write_oracle(std::ostream& out, const std::vector<OracleRow>& rows, bool machine) {
  for (const auto& r : rows) {
    if (machine)
      out << "row instance=" << r.instance << " param=" << r.param << " formula=" << r.formula
          << " solver=" << r.solver << " clause=" << r.clause << " agree=" << (r.agree() ? "yes" : "no") << '\n';
    else
      out << r.instance << ' ' << r.param << ": formula " << r.formula << ", solver " << r.solver << ", "
          << (r.agree() ? "ok" : "MISMATCH") << "   [" << r.clause << "]\n";
  }
  const auto bad = std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.agree(); });
  if (machine)
    out << "summary rows=" << rows.size() << " mismatches=" << bad << '\n';
  else
    out << rows.size() << " rows, " << bad << " mismatches\n";
}

}  // namespace pvc

#endif  // PVC_SWEEP_HPP
