// pvc: compute, verify and construct proper vertex-connection colorings.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pvc/certificate.hpp"
#include "pvc/constructions.hpp"
#include "pvc/formulas.hpp"
#include "pvc/graph6.hpp"
#include "pvc/solvers.hpp"
#include "pvc/sweep.hpp"
#include "pvc/verdicts.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::string input;
  std::string certificate;
  std::string param = "spvc";
  int k = 0;
  std::string format = "human";
  int max_n = 0;
  int max_k = 0;
  std::string rebuild_catalog;
  std::string orders = "3-6";
  bool inject_fault = false;
  bool no_pc = false;
  unsigned seed = 1;
  std::string construction;
  std::vector<int> numbers;

  bool machine() const { return format == "machine"; }

  pvc::Guards guards() const {
    pvc::Guards g;
    if (max_n > 0) g.with_max_n(max_n);
    if (max_k > 0) g.max_k = max_k;
    return g;
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& arg) {
  if (arg.empty()) throw UsageError("--input is required");
  if (arg == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }
  return arg;
}

pvc::Graph load_graph(const std::string& arg) {
  try {
    return pvc::parse_graph_auto(read_text(arg));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("cannot parse graph: ") + e.what());
  }
}

int resolved_k(const RunConfig& cfg, bool k_variant) {
  if (k_variant && cfg.k < 1) throw UsageError("--param " + cfg.param + " requires --k >= 1");
  if (!k_variant && cfg.k > 1) throw UsageError("--k applies only to pvc_k and pc_k");
  if (cfg.max_k > 0 && cfg.k > cfg.max_k)
    throw pvc::GuardViolation("--param " + cfg.param, cfg.k);
  return k_variant ? cfg.k : 1;
}

void print_coloring(std::ostream& out, const pvc::VertexColoring& c, bool machine) {
  if (machine) {
    out << "coloring kind=vertex palette=" << c.palette << '\n';
    for (std::size_t v = 0; v < c.colors.size(); ++v) out << "color v=" << v << " c=" << c.colors[v] << '\n';
  } else {
    out << pvc::format_certificate(c);
  }
}

void print_verdict(std::ostream& out, const std::string& label, const pvc::Verdict& v, bool machine, bool paths) {
  if (machine) {
    out << "verdict check=" << label << " status=" << (v.pass ? "pass" : "fail");
    if (v.failing_pair) out << " pair=" << v.failing_pair->first << ',' << v.failing_pair->second;
    out << '\n';
    return;
  }
  if (v.pass) {
    out << "verdict " << label << ": pass\n";
    if (paths)
      for (const auto& pp : v.witness) {
        out << "  " << pp.u << "-" << pp.v << ":";
        for (const auto& p : pp.paths) {
          out << " [";
          for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
          out << "]";
        }
        out << '\n';
      }
  } else {
    out << "verdict " << label << ": fail at pair (" << v.failing_pair->first << ", " << v.failing_pair->second << ")\n";
  }
}

int cmd_compute(const RunConfig& cfg) {
  const pvc::Graph g = load_graph(cfg.input);
  if (!g.is_connected()) throw UsageError("input graph is disconnected");
  const pvc::Guards guards = cfg.guards();
  const std::string& p = cfg.param;
  auto emit = [&](const std::string& name, const auto& result, auto&& print_cert) {
    if (!cfg.machine()) std::cout << name << '=' << result.value << '\n';
    print_cert();
    std::cout << pvc::summary_line(name, result) << '\n';
    return kExitPass;
  };
  if (p == "pc" || p == "pc_k") {
    const int k = resolved_k(cfg, p == "pc_k");
    const auto r = pvc::pc_k_exact(g, k, guards);
    const std::string name = p == "pc" ? "pc" : "pc_" + std::to_string(k);
    return emit(name, r, [&] {
      if (cfg.machine()) {
        std::cout << "coloring kind=edge palette=" << r.certificate.palette << '\n';
        for (std::size_t i = 0; i < r.certificate.colors.size(); ++i)
          std::cout << "color e=" << g.edges()[i].first << '-' << g.edges()[i].second
                    << " c=" << r.certificate.colors[i] << '\n';
      } else {
        std::cout << pvc::format_certificate(g, r.certificate);
      }
    });
  }
  pvc::SolveResult r;
  std::string name = p;
  if (p == "pvc") {
    resolved_k(cfg, false);
    r = pvc::pvc_exact(g, guards);
  } else if (p == "pvc_k") {
    const int k = resolved_k(cfg, true);
    r = pvc::pvc_k_exact(g, k, guards);
    name = "pvc_" + std::to_string(k);
  } else if (p == "spvc") {
    resolved_k(cfg, false);
    r = pvc::spvc_exact(g, guards);
  } else if (p == "srvc") {
    resolved_k(cfg, false);
    r = pvc::srvc_exact(g, guards);
  } else if (p == "chi") {
    resolved_k(cfg, false);
    r = pvc::chromatic_number_exact(g, guards);
  } else {
    throw UsageError("unknown --param '" + p + "'");
  }
  return emit(name, r, [&] { print_coloring(std::cout, r.certificate, cfg.machine()); });
}

int cmd_verify(const RunConfig& cfg) {
  const pvc::Graph g = load_graph(cfg.input);
  if (!g.is_connected()) throw UsageError("input graph is disconnected");
  if (cfg.certificate.empty()) throw UsageError("verify needs --certificate");
  pvc::Certificate cert;
  try {
    cert = pvc::parse_certificate(g, read_text(cfg.certificate));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const pvc::Guards guards = cfg.guards();
  const std::string& p = cfg.param;
  pvc::Verdict verdict;
  std::string label = p;
  if (p == "pc" || p == "pc_k") {
    const auto* ec = std::get_if<pvc::EdgeColoring>(&cert);
    if (!ec) throw UsageError("--param " + p + " needs an edge-coloring certificate");
    const int k = resolved_k(cfg, p == "pc_k");
    verdict = pvc::is_proper_k_connected_edges(g, *ec, k, guards);
    label = "proper-" + std::to_string(k) + "-connected-edges";
  } else {
    const auto* vc = std::get_if<pvc::VertexColoring>(&cert);
    if (!vc) throw UsageError("--param " + p + " needs a vertex-coloring certificate");
    if (p == "pvc" || p == "pvc_k") {
      const int k = resolved_k(cfg, p == "pvc_k");
      verdict = pvc::is_proper_vertex_k_connected(g, *vc, k, guards);
      label = "proper-vertex-" + std::to_string(k) + "-connected";
    } else if (p == "spvc") {
      verdict = pvc::is_strong_proper_vertex_connected(g, *vc);
      label = "strong-proper";
    } else if (p == "srvc") {
      verdict = pvc::is_strong_rainbow_vertex_connected(g, *vc);
      label = "strong-rainbow";
    } else if (p == "chi") {
      verdict = pvc::ProperColoringChecker(g).verdict(*vc);
      label = "proper-coloring";
    } else {
      throw UsageError("unknown --param '" + p + "'");
    }
  }
  print_verdict(std::cout, label, verdict, cfg.machine(), true);
  return verdict.pass ? kExitPass : kExitFail;
}

int emit_construction(const RunConfig& cfg, const pvc::ConstructionOutput& out) {
  std::cout << "graph6 " << pvc::encode_graph6(out.graph) << '\n';
  if (cfg.machine()) {
    std::cout << "graph n=" << out.graph.order() << " m=" << out.graph.size() << '\n';
    for (auto [u, v] : out.graph.edges()) std::cout << "edge u=" << u << " v=" << v << '\n';
  } else {
    std::cout << pvc::format_edge_list(out.graph);
  }
  bool all = true;
  for (const auto& cert : out.certificates) {
    if (!cfg.machine()) std::cout << "# " << cert.name << " <= " << cert.value << '\n';
    print_coloring(std::cout, cert.coloring, cfg.machine());
    const pvc::Verdict v = pvc::check_certificate(out.graph, cert, cfg.guards());
    print_verdict(std::cout, cert.name + ":" + pvc::to_string(cert.predicate), v, cfg.machine(), false);
    all = all && v.pass && cert.coloring.palette == cert.value;
  }
  return all ? kExitPass : kExitFail;
}

int cmd_construct(const RunConfig& cfg) {
  const std::string& kind = cfg.construction;
  const auto& a = cfg.numbers;
  auto need = [&](std::size_t count) {
    if (a.size() != count)
      throw UsageError("construct " + kind + " takes " + std::to_string(count) + " integer arguments");
  };
  try {
    if (kind == "corona-path") {
      need(2);
      return emit_construction(cfg, pvc::corona_path_construction(a[0], a[1]));
    }
    if (kind == "pendant-clique") {
      need(3);
      return emit_construction(cfg, pvc::pendant_clique_construction(a[0], a[1], a[2]));
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const pvc::Graph g = load_graph(cfg.input);
  pvc::ConstructionOutput out{g, {}};
  if (kind == "parity") {
    need(0);
    out.certificates.push_back({"pvc", pvc::Predicate::ProperVertexKConnected, 1, 2, pvc::bfs_parity_coloring(g)});
  } else if (kind == "few-colors") {
    need(0);
    const auto lc = pvc::few_colors_coloring(g, cfg.guards());
    if (!cfg.machine()) std::cout << "# case " << pvc::to_string(lc.which) << '\n';
    out.certificates.push_back(
        {"spvc", pvc::Predicate::StrongProper, 1, lc.coloring.palette, lc.coloring});
  } else if (kind == "family") {
    need(0);
    const int k = cfg.k > 0 ? cfg.k : 1;
    const auto fam = pvc::recognize_family(g);
    const pvc::Graph canon = pvc::make_family(fam);
    out.graph = canon;
    const auto c = pvc::optimal_family_coloring(fam, k);
    out.certificates.push_back({"pvc_" + std::to_string(k), pvc::Predicate::ProperVertexKConnected, k,
                                pvc::pvc_k_family_formula(fam, k).value, c});
  } else {
    throw UsageError("unknown construction '" + kind +
                     "' (expected corona-path, pendant-clique, parity, few-colors, family)");
  }
  return emit_construction(cfg, out);
}

std::pair<int, int> parse_orders(const std::string& s) {
  int lo = 0, hi = 0;
  char dash = 0;
  std::istringstream in(s);
  if (in >> lo) {
    if (in >> dash >> hi && dash == '-') return {lo, hi};
    if (!dash) return {lo, lo};
  }
  throw UsageError("--orders expects N or LO-HI");
}

int cmd_sweep(const RunConfig& cfg) {
  pvc::SweepOptions opt;
  opt.guards = cfg.guards();
  opt.inject_fault = cfg.inject_fault;
  opt.with_pc = !cfg.no_pc;
  std::vector<pvc::Graph> corpus;
  if (!cfg.input.empty()) {
    std::istringstream in(read_text(cfg.input));
    try {
      corpus = pvc::read_graph6_corpus(in);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else {
    const auto [lo, hi] = parse_orders(cfg.orders);
    if (lo < pvc::kMinEnumeratedOrder || hi > pvc::kMaxEnumeratedOrder || lo > hi)
      throw UsageError("--orders must lie within 3-6; supply larger orders with --input");
    corpus = pvc::enumerate_connected_graphs(lo, hi);
    for (int n = lo; n <= hi; ++n) opt.complete_orders.insert(n);
  }
  const pvc::SweepReport report = pvc::run_sweep(corpus, opt);
  if (cfg.machine())
    pvc::write_sweep_machine(std::cout, report);
  else
    pvc::write_sweep_human(std::cout, report);

  if (!cfg.rebuild_catalog.empty()) {
    std::ofstream out(cfg.rebuild_catalog);
    if (!out) throw UsageError("cannot write catalog to " + cfg.rebuild_catalog);
    out << pvc::format_catalog(report.catalog);
    std::cerr << "wrote " << report.catalog.size() << " entries to " << cfg.rebuild_catalog << '\n';
  }
  return report.all_passed() ? kExitPass : kExitFail;
}

int cmd_oracle(const RunConfig& cfg) {
  const auto rows = pvc::run_oracle(cfg.guards());
  pvc::write_oracle(std::cout, rows, cfg.machine());
  for (const auto& r : rows)
    if (!r.agree()) return kExitFail;
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact proper vertex-connection parameters of small graphs"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output mode")->check(CLI::IsMember({"human", "machine"}));
    sub->add_option("--max-n", cfg.max_n, "Raise or lower every order guard")->check(CLI::PositiveNumber);
    sub->add_option("--max-k", cfg.max_k, "Largest k accepted")->check(CLI::PositiveNumber);
  };
  const std::vector<std::string> params{"pvc", "pvc_k", "spvc", "srvc", "chi", "pc", "pc_k"};

  auto* compute = app.add_subcommand("compute", "Compute a parameter exactly, with an optimal certificate");
  compute->add_option("--input,-i", cfg.input, "graph6 or edge-list file, inline text, or - for stdin")->required();
  compute->add_option("--param,-p", cfg.param, "Parameter")->check(CLI::IsMember(params));
  compute->add_option("--k", cfg.k, "k for pvc_k / pc_k")->check(CLI::PositiveNumber);
  add_common(compute);

  auto* verify = app.add_subcommand("verify", "Check a certificate against a predicate");
  verify->add_option("--input,-i", cfg.input, "Graph")->required();
  verify->add_option("--certificate,-c", cfg.certificate, "Certificate file or inline text")->required();
  verify->add_option("--param,-p", cfg.param, "Which predicate")->check(CLI::IsMember(params));
  verify->add_option("--k", cfg.k, "k for pvc_k / pc_k")->check(CLI::PositiveNumber);
  add_common(verify);

  auto* construct = app.add_subcommand("construct", "Build a construction and check its certificates");
  construct->add_option("kind", cfg.construction, "corona-path, pendant-clique, parity, few-colors, family")
      ->required();
  construct->add_option("numbers", cfg.numbers, "Integer parameters");
  construct->add_option("--input,-i", cfg.input, "Graph (parity, few-colors, family)");
  construct->add_option("--k", cfg.k, "k for family colorings")->check(CLI::PositiveNumber);
  add_common(construct);

  auto* sweep = app.add_subcommand("sweep", "Check every relation over the small-graph corpus");
  sweep->add_option("--orders", cfg.orders, "Enumerated orders, N or LO-HI within 3-6");
  sweep->add_option("--input,-i", cfg.input, "graph6 corpus instead of enumeration");
  sweep->add_option("--rebuild-catalog", cfg.rebuild_catalog, "Write the spvc = n-3 catalog here");
  sweep->add_flag("--inject-fault", cfg.inject_fault, "Self-test: corrupt one formula");
  sweep->add_flag("--no-pc", cfg.no_pc, "Skip the edge-colored parameters");
  sweep->add_option("--seed", cfg.seed, "Seed for randomized suites (recorded only)");
  add_common(sweep);

  auto* oracle = app.add_subcommand("oracle", "Closed forms against exact solvers");
  add_common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*compute) return cmd_compute(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*construct) return cmd_construct(cfg);
    if (*sweep) return cmd_sweep(cfg);
    if (*oracle) return cmd_oracle(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const pvc::GuardViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
