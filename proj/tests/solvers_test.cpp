#include <gtest/gtest.h>

#include <set>

#include "pvc/solvers.hpp"
#include "support.hpp"

using namespace pvc;

namespace {

// Set partitions of n items into exactly p blocks: surjections / p!.
std::uint64_t partitions_by_surjection(int n, int p) {
  std::uint64_t surjective = 0, total = 1, fact = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(p);
  for (int i = 2; i <= p; ++i) fact *= static_cast<std::uint64_t>(i);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const auto cs = test::colors_from_index(idx, n, p);
    if (static_cast<int>(std::set<int>(cs.begin(), cs.end()).size()) == p) ++surjective;
  }
  return surjective / fact;
}

bool is_restricted_growth(const std::vector<int>& s) {
  int top = 0;
  for (int x : s) {
    if (x < 1 || x > top + 1) return false;
    top = std::max(top, x);
  }
  return true;
}

// Smallest palette admitting a passing coloring, by trying every assignment.
template <class Pred>
int brute_force_minimum(const Graph& g, Pred&& passes, int upper) {
  const int n = g.order();
  if (passes(VertexColoring{})) return 0;
  for (int p = 1; p <= upper; ++p) {
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(p);
    for (std::uint64_t idx = 0; idx < total; ++idx)
      if (passes(VertexColoring(p, test::colors_from_index(idx, n, p)))) return p;
  }
  return upper + 1;
}

}  // namespace

TEST(RestrictedGrowth, CountsMatchPartitionCounts) {
  for (int n = 1; n <= 6; ++n)
    for (int p = 1; p <= n; ++p) {
      std::uint64_t visited = 0;
      std::set<std::vector<int>> distinct;
      std::vector<int> prev;
      for_each_restricted_growth(n, p, [&](const std::vector<int>& s) {
        ++visited;
        distinct.insert(s);
        EXPECT_TRUE(is_restricted_growth(s));
        EXPECT_EQ(*std::max_element(s.begin(), s.end()), p);
        if (!prev.empty()) {
          EXPECT_LT(prev, s);
        }
        prev = s;
        return false;
      });
      EXPECT_EQ(visited, partitions_by_surjection(n, p)) << n << " " << p;
      EXPECT_EQ(distinct.size(), visited);
    }
}

TEST(RestrictedGrowth, EdgeCases) {
  int calls = 0;
  EXPECT_FALSE(for_each_restricted_growth(3, 4, [&](const auto&) { return ++calls, false; }));
  EXPECT_FALSE(for_each_restricted_growth(3, 0, [&](const auto&) { return ++calls, false; }));
  EXPECT_EQ(calls, 0);
  EXPECT_TRUE(for_each_restricted_growth(0, 0, [&](const auto&) { return true; }));
  std::vector<int> first;
  EXPECT_TRUE(for_each_restricted_growth(4, 2, [&](const auto& s) {
    first = s;
    return true;
  }));
  EXPECT_EQ(first, (std::vector<int>{1, 1, 1, 2}));
}

TEST(Minimize, ChromaticNumberOfTriangle) {
  const Graph k3 = test::complete(3);
  const SolveResult r = minimize_palette(k3, [&](const VertexColoring& c) { return is_proper_coloring(k3, c); }, 1);
  EXPECT_EQ(r.value, 3);
  EXPECT_EQ(r.certificate.colors, (std::vector<int>{1, 2, 3}));
  EXPECT_GT(r.stats.colorings, 0U);
}

TEST(Minimize, StrongProperOnDiameterTwoAndPaths) {
  EXPECT_EQ(spvc_exact(test::petersen()).value, 1);
  EXPECT_EQ(spvc_exact(test::bipartite(2, 3)).value, 1);
  const SolveResult p4 = spvc_exact(test::path(4));
  EXPECT_EQ(p4.value, 2);
  EXPECT_EQ(p4.certificate.colors, (std::vector<int>{1, 1, 2, 1}));
}

TEST(Solvers, SpvcNamedGraphs) {
  EXPECT_EQ(spvc_exact(test::complete(5)).value, 0);
  EXPECT_TRUE(spvc_exact(test::complete(5)).certificate.empty());
  EXPECT_EQ(spvc_exact(test::cycle(9)).value, 3);
  EXPECT_EQ(spvc_exact(test::net()).value, 3);
  EXPECT_EQ(spvc_exact(test::cycle(8)).value, 2);
}

TEST(Solvers, PvcNamedGraphs) {
  EXPECT_EQ(pvc_exact(test::cycle(6)).value, 2);
  EXPECT_EQ(pvc_exact(test::complete(4)).value, 0);
  EXPECT_EQ(pvc_k_exact(test::cycle(5), 2).value, 3);
  EXPECT_EQ(pvc_k_exact(test::wheel(4), 3).value, 2);
  EXPECT_EQ(pvc_k_exact(test::complete(5), 4).value, 1);
}

TEST(Solvers, SrvcNamedGraphs) {
  EXPECT_EQ(srvc_exact(test::path(6)).value, 4);
  EXPECT_EQ(srvc_exact(test::petersen()).value, 1);
  EXPECT_EQ(srvc_exact(test::complete(4)).value, 0);
  EXPECT_EQ(srvc_exact(test::cycle(7)).value, 3);
}

TEST(Solvers, ChromaticNumbers) {
  EXPECT_EQ(chromatic_number_exact(test::cycle(7)).value, 3);
  EXPECT_EQ(chromatic_number_exact(test::petersen()).value, 3);
  EXPECT_EQ(chromatic_number_exact(test::complete(5)).value, 5);
  EXPECT_EQ(chromatic_number_exact(Graph(1, {})).value, 1);
}

TEST(Solvers, EdgeColoredConnection) {
  EXPECT_EQ(pc_k_exact(test::bipartite(2, 3), 2).value, 3);
  for (int n = 3; n <= 5; ++n) EXPECT_EQ(pc_k_exact(test::complete(n), 1).value, 1) << n;
  EXPECT_EQ(pc_k_exact(test::cycle(6), 2).value, 2);
  EXPECT_EQ(pc_k_exact(test::path(4), 1).value, 2);
  const EdgeSolveResult r = pc_k_exact(test::bipartite(2, 3), 2);
  EXPECT_TRUE(is_proper_k_connected_edges(test::bipartite(2, 3), r.certificate, 2));
}

TEST(Solvers, Errors) {
  const Graph split(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(spvc_exact(split), DisconnectedGraph);
  EXPECT_THROW(srvc_exact(split), DisconnectedGraph);
  EXPECT_THROW(pvc_exact(split), DisconnectedGraph);
  EXPECT_THROW(pc_k_exact(split, 1), DisconnectedGraph);
  EXPECT_THROW(pvc_k_exact(test::cycle(5), 3), std::out_of_range);
  EXPECT_THROW(pvc_k_exact(test::cycle(5), 0), std::out_of_range);
  EXPECT_THROW(pc_k_exact(test::path(4), 2), std::out_of_range);
  EXPECT_THROW(spvc_exact(test::path(11)), GuardViolation);
  EXPECT_THROW(pvc_k_exact(test::cycle(9), 2), GuardViolation);
  EXPECT_EQ(pvc_k_exact(test::cycle(9), 2, Guards().with_max_n(9)).value, 3);
  EXPECT_EQ(spvc_exact(test::path(11), Guards().with_max_n(11)).value, 2);
}

TEST(Solvers, SummaryLine) {
  SolveResult r;
  r.value = 3;
  r.stats.colorings = 1453;
  r.stats.seconds = 0.5;
  EXPECT_EQ(summary_line("spvc", r), "spvc=3 colorings=1453 time=0.5");
}

TEST(Solvers, MinimalityAgainstExhaustiveSearch) {
  for (const Graph& g : test::small_corpus()) {
    const StrongProperChecker sp(g);
    const ProperKConnectedChecker pk(g, 1);
    const SolveResult spvc = spvc_exact(g);
    const SolveResult pvc = pvc_exact(g);
    EXPECT_EQ(spvc.value, brute_force_minimum(g, [&](const VertexColoring& c) { return sp.passes(c); }, spvc.value))
        << encode_graph6(g);
    EXPECT_EQ(pvc.value, brute_force_minimum(g, [&](const VertexColoring& c) { return pk.passes(c); }, pvc.value))
        << encode_graph6(g);
    EXPECT_TRUE(spvc.certificate.empty() || is_restricted_growth(spvc.certificate.colors));
    EXPECT_EQ(spvc.certificate.palette, spvc.value);
  }
}

TEST(Solvers, CertificatesAreLexLeast) {
  for (const Graph& g : test::small_corpus()) {
    if (g.order() > 5) continue;
    const StrongRainbowChecker sr(g);
    const SolveResult r = srvc_exact(g);
    if (r.value == 0) continue;
    std::vector<int> first;
    for_each_restricted_growth(g.order(), r.value, [&](const std::vector<int>& s) {
      if (!sr.passes(VertexColoring(r.value, s))) return false;
      first = s;
      return true;
    });
    EXPECT_EQ(r.certificate.colors, first) << encode_graph6(g);
  }
}

TEST(Solvers, RelationsOnCorpus) {
  for (const Graph& g : test::small_corpus()) {
    const int n = g.order();
    const int pvc = pvc_exact(g).value, spvc = spvc_exact(g).value, srvc = srvc_exact(g).value;
    const int chi = chromatic_number_exact(g).value;
    const std::string w = encode_graph6(g);
    EXPECT_LE(pvc, spvc) << w;
    EXPECT_LE(spvc, std::min(chi, srvc)) << w;
    EXPECT_LE(srvc, n - 2) << w;
    EXPECT_EQ(srvc == n - 2, recognize_family(g).tag == FamilyTag::Path) << w;
    EXPECT_GE(pc_k_exact(g, 1).value, pvc) << w;
    const int kappa = vertex_connectivity(g);
    for (int k = 2; k <= kappa; ++k) EXPECT_LE(pvc_k_exact(g, k).value, chi) << w << " k=" << k;
  }
}
