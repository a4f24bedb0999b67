#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>
#include <sstream>

#include "pvc/connectivity.hpp"
#include "pvc/enumerate.hpp"
#include "pvc/family.hpp"
#include "pvc/graph.hpp"
#include "pvc/graph6.hpp"
#include "support.hpp"

using namespace pvc;
using pvc::test::small_corpus;

TEST(Graph, BuildsPathAndCycle) {
  const Graph p3 = build_graph(3, std::vector<Edge>{{0, 1}, {1, 2}});
  EXPECT_EQ(p3.size(), 2);
  EXPECT_EQ(recognize_family(p3).name(), "P_3");
  const Graph c4 = build_graph(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_TRUE(isomorphic(c4, test::cycle(4)));
  EXPECT_EQ(c4.degree(0), 2);
}

TEST(Graph, RejectsSelfLoopAndRange) {
  EXPECT_THROW(build_graph(3, std::vector<Edge>{{0, 0}}), std::invalid_argument);
  EXPECT_THROW(build_graph(3, std::vector<Edge>{{0, 3}}), std::invalid_argument);
  EXPECT_THROW(build_graph(3, std::vector<Edge>{{-1, 2}}), std::invalid_argument);
}

TEST(Graph, DuplicateEdgesCollapse) {
  const Graph g(3, {{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(g.size(), 1);
  EXPECT_EQ(g.edge_index(1, 0), 0);
}

TEST(Graph, EdgesAreLexicographic) {
  const Graph g(4, {{2, 3}, {0, 2}, {1, 0}});
  const std::vector<Edge> want{{0, 1}, {0, 2}, {2, 3}};
  EXPECT_EQ(g.edges(), want);
}

TEST(Graph6, HandEncodedSmallGraphs) {
  EXPECT_EQ(parse_graph6("A_"), test::complete(2));
  EXPECT_EQ(parse_graph6("Bw"), test::complete(3));
  EXPECT_EQ(encode_graph6(test::complete(3)), "Bw");
  EXPECT_EQ(encode_graph6(test::complete(2)), "A_");
  EXPECT_EQ(encode_graph6(parse_graph6("Bg")), "Bg");
  EXPECT_EQ(encode_graph6(Graph(1, {})), "@");
}

TEST(Graph6, AcceptsHeaderAndNewline) {
  EXPECT_EQ(parse_graph6(">>graph6<<Bw\n"), test::complete(3));
  EXPECT_EQ(parse_graph_auto("  Bw \n"), test::complete(3));
}

TEST(Graph6, RejectsMalformedInput) {
  EXPECT_THROW(parse_graph6(""), std::invalid_argument);
  EXPECT_THROW(parse_graph6("B"), std::invalid_argument);     // too short
  EXPECT_THROW(parse_graph6("Bww"), std::invalid_argument);   // too long
  EXPECT_THROW(parse_graph6("Bx"), std::invalid_argument);    // padding bit set
  EXPECT_THROW(parse_graph6("~??~"), std::invalid_argument);  // multi-byte header
  EXPECT_THROW(parse_graph6("?"), std::invalid_argument);     // n = 0
}

TEST(Graph6, RoundTripOnCorpus) {
  for (const Graph& g : small_corpus()) {
    const std::string s = encode_graph6(g);
    EXPECT_EQ(parse_graph6(s), g) << s;
    EXPECT_EQ(encode_graph6(parse_graph6(s)), s);
  }
}

TEST(Graph6, RoundTripOnRandomLabelledGraphs) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 20;
    std::vector<Edge> es;
    std::bernoulli_distribution coin(0.4);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) es.emplace_back(u, v);
    const Graph g(n, es);
    EXPECT_EQ(parse_graph6(encode_graph6(g)), g);
  }
}

TEST(EdgeList, ParsesBothLayouts) {
  EXPECT_EQ(parse_edge_list("4 3\n0 1\n1 2\n2 3\n"), test::path(4));
  EXPECT_EQ(parse_graph_auto("4 3; 0 1; 1 2; 2 3"), test::path(4));
  EXPECT_EQ(parse_graph_auto(format_edge_list(test::petersen())), test::petersen());
}

TEST(EdgeList, RejectsBadCounts) {
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), std::invalid_argument);
  EXPECT_THROW(parse_edge_list("3 1\n0 7\n"), std::invalid_argument);
  EXPECT_THROW(parse_edge_list("x"), std::invalid_argument);
}

TEST(Corpus, SkipsCommentsAndBlankLines) {
  std::istringstream in("# header\nBw\n\nA_\n");
  const auto graphs = read_graph6_corpus(in);
  ASSERT_EQ(graphs.size(), 2U);
  EXPECT_EQ(graphs[1], test::complete(2));
}

TEST(Distances, NamedGraphs) {
  EXPECT_EQ(diameter(test::cycle(6)), 3);
  EXPECT_EQ(diameter(test::complete(5)), 1);
  EXPECT_EQ(diameter(test::path(5)), 4);
  EXPECT_EQ(diameter(test::petersen()), 2);
}

TEST(Distances, DisconnectedDiameterThrows) {
  const Graph g(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(diameter(g), DisconnectedGraph);
  const DistanceMatrix d(g);
  EXPECT_EQ(d(0, 2), DistanceMatrix::kUnreachable);
  EXPECT_FALSE(d.all_finite());
}

TEST(Distances, MetricPropertiesOnRandomGraphs) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 9;
    const Graph g = test::random_connected(rng, n, 0.25);
    const DistanceMatrix d(g);
    for (int u = 0; u < n; ++u) {
      EXPECT_EQ(d(u, u), 0);
      for (int v = 0; v < n; ++v) {
        EXPECT_EQ(d(u, v), d(v, u));
        EXPECT_EQ(d(u, v) == 1, g.adjacent(u, v));
        for (int w = 0; w < n; ++w) EXPECT_LE(d(u, w), d(u, v) + d(v, w));
      }
    }
  }
}

TEST(Distances, GeodesicLayers) {
  const Graph c6 = test::cycle(6);
  const DistanceMatrix d(c6);
  EXPECT_EQ(d.geodesic_layer(0, 3, 1), bit(1) | bit(5));
  EXPECT_EQ(d.geodesic_layer(0, 3, 2), bit(2) | bit(4));
  EXPECT_EQ(d.geodesic_layer(0, 3, 3), bit(3));
}

TEST(Connectivity, NamedGraphs) {
  EXPECT_EQ(vertex_connectivity(test::wheel(5)), 3);
  EXPECT_EQ(vertex_connectivity(test::cycle(7)), 2);
  EXPECT_EQ(vertex_connectivity(test::bipartite(2, 4)), 2);
  EXPECT_EQ(vertex_connectivity(test::complete(6)), 5);
  EXPECT_EQ(vertex_connectivity(test::path(5)), 1);
  EXPECT_EQ(vertex_connectivity(test::petersen()), 3);
  EXPECT_EQ(vertex_connectivity(Graph(4, {{0, 1}, {2, 3}})), 0);
}

namespace {

// Smallest vertex set whose removal disconnects g or leaves one vertex.
int brute_force_connectivity(const Graph& g) {
  const int n = g.order();
  int best = n - 1;
  for (VertexSet cut = 0; cut < bit(n); ++cut) {
    const int size = popcount(cut);
    if (size >= best) continue;
    const VertexSet rest = g.vertices() & ~cut;
    if (popcount(rest) < 2) continue;
    VertexSet seen = bit(lowest(rest)), frontier = seen;
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f; f &= f - 1) next |= g.neighbors(lowest(f)) & rest;
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen != rest) best = size;
  }
  return best;
}

}  // namespace

TEST(Connectivity, MatchesBruteForceMinimumCut) {
  for (const Graph& g : small_corpus()) EXPECT_EQ(vertex_connectivity(g), brute_force_connectivity(g)) << encode_graph6(g);
}

TEST(Family, TieBreaks) {
  EXPECT_EQ(recognize_family(test::cycle(4)).name(), "K_{2,2}");
  EXPECT_EQ(recognize_family(test::cycle(3)).name(), "K_3");
  EXPECT_EQ(recognize_family(test::multipartite({2, 2, 2})).name(), "K_{2,2,2}");
  const Graph diamond(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  const FamilyDescriptor d = recognize_family(diamond);
  EXPECT_EQ(d.tag, FamilyTag::CompleteMultipartite);
  EXPECT_EQ(d.params, (std::vector<int>{1, 1, 2}));
  EXPECT_EQ(recognize_family(test::wheel(3)).name(), "K_4");
  EXPECT_EQ(recognize_family(test::bipartite(1, 2)).name(), "P_3");
  EXPECT_EQ(recognize_family(test::net()).tag, FamilyTag::Other);
}

TEST(Family, RecognizeInvertsMake) {
  std::vector<FamilyDescriptor> ds;
  for (int n = 4; n <= 10; ++n) ds.push_back(FamilyDescriptor::path(n));
  for (int n = 5; n <= 10; ++n) ds.push_back(FamilyDescriptor::cycle(n));
  for (int n = 1; n <= 8; ++n) ds.push_back(FamilyDescriptor::complete(n));
  for (int n = 4; n <= 9; ++n) ds.push_back(FamilyDescriptor::wheel(n));
  for (int a = 1; a <= 4; ++a)
    for (int b = std::max(a, 2); b <= 5; ++b)
      if (!(a == 1 && b == 2) && !(a == 2 && b == 2)) ds.push_back(FamilyDescriptor::complete_bipartite(a, b));
  ds.push_back(FamilyDescriptor::complete_multipartite({1, 1, 2}));
  ds.push_back(FamilyDescriptor::complete_multipartite({1, 2, 3, 3}));
  ds.push_back(FamilyDescriptor::complete_multipartite({2, 2, 2, 2}));
  for (const auto& d : ds) {
    const FamilyDescriptor back = recognize_family(make_family(d));
    EXPECT_EQ(back.tag, d.tag) << d.name();
    EXPECT_EQ(back.params, d.params) << d.name();
    EXPECT_EQ(make_family(d).order(), d.order());
  }
}

TEST(Family, Builders) {
  const Graph c5 = make_family(FamilyDescriptor::cycle(5));
  for (int i = 0; i < 5; ++i) EXPECT_TRUE(c5.adjacent(i, (i + 1) % 5));
  EXPECT_EQ(c5.size(), 5);
  EXPECT_TRUE(isomorphic(corona_complete(2), test::path(4)));
  const Graph w4 = test::wheel(4);
  EXPECT_EQ(w4.order(), 5);
  EXPECT_EQ(w4.degree(4), 4);
  EXPECT_THROW(make_family(FamilyDescriptor::cycle(2)), std::invalid_argument);
  EXPECT_THROW(make_family(FamilyDescriptor::other()), std::invalid_argument);
  EXPECT_THROW(make_family({FamilyTag::CompleteMultipartite, {3, 1, 2}}), std::invalid_argument);
  EXPECT_THROW(corona_complete(0), std::invalid_argument);
}

TEST(Enumerate, CountsPerOrder) {
  EXPECT_EQ(enumerate_connected_graphs(3).size(), 2U);
  EXPECT_EQ(enumerate_connected_graphs(4).size(), 6U);
  EXPECT_EQ(enumerate_connected_graphs(5).size(), 21U);
  EXPECT_EQ(enumerate_connected_graphs(6).size(), 112U);
  EXPECT_EQ(small_corpus().size(), 141U);
  EXPECT_THROW(enumerate_connected_graphs(2), std::invalid_argument);
  EXPECT_THROW(enumerate_connected_graphs(7), std::invalid_argument);
}

TEST(Enumerate, PairwiseNonIsomorphicAndConnected) {
  std::set<std::string> seen;
  for (const Graph& g : small_corpus()) {
    EXPECT_TRUE(g.is_connected());
    EXPECT_TRUE(seen.insert(canonical_graph6(g)).second) << encode_graph6(g);
  }
}

namespace {

// Second canonical form: minimum adjacency code over the orderings that list
// vertices by descending degree, permuting only within equal-degree classes.
std::uint64_t degree_refined_code(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<std::pair<int, int>> classes;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && g.degree(order[j]) == g.degree(order[i])) ++j;
    classes.emplace_back(i, j);
    i = j;
  }
  auto code = [&] {
    std::uint64_t c = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) c = (c << 1) | (g.adjacent(order[i], order[j]) ? 1 : 0);
    return c;
  };
  std::uint64_t best = ~std::uint64_t{0};
  std::function<void(std::size_t)> rec = [&](std::size_t cls) {
    if (cls == classes.size()) {
      best = std::min(best, code());
      return;
    }
    auto first = order.begin() + classes[cls].first, last = order.begin() + classes[cls].second;
    std::sort(first, last);
    do rec(cls + 1);
    while (std::next_permutation(first, last));
  };
  rec(0);
  return best;
}

}  // namespace

TEST(Enumerate, IndependentRecount) {
  const std::map<int, std::size_t> expected{{3, 2}, {4, 6}, {5, 21}, {6, 112}};
  for (auto [n, want] : expected) {
    std::set<std::uint64_t> classes;
    const int slots = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1U << slots); ++mask) {
      std::vector<Edge> es;
      int k = 0;
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
          if (mask >> k & 1U) es.emplace_back(i, j);
      const Graph g(n, es);
      if (g.is_connected()) classes.insert(degree_refined_code(g));
    }
    EXPECT_EQ(classes.size(), want) << "n = " << n;
    EXPECT_EQ(enumerate_connected_graphs(n).size(), want);
  }
}

TEST(Enumerate, CanonicalFormIsLabelInvariant) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = test::random_connected(rng, 7, 0.3);
    std::vector<Vertex> perm(7);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = g.relabeled(perm);
    EXPECT_EQ(canonical_form(g), canonical_form(h));
    EXPECT_TRUE(isomorphic(g, h));
  }
  EXPECT_FALSE(isomorphic(test::path(4), test::bipartite(1, 3)));
}
