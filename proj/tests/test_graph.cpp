#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"

using namespace linpow;

namespace {

bool connected_without(const Graph& G, VarMask within) {
  // plain DFS, independent of Graph::is_connected_on
  if (within == 0) return true;
  std::vector<std::size_t> stack{static_cast<std::size_t>(std::countr_zero(within))};
  VarMask seen = VarMask{1} << stack.back();
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < G.vertex_count(); ++w)
      if ((within >> w & 1U) && !(seen >> w & 1U) && G.has_edge(v, w)) {
        seen |= VarMask{1} << w;
        stack.push_back(w);
      }
  }
  return seen == within;
}

}  // namespace

TEST(Graph, EdgeIdealsOfSmallGraphs) {
  auto C4 = cycle_graph(4);
  EXPECT_EQ(edge_ideal(C4), make_ideal(4, {"a*b", "b*c", "c*d", "a*d"}));
  EXPECT_EQ(complementary_edge_ideal(C4), make_ideal(4, {"c*d", "a*d", "a*b", "b*c"}));
  EXPECT_EQ(complement_graph(C4).edge_count(), 2U);
  EXPECT_THROW(complementary_edge_ideal(Graph(2, {{0, 1}})), std::invalid_argument);
  EXPECT_THROW(complementary_edge_ideal(Graph(4)), std::invalid_argument);
}

TEST(Graph, RejectsLoopsAndMultiEdges) {
  Graph G(3);
  EXPECT_THROW(G.add_edge(1, 1), std::invalid_argument);
  G.add_edge(0, 1);
  EXPECT_THROW(G.add_edge(1, 0), std::invalid_argument);
  EXPECT_THROW(G.add_edge(0, 3), std::out_of_range);
  EXPECT_THROW(parse_graph("3\n1 1\n"), std::invalid_argument);
  EXPECT_THROW(parse_graph("3\n1 4\n"), std::out_of_range);
}

TEST(Graph, TextAndCodeRoundTrip) {
  auto G = parse_graph("# a triangle with a tail\n4\n1 2\n2 3\n1 3\n3 4\n");
  EXPECT_EQ(G.edge_count(), 4U);
  std::ostringstream os;
  write_graph(os, G);
  auto back = parse_graph(os.str());
  EXPECT_EQ(graph_mask(back), graph_mask(G));
  EXPECT_EQ(graph_code(graph_from_mask(4, graph_mask(G))), graph_code(G));
}

TEST(Graph, ChordalityMatchesInducedCycleOracle) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::uint64_t pairs = n * (n - 1) / 2;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m) {
      Graph G = graph_from_mask(n, m);
      bool chordal = oracle::chordal(G);
      ASSERT_EQ(is_chordal(G), chordal) << graph_code(G);
      std::vector<std::size_t> mcs = mcs_order(G);
      std::vector<std::size_t> peo(mcs.rbegin(), mcs.rend());
      ASSERT_EQ(is_perfect_elimination_order(G, peo), chordal) << graph_code(G);
    }
  }
}

TEST(Graph, ComponentCountAndIsolatedVertices) {
  Graph G(6, {{0, 1}, {2, 3}});
  EXPECT_EQ(c_count(G), 2U);
  EXPECT_EQ(isolated_vertices(G), VarMask{0b110000});
  EXPECT_EQ(c_count(path_graph(5)), 1U);
}

TEST(Graph, ComplementaryIdealFactorsThroughIsolatedVertices) {
  std::mt19937_64 rng(67);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 3 + rng() % 4;
    Graph G = graph_from_mask(n, rng() & ((std::uint64_t{1} << (n * (n - 1) / 2)) - 1));
    if (G.edge_count() == 0) continue;
    VarMask iso = isolated_vertices(G), core = G.all_vertices() & ~iso;
    if (std::popcount(core) < 3) continue;
    Graph H = induced_subgraph(G, core);
    std::vector<std::size_t> vars;
    for (VarMask f = core; f; f &= f - 1) vars.push_back(static_cast<std::size_t>(std::countr_zero(f)));
    auto embedded = embed_ideal(complementary_edge_ideal(H), vars, n);
    auto xA = minimalize({Monomial::from_mask(n, iso)}, n);
    EXPECT_EQ(complementary_edge_ideal(G), multiply_ideals(xA, embedded)) << graph_code(G);
  }
}

TEST(Graph, ConnectedEliminationLabeling) {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 200; ++t) {
    Graph G = random_connected_graph(rng, 2 + rng() % 6);
    auto order = connected_elimination_labeling(G);
    ASSERT_EQ(order.size(), G.vertex_count());
    VarMask left = G.all_vertices();
    for (auto v : order) {
      EXPECT_TRUE(connected_without(G, left)) << graph_code(G);
      left &= ~(VarMask{1} << v);
    }
    EXPECT_TRUE(is_connected_elimination(G, order, G.all_vertices()));
  }
  // a path must be eaten from its ends
  Graph P = path_graph(4);
  EXPECT_FALSE(is_connected_elimination(P, {1, 0, 2, 3}, P.all_vertices()));
  auto ord = connected_elimination_labeling(P);
  EXPECT_TRUE(ord.front() == 0 || ord.front() == 3);
}

TEST(Graph, ComplementaryPriorityPutsIsolatedVerticesLast) {
  Graph G(5, {{1, 2}, {2, 3}});
  auto p = complementary_priority(G);
  ASSERT_EQ(p.size(), 5U);
  EXPECT_TRUE((p[3] == 0 && p[4] == 4) || (p[3] == 4 && p[4] == 0));
}

TEST(Graph, EdgeIdealCharacterizationOnFiveVertices) {
  for (std::size_t n = 2; n <= 5; ++n) {
    std::uint64_t pairs = n * (n - 1) / 2;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << pairs); ++m) {
      Graph G = graph_from_mask(n, m);
      auto r = theoremA_verify(G, 2);
      EXPECT_EQ(r.chordal_complement, oracle::chordal(complement_graph(G)));
      EXPECT_TRUE(r.equivalence_holds()) << graph_code(G);
      EXPECT_FALSE(r.inconclusive());
    }
  }
}

TEST(Graph, ComplementaryCharacterizationOnFiveVertices) {
  for (std::size_t n = 3; n <= 5; ++n) {
    std::uint64_t pairs = n * (n - 1) / 2;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << pairs); ++m) {
      Graph G = graph_from_mask(n, m);
      auto r = theoremB_verify(G, 2);
      EXPECT_TRUE(r.equivalence_holds()) << graph_code(G);
      if (r.c == 1) {
        EXPECT_EQ(r.lq_depth(), 2U);
        EXPECT_TRUE(r.linres_q);
      }
    }
  }
}

TEST(Graph, CycleExamples) {
  auto c5 = theoremA_verify(cycle_graph(5), 1);
  EXPECT_FALSE(c5.chordal_complement);
  EXPECT_FALSE(c5.linres_q);
  auto c4 = theoremA_verify(cycle_graph(4), 3);
  EXPECT_TRUE(c4.linres_q);
  EXPECT_EQ(c4.lq_depth(), 3U);
  EXPECT_THROW(theoremA_verify(Graph(3), 1), std::invalid_argument);
}

TEST(Graph, EveryConnectedEliminationLabelingGivesLexQuotients) {
  std::mt19937_64 rng(83);
  for (int t = 0; t < 6; ++t) {
    Graph H = random_connected_graph(rng, 5);
    auto Ic = complementary_edge_ideal(H);
    auto sq = power_ideal(Ic, 2);
    std::vector<std::size_t> p{0, 1, 2, 3, 4};
    int labelings = 0;
    do {
      if (!is_connected_elimination(H, p, H.all_vertices())) continue;
      ++labelings;
      EXPECT_TRUE(lex_lq_check(Ic, p).ok) << graph_code(H);
      EXPECT_TRUE(lex_lq_check(sq, p).ok) << graph_code(H);
    } while (std::next_permutation(p.begin(), p.end()));
    EXPECT_GT(labelings, 0);
  }
}

TEST(Graph, DualOfComplementaryIdealIsTheGraphComplex) {
  std::mt19937_64 rng(89);
  for (int t = 0; t < 40; ++t) {
    Graph G = random_connected_graph(rng, 3 + rng() % 4);
    std::vector<VarMask> facets;
    for (auto [a, b] : G.edges()) facets.push_back((VarMask{1} << a) | (VarMask{1} << b));
    EXPECT_EQ(complex_from_ideal(alexander_dual(complementary_edge_ideal(G))), SimplicialComplex(G.vertex_count(), facets));
  }
}

TEST(Graph, EagonReinerPipelinesOnSmallExamples) {
  auto p4 = eagon_reiner(complementary_edge_ideal(path_graph(4)), kQ);
  EXPECT_TRUE(p4.linear_resolution);
  EXPECT_TRUE(p4.dual_cohen_macaulay);
  auto two = eagon_reiner(complementary_edge_ideal(Graph(4, {{0, 1}, {2, 3}})), F2());
  EXPECT_FALSE(two.linear_resolution);
  EXPECT_FALSE(two.dual_cohen_macaulay);
  auto tq = eagon_reiner(terai_ideal(), kQ), t2 = eagon_reiner(terai_ideal(), F2());
  EXPECT_TRUE(tq.linear_resolution && tq.dual_cohen_macaulay);
  EXPECT_FALSE(t2.linear_resolution || t2.dual_cohen_macaulay);
}

TEST(Graph, TwoDisjointEdges) {
  Graph G(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(c_count(G), 2U);
  auto Ic = complementary_edge_ideal(G);
  EXPECT_EQ(Ic, make_ideal(4, {"a*b", "c*d"}));
  EXPECT_EQ(regularity(Ic, kQ), 3);
  EXPECT_FALSE(theoremB_verify(G, 2).linres_q);
  EXPECT_EQ(c_count(Graph(3, {{0, 1}})), 1U);
}
