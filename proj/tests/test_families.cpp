#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace linpow;

namespace {

MonomialIdeal y1_times(const MonomialIdeal& I, std::size_t n, unsigned power = 1) {
  return multiply_ideals(minimalize({Monomial::variable(n, 6, static_cast<Monomial::Exponent>(power))}, n), I);
}

MonomialIdeal on_first_six(const MonomialIdeal& I, std::size_t n) { return embed_ideal(I, {0, 1, 2, 3, 4, 5}, n); }

}  // namespace

TEST(Families, TeraiIdeal) {
  auto I = terai_ideal();
  EXPECT_EQ(I.size(), 10U);
  EXPECT_TRUE(I.is_equigenerated());
  EXPECT_EQ(I.alpha(), 3U);
  auto p = ideal_profile(I);
  EXPECT_TRUE(p.fully_supported);
  for (const char* g : {"a*b*d", "a*b*f", "a*c*e", "a*c*d"}) EXPECT_TRUE(I.contains(make_ideal(6, {g})[0]));
  EXPECT_EQ(theoremC_ideal({6, 3}), I);
}

TEST(Families, SturmfelsIdealAndSquare) {
  auto st = sturmfels_ideal();
  EXPECT_EQ(st.ideal.size(), 8U);
  for (std::size_t k = 0; k < 8; ++k) EXPECT_EQ(to_string(st.ideal[st.order[k]]), to_string(make_ideal(6, {sturmfels_sequence()[k]})[0]));
  for (auto K : {kQ, F2(), F3()}) EXPECT_EQ(regularity(st.ideal, K), 3);
  auto sq = power_ideal(st.ideal, 2);
  EXPECT_EQ(oracle::generator_set(sq), oracle::power(st.ideal, 2));
  EXPECT_EQ(sq.size(), 36U);
  EXPECT_EQ(regularity(sq, kQ), 7);
  EXPECT_FALSE(has_linear_resolution(sq, kQ));
  EXPECT_EQ(theoremD_ideal({6, 3}).ideal, st.ideal);
}

TEST(Families, QuadraticVeronese) {
  auto L = veronese2_ideal();
  EXPECT_EQ(L.size(), 15U);
  EXPECT_TRUE(is_polymatroidal(L));
  EXPECT_EQ(regularity(L, kQ), 2);
  EXPECT_EQ(regularity(L, F2()), 2);
  EXPECT_EQ(find_lq_order(L).status, SearchStatus::found);
  EXPECT_EQ(squarefree_veronese(4, 5).size(), 0U);
}

TEST(Families, ParameterChecks) {
  EXPECT_THROW(theoremC_ideal({5, 3}), std::invalid_argument);
  EXPECT_THROW(theoremC_ideal({6, 4}), std::invalid_argument);
  EXPECT_THROW(theoremD_ideal({7, 2}), std::invalid_argument);
}

TEST(Families, SquarefreeFamilyInstances) {
  struct Case {
    std::size_t n;
    unsigned d;
    std::size_t gens;
  };
  for (auto c : {Case{6, 3, 10}, Case{7, 3, 25}, Case{7, 4, 10}}) {
    auto I = theoremC_ideal({c.n, c.d});
    EXPECT_EQ(I.size(), c.gens);
    EXPECT_TRUE(I.is_squarefree());
    EXPECT_TRUE(I.is_equigenerated());
    EXPECT_EQ(I.alpha(), c.d);
    EXPECT_TRUE(ideal_profile(I).fully_supported);
    EXPECT_EQ(regularity(I, kQ), static_cast<int>(c.d));
    EXPECT_EQ(regularity(I, F2()), static_cast<int>(c.d) + 1);
  }
}

TEST(Families, OrderedFamilyAtSevenThree) {
  auto D = theoremD_ideal({7, 3});
  EXPECT_TRUE(verify_lq_order(D.ideal, D.order).ok);
  std::vector<Monomial> seq;
  for (auto i : D.order) seq.push_back(D.ideal[i]);
  EXPECT_TRUE(oracle::linear_quotients(seq));
  auto sq = power_ideal(D.ideal, 2);
  EXPECT_EQ(regularity(sq, kQ), 7);
  // restriction to a..f recovers the Sturmfels square
  EXPECT_EQ(restrict_ideal(sq, {0, 1, 2, 3, 4, 5}), power_ideal(sturmfels_ideal().ideal, 2));
  EXPECT_TRUE(ideal_contained(on_first_six(restrict_ideal(sq, {0, 1, 2, 3, 4, 5}), 7), sq));
}

TEST(Families, OrderedFamilyRestrictionCarriesTheSquaredPrefix) {
  // n = 8, d = 4: prefix y1, block y2. Direct expansion of I^2 restricted to
  // a..f, y1 gives y1^2 times the Sturmfels square.
  auto D = theoremD_ideal({8, 4});
  auto sq = power_ideal(D.ideal, 2);
  auto R = restrict_ideal(sq, {0, 1, 2, 3, 4, 5, 6});
  auto expect = y1_times(on_first_six(power_ideal(sturmfels_ideal().ideal, 2), 7), 7, 2);
  EXPECT_EQ(R, expect);
}

TEST(Families, IntersectionWithTheConeOverL) {
  auto J = on_first_six(terai_ideal(), 7);
  auto yL = y1_times(on_first_six(veronese2_ideal(), 7), 7);
  EXPECT_EQ(intersect_ideals(J, yL), y1_times(J, 7));
}

TEST(Families, BettiSplittingOfSquarefreeFamilyAtSeven) {
  auto I = theoremC_ideal({7, 3});
  auto J = on_first_six(terai_ideal(), 7);
  auto yL = y1_times(on_first_six(veronese2_ideal(), 7), 7);
  for (auto K : {kQ, F2()}) {
    auto r = betti_splitting_check(I, J, yL, K);
    EXPECT_TRUE(r.holds) << K.name();
    for (const auto& c : r.cells) EXPECT_EQ(c.residual(), 0);
  }
  EXPECT_THROW(betti_splitting_check(I, J, J, kQ), std::invalid_argument);
}

TEST(Families, TorVanishingMaps) {
  auto J = on_first_six(terai_ideal(), 7);
  auto yL = y1_times(on_first_six(veronese2_ideal(), 7), 7);
  auto W = intersect_ideals(J, yL);
  auto first = tor_vanishing_lcm_check(W, J, lex_least_divisor_map(W, J));
  EXPECT_TRUE(first.ok);
  EXPECT_EQ(first.mode, LcmMode::exhaustive);
  EXPECT_EQ(first.subsets_checked, 1023U);
  auto second = tor_vanishing_lcm_check(W, yL, lex_least_divisor_map(W, yL));
  EXPECT_TRUE(second.ok);
  EXPECT_EQ(second.subsets_checked, 1023U);
  // first map sends y1 v to v
  auto phi = lex_least_divisor_map(W, J);
  for (std::size_t k = 0; k < W.size(); ++k) EXPECT_EQ(W[k] / phi[k], Monomial::variable(7, 6));
  // a constant map breaks the criterion already on singletons
  std::vector<Monomial> constant(W.size(), yL[0]);
  auto bad = tor_vanishing_lcm_check(W, yL, constant);
  EXPECT_FALSE(bad.ok);
  EXPECT_FALSE(bad.failing_subset.empty());
  auto sampled = tor_vanishing_lcm_check(W, yL, lex_least_divisor_map(W, yL), 5, 3, 2000);
  EXPECT_TRUE(sampled.ok);
  EXPECT_EQ(sampled.mode, LcmMode::sampled);
}

TEST(Families, NonSplittingExample) {
  auto I = make_ideal(4, {"a*b", "b*c", "c*d"});
  auto r = betti_splitting_check(I, make_ideal(4, {"a*b", "c*d"}), make_ideal(4, {"b*c"}), kQ);
  EXPECT_FALSE(r.holds);
  bool negative = false;
  for (const auto& c : r.cells) negative = negative || c.residual() < 0;
  EXPECT_TRUE(negative);
}

TEST(Families, CorpusContainsNonSplittings) {
  std::mt19937_64 rng(97);
  int failures = 0, tried = 0;
  for (int t = 0; t < 200 && failures < 3; ++t) {
    auto I = random_squarefree_ideal(rng, 5, 6);
    if (I.size() < 2 || I.is_unit()) continue;
    std::vector<Monomial> a, b;
    for (const auto& u : I.generators()) (rng() % 2 ? a : b).push_back(u);
    if (a.empty() || b.empty()) continue;
    ++tried;
    auto r = betti_splitting_check(I, minimalize(a, 5), minimalize(b, 5), kQ);
    if (!r.holds) {
      ++failures;
      bool nonzero = false;
      for (const auto& c : r.cells) nonzero = nonzero || c.residual() != 0;
      EXPECT_TRUE(nonzero);
    }
  }
  EXPECT_GT(tried, 0);
  EXPECT_GE(failures, 1);
}

TEST(Families, ProbeOnSturmfels) {
  auto rows = conjecture_probe(sturmfels_ideal().ideal, 2, {kQ}, 20000);
  ASSERT_EQ(rows.size(), 2U);
  EXPECT_TRUE(rows[0].linres[0].second);
  EXPECT_EQ(rows[0].lq, SearchStatus::found);
  EXPECT_FALSE(rows[1].linres[0].second);
}
