#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"

using namespace linpow;

namespace {

using Entries = std::map<std::pair<int, int>, std::uint64_t>;

std::size_t polarized_vars(const MonomialIdeal& I) { return polarize(I).ideal.ambient(); }

}  // namespace

TEST(Betti, MaximalIdealIsKoszul) {
  auto m = make_ideal(4, {"a", "b", "c", "d"});
  auto t = graded_betti(m, kQ);
  EXPECT_EQ(t.entries(), (Entries{{{0, 1}, 4}, {{1, 2}, 6}, {{2, 3}, 4}, {{3, 4}, 1}}));
  EXPECT_EQ(t.regularity(), 1);
  EXPECT_EQ(t.projective_dimension(), 3);
}

TEST(Betti, TeraiTablesAreFrozen) {
  auto I = terai_ideal();
  EXPECT_EQ(graded_betti(I, kQ).entries(), (Entries{{{0, 3}, 10}, {{1, 4}, 15}, {{2, 5}, 6}}));
  EXPECT_EQ(graded_betti(I, F2()).entries(),
            (Entries{{{0, 3}, 10}, {{1, 4}, 15}, {{2, 5}, 6}, {{2, 6}, 1}, {{3, 6}, 1}}));
  EXPECT_EQ(regularity(I, kQ), 3);
  EXPECT_EQ(regularity(I, F2()), 4);
  EXPECT_EQ(regularity(I, F3()), 3);
  EXPECT_TRUE(has_linear_resolution(I, kQ));
  EXPECT_FALSE(has_linear_resolution(I, F2()));
}

TEST(Betti, SquarefreeMatchesHochsterOracle) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 2 + rng() % 5;
    auto I = random_squarefree_ideal(rng, n, 7);
    if (I.is_unit()) continue;
    for (auto K : {kQ, F2()}) EXPECT_EQ(graded_betti(I, K).entries(), oracle::betti_squarefree(I, oracle::char_of(K)));
  }
}

TEST(Betti, FewGeneratorsInManyVariables) {
  // restrictions of such ideals have many faces; exercises the upper Koszul path
  auto I = make_ideal(8, {"x1*x2", "x3*x4*x5", "x2*x6", "x7*x8"});
  for (auto K : {kQ, F2()}) EXPECT_EQ(graded_betti(I, K).entries(), oracle::betti_squarefree(I, oracle::char_of(K)));
}

TEST(Betti, PolarizationPreservesBettiTables) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 1 + rng() % 4;
    auto I = random_monomial_ideal(rng, n, 5, 2);
    if (I.is_unit()) continue;
    for (auto K : {kQ, F2()}) {
      auto koszul = betti_via_koszul(I, K, polarized_vars(I));
      EXPECT_TRUE(graded_betti(I, K).same_numbers(koszul)) << to_string(I);
    }
  }
}

TEST(Betti, KoszulOracleRejectsLowDegreeBound) {
  EXPECT_THROW(betti_via_koszul(make_ideal(2, {"a^3"}), kQ, 2), std::invalid_argument);
}

TEST(Betti, NonEquigeneratedHasNoLinearResolution) {
  auto I = make_ideal(3, {"a", "b*c"});
  EXPECT_FALSE(has_linear_resolution(I, kQ));
  EXPECT_EQ(regularity(I, kQ), 2);
}

TEST(Betti, ProperNonzeroIdealRequired) {
  EXPECT_THROW(graded_betti(MonomialIdeal::unit(2), kQ), std::invalid_argument);
  EXPECT_THROW(graded_betti(MonomialIdeal(2), kQ), std::invalid_argument);
  EXPECT_THROW(regularity(MonomialIdeal(2), kQ), std::domain_error);
}

TEST(Betti, EagonReinerOnRandomIdeals) {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 40; ++t) {
    auto I = random_squarefree_ideal(rng, 2 + rng() % 5, 6);
    if (I.is_unit()) continue;
    for (auto K : {kQ, F2()}) EXPECT_TRUE(eagon_reiner_check(I, K)) << to_string(I);
  }
}

TEST(Betti, DiagramAndTextOutput) {
  auto t = graded_betti(make_ideal(2, {"a", "b"}), kQ);
  std::ostringstream os;
  write_betti_text(os, t);
  EXPECT_NE(os.str().find("field Q"), std::string::npos);
  EXPECT_NE(os.str().find("1 2 1"), std::string::npos);
  EXPECT_NE(betti_diagram(t).find("1:"), std::string::npos);
}

TEST(Betti, SmallTables) {
  Entries two{{{0, 2}, 2}, {{1, 3}, 1}};
  EXPECT_EQ(graded_betti(make_ideal(3, {"a*b", "b*c"}), kQ).entries(), two);
  EXPECT_EQ(graded_betti(make_ideal(2, {"a^2", "a*b"}), kQ).entries(), two);
  EXPECT_EQ(graded_betti(polarize(make_ideal(2, {"a^2", "a*b"})).ideal, kQ).entries(), two);
  EXPECT_EQ(betti_via_koszul(make_ideal(2, {"a^2", "a*b"}), kQ, 3).entries(), two);
  EXPECT_EQ(graded_betti(make_ideal(3, {"a*b", "b*c", "a*c"}), F2()).entries(), (Entries{{{0, 2}, 3}, {{1, 3}, 2}}));
}
