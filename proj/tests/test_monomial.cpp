#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace linpow;

TEST(Monomial, ParsesVariablesLettersAndPowers) {
  auto I = parse_ideal("a*b^2\n# comment\n\nx4^3*x1\n", 0);
  ASSERT_EQ(I.ambient(), 4U);
  ASSERT_EQ(I.size(), 2U);
  EXPECT_EQ(to_string(I[0]), "x1*x2^2");
  EXPECT_EQ(to_string(I[1]), "x1*x4^3");
  EXPECT_EQ(parse_ideal("x1", 6).ambient(), 6U);
}

TEST(Monomial, UnitMonomialGivesUnitIdeal) {
  auto I = parse_ideal("x1*x2\n1\n", 2);
  EXPECT_TRUE(I.is_unit());
  EXPECT_EQ(regularity(I, kQ), 0);
}

TEST(Monomial, RejectsMalformedInput) {
  EXPECT_THROW(parse_ideal("x0", 0), std::invalid_argument);
  EXPECT_THROW(parse_ideal("x1*y2", 0), std::invalid_argument);
  EXPECT_THROW(parse_ideal("x1^", 0), std::invalid_argument);
  EXPECT_THROW(parse_ideal("x1 + x2", 0), std::invalid_argument);
}

TEST(Monomial, Arithmetic) {
  Monomial u{2, 1, 0}, v{1, 0, 3};
  EXPECT_EQ(gcd(u, v), (Monomial{1, 0, 0}));
  EXPECT_EQ(lcm(u, v), (Monomial{2, 1, 3}));
  EXPECT_EQ(u * v, (Monomial{3, 1, 3}));
  EXPECT_EQ(colon(u, v), (Monomial{1, 1, 0}));
  EXPECT_TRUE((Monomial{1, 1, 0}).divides(u));
  EXPECT_FALSE(v.divides(u));
  EXPECT_THROW(u / v, std::domain_error);
  EXPECT_EQ(u.degree(), 3U);
  EXPECT_FALSE(u.is_squarefree());
  EXPECT_EQ(u.support(), (std::vector<std::size_t>{0, 1}));
}

TEST(Monomial, ExponentOverflowThrows) {
  auto big = Monomial::variable(1, 0, 60000);
  EXPECT_THROW(big * big, std::overflow_error);
}

TEST(Monomial, CanonicalOrderIsDegreeThenLexDescending) {
  auto I = make_ideal(3, {"a*b^3", "c^2", "b*c", "a^2"});
  ASSERT_EQ(I.size(), 4U);
  EXPECT_EQ(to_string(I[0]), "x1^2");
  EXPECT_EQ(to_string(I[1]), "x2*x3");
  EXPECT_EQ(to_string(I[2]), "x3^2");
  EXPECT_EQ(to_string(I[3]), "x1*x2^3");
}

TEST(Monomial, MinimalizeMatchesOracleAndIsIdempotent) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + rng() % 5;
    auto I = random_monomial_ideal(rng, n, 8, 3);
    EXPECT_EQ(minimalize(I.generators(), n), I);
    std::vector<oracle::Exps> raw;
    for (const auto& u : I.generators()) raw.push_back(oracle::exps(u));
    EXPECT_EQ(oracle::minimal(raw), oracle::generator_set(I));
  }
  auto dup = minimalize({Monomial{1, 0}, Monomial{1, 0}, Monomial{1, 1}}, 2);
  EXPECT_EQ(dup.size(), 1U);
}

TEST(Monomial, PowerMatchesRepeatedProducts) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 1 + rng() % 4;
    auto I = random_monomial_ideal(rng, n, 5, 2);
    for (unsigned k = 1; k <= 3; ++k) EXPECT_EQ(oracle::generator_set(power_ideal(I, k)), oracle::power(I, k));
  }
}

TEST(Monomial, ColonUndoesMultiplication) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    std::size_t n = 1 + rng() % 5;
    auto I = random_monomial_ideal(rng, n, 6, 3);
    auto v = random_monomial_ideal(rng, n, 1, 2)[0];
    auto Iv = multiply_ideals(I, minimalize({v}, n));
    EXPECT_EQ(colon_ideal(Iv, v), I);
  }
}

TEST(Monomial, IntersectionMembership) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    std::size_t n = 2 + rng() % 3;
    auto I = random_monomial_ideal(rng, n, 4, 2), J = random_monomial_ideal(rng, n, 4, 2);
    auto M = intersect_ideals(I, J);
    for (int s = 0; s < 50; ++s) {
      std::vector<Monomial::Exponent> e(n);
      for (auto& x : e) x = static_cast<Monomial::Exponent>(rng() % 4);
      Monomial w(e);
      EXPECT_EQ(M.contains(w), I.contains(w) && J.contains(w));
    }
  }
}

TEST(Monomial, PolarizationSplitsPowers) {
  auto p = polarize(make_ideal(2, {"a^2", "a*b"}));
  EXPECT_EQ(p.ideal.ambient(), 3U);
  EXPECT_EQ(to_string(p.ideal), to_string(make_ideal(3, {"a*b", "a*c"})));
  ASSERT_EQ(p.origin.size(), 3U);
  EXPECT_EQ(p.origin[1], (std::pair<std::size_t, std::size_t>{0, 2}));
  auto sq = make_ideal(4, {"a*b", "c*d"});
  EXPECT_EQ(polarize(sq).ideal, sq);
}

TEST(Monomial, RestrictAndEmbed) {
  auto I = make_ideal(4, {"a*b", "b*c", "c*d^2"});
  auto R = restrict_ideal(I, {1, 2});
  EXPECT_EQ(R, make_ideal(2, {"a*b"}));
  auto E = embed_ideal(R, {1, 2}, 4);
  EXPECT_TRUE(ideal_contained(E, I));
  EXPECT_FALSE(ideal_contained(I, E));
}

TEST(Monomial, Profile) {
  auto p = ideal_profile(make_ideal(4, {"a*b", "b*c"}));
  EXPECT_EQ(p.alpha, 2U);
  EXPECT_TRUE(p.equigenerated);
  EXPECT_FALSE(p.fully_supported);
  EXPECT_EQ(p.support, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_THROW(ideal_profile(MonomialIdeal(3)), std::domain_error);
}

TEST(Monomial, MismatchedRingsThrow) {
  EXPECT_THROW(multiply_ideals(MonomialIdeal::unit(2), MonomialIdeal::unit(3)), std::invalid_argument);
}
