#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"

using namespace linpow;

namespace {

std::vector<Monomial> sequence(const MonomialIdeal& I, const GeneratorOrder& ord) {
  std::vector<Monomial> seq;
  for (auto i : ord) seq.push_back(I[i]);
  return seq;
}

MonomialIdeal random_equigenerated_squarefree(std::mt19937_64& rng, std::size_t n, unsigned d) {
  auto all = squarefree_veronese(n, d);
  std::vector<Monomial> pick;
  for (const auto& u : all.generators())
    if (rng() % 2) pick.push_back(u);
  if (pick.empty()) pick.push_back(all[0]);
  return minimalize(pick, n);
}

}  // namespace

TEST(LinearQuotients, ColonWitness) {
  auto I = make_ideal(4, {"a*b", "c*d"});
  auto v = verify_lq_order(I, {0, 1});
  EXPECT_FALSE(v.ok);
  EXPECT_EQ(v.failing_position, 2U);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(to_string(*v.witness), "x1*x2");
  auto path = make_ideal(3, {"a*b", "b*c"});
  EXPECT_TRUE(verify_lq_order(path, {0, 1}).ok);
}

TEST(LinearQuotients, RejectsNonPermutations) {
  auto I = make_ideal(3, {"a", "b"});
  EXPECT_THROW(verify_lq_order(I, {0, 0}), std::invalid_argument);
  EXPECT_THROW(verify_lq_order(I, {0}), std::invalid_argument);
}

TEST(LinearQuotients, VerifierMatchesOracle) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 300; ++t) {
    std::size_t n = 2 + rng() % 4;
    auto I = random_monomial_ideal(rng, n, 6, 2);
    auto ord = identity_order(I.size());
    std::shuffle(ord.begin(), ord.end(), rng);
    EXPECT_EQ(verify_lq_order(I, ord).ok, oracle::linear_quotients(sequence(I, ord))) << to_string(I);
  }
}

TEST(LinearQuotients, TeraiHasNoOrder) {
  auto r = find_lq_order(terai_ideal());
  EXPECT_EQ(r.status, SearchStatus::none_exists);
  EXPECT_FALSE(r.order.has_value());
}

TEST(LinearQuotients, SturmfelsStoredOrderAndSearch) {
  auto st = sturmfels_ideal();
  EXPECT_EQ(format_order(st.order), "8,7,6,5,4,3,1,2");
  EXPECT_TRUE(verify_lq_order(st.ideal, st.order).ok);
  EXPECT_TRUE(oracle::linear_quotients(sequence(st.ideal, st.order)));
  auto r = find_lq_order(st.ideal);
  ASSERT_EQ(r.status, SearchStatus::found);
  EXPECT_TRUE(oracle::linear_quotients(sequence(st.ideal, *r.order)));
  EXPECT_FALSE(is_polymatroidal(st.ideal));
}

TEST(LinearQuotients, SturmfelsLexPriorityCount) {
  auto st = sturmfels_ideal();
  std::vector<std::size_t> p(6);
  std::iota(p.begin(), p.end(), 0);
  int pass = 0, oracle_pass = 0;
  do {
    pass += lex_lq_check(st.ideal, p).ok ? 1 : 0;
    oracle_pass += oracle::linear_quotients(sequence(st.ideal, lex_order(st.ideal, p))) ? 1 : 0;
  } while (std::next_permutation(p.begin(), p.end()));
  EXPECT_EQ(pass, oracle_pass);
  EXPECT_EQ(pass, 304);
}

TEST(LinearQuotients, BudgetIsReported) {
  auto r = find_lq_order(power_ideal(terai_ideal(), 2), 50);
  EXPECT_EQ(r.status, SearchStatus::budget_exhausted);
}

TEST(LinearQuotients, LinearQuotientsImplyLinearResolution) {
  std::mt19937_64 rng(59);
  int found = 0;
  for (int t = 0; t < 80; ++t) {
    std::size_t n = 3 + rng() % 4;
    unsigned d = 1 + static_cast<unsigned>(rng() % 3);
    auto I = random_equigenerated_squarefree(rng, n, d);
    auto r = find_lq_order(I, 100000);
    if (r.status != SearchStatus::found) continue;
    ++found;
    for (auto K : {kQ, F2(), F3()}) EXPECT_TRUE(has_linear_resolution(I, K)) << to_string(I);
  }
  EXPECT_GT(found, 20);
}

TEST(LinearQuotients, PolymatroidalIdealsPassEveryLexPriority) {
  std::mt19937_64 rng(61);
  int seen = 0;
  for (int t = 0; t < 400 && seen < 25; ++t) {
    std::size_t n = 3 + rng() % 3;
    auto I = random_equigenerated_squarefree(rng, n, 1 + static_cast<unsigned>(rng() % (n - 1)));
    if (!is_polymatroidal(I)) continue;
    ++seen;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do EXPECT_TRUE(lex_lq_check(I, p).ok) << to_string(I);
    while (std::next_permutation(p.begin(), p.end()));
    auto sq = power_ideal(I, 2);
    EXPECT_TRUE(is_polymatroidal(sq));
  }
  EXPECT_GE(seen, 10);
}

TEST(LinearQuotients, PolymatroidalExamples) {
  EXPECT_TRUE(is_polymatroidal(squarefree_veronese(5, 3)));
  EXPECT_TRUE(is_polymatroidal(make_ideal(3, {"a^2", "a*b", "b^2"})));
  EXPECT_FALSE(is_polymatroidal(make_ideal(4, {"a*b", "c*d"})));
  EXPECT_THROW(is_polymatroidal(make_ideal(3, {"a", "b*c"})), std::invalid_argument);
}
