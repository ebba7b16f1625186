#ifndef LINPOW_FAMILIES_HPP
#define LINPOW_FAMILIES_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "betti.hpp"
#include "field.hpp"
#include "linear_quotients.hpp"
#include "monomial.hpp"

namespace linpow {

/// An ideal together with a generator order (indices into its canonical list).
struct OrderedIdeal {
  MonomialIdeal ideal;
  GeneratorOrder order;
};

/// Minimal triangulation of the real projective plane, on a..f = x1..x6.
inline MonomialIdeal terai_ideal() {
  return make_ideal(6, {"a*b*d", "a*b*f", "a*c*e", "a*d*c", "a*e*f", "b*d*e", "b*c*f", "b*c*e", "c*d*f", "d*e*f"});
}

inline const std::vector<std::string>& sturmfels_sequence() {
  static const std::vector<std::string> seq{"d*e*f", "c*e*f", "c*d*f", "c*d*e", "b*e*f", "b*c*d", "a*c*f", "a*d*e"};
  return seq;
}

/// Eight cubics with linear quotients in the listed order whose square has no linear resolution.
inline OrderedIdeal sturmfels_ideal() {
  std::vector<Monomial> seq;
  for (const auto& s : sturmfels_sequence()) seq.push_back(parse_ideal(s, 6)[0]);
  auto I = minimalize(seq, 6);
  return {I, order_of(I, seq)};
}

/// All squarefree monomials of degree d in n variables.
inline MonomialIdeal squarefree_veronese(std::size_t n, unsigned d) {
  if (d > n) return MonomialIdeal(n);
  if (n > kMaxMaskVars) throw std::length_error("too many variables");
  std::vector<Monomial> gens;
  VarMask all = n == kMaxMaskVars ? ~VarMask{0} : (VarMask{1} << n) - 1;
  if (n <= 30) {
    for (VarMask s = 0; s <= all; ++s)
      if (static_cast<unsigned>(std::popcount(s)) == d) gens.push_back(Monomial::from_mask(n, s));
  } else {
    throw std::length_error("squarefree Veronese enumeration supports up to 30 variables");
  }
  return minimalize(std::move(gens), n);
}

inline MonomialIdeal veronese2_ideal() { return squarefree_veronese(6, 2); }

struct FamilyParams {
  std::size_t n = 6;
  unsigned d = 3;
};

namespace detail {

inline void check_family(FamilyParams p) {
  if (p.n < 6 || p.d < 3 || p.d + 3 > p.n)
    throw std::invalid_argument("family parameters need n >= 6 and 3 <= d <= n-3");
}

/// The y_i of the construction are x_{6+i}; the prefix is y_1 ... y_{d-3} and
/// the block y_{d-2}, ..., y_{n-6}.
inline Monomial family_prefix(FamilyParams p) {
  std::vector<Monomial::Exponent> e(p.n, 0);
  for (unsigned i = 1; i + 3 <= p.d; ++i) e[5 + i] = 1;
  return Monomial(std::move(e));
}

inline std::vector<std::size_t> family_block(FamilyParams p) {
  std::vector<std::size_t> out;
  for (std::size_t i = p.d - 2; i + 6 <= p.n; ++i) out.push_back(5 + i);
  return out;
}

inline Monomial widen(const Monomial& u, std::size_t n) {
  std::vector<Monomial::Exponent> e(u.exponents().begin(), u.exponents().end());
  e.resize(n, 0);
  return Monomial(std::move(e));
}

}  // namespace detail

/// Generators of prefix * [core + (block) * L], in the order: block-major over
/// the canonical order of L, then the given core sequence.
inline std::vector<Monomial> family_sequence(FamilyParams p, const std::vector<Monomial>& core) {
  detail::check_family(p);
  auto pre = detail::family_prefix(p);
  auto L = veronese2_ideal();
  std::vector<Monomial> seq;
  for (auto y : detail::family_block(p))
    for (const auto& w : L.generators()) seq.push_back(pre * Monomial::variable(p.n, y) * detail::widen(w, p.n));
  for (const auto& v : core) seq.push_back(pre * detail::widen(v, p.n));
  return seq;
}

/// Squarefree, fully supported, generated in degree d; over Q the regularity
/// is d and over F2 it is d + 1.
inline MonomialIdeal theoremC_ideal(FamilyParams p) {
  auto seq = family_sequence(p, terai_ideal().generators());
  return minimalize(std::move(seq), p.n);
}

/// Same construction over the Sturmfels cubics, with the concatenated order.
inline OrderedIdeal theoremD_ideal(FamilyParams p) {
  auto st = sturmfels_ideal();
  std::vector<Monomial> core;
  for (auto i : st.order) core.push_back(st.ideal[i]);
  auto seq = family_sequence(p, core);
  auto I = minimalize(seq, p.n);
  return {I, order_of(I, seq)};
}

// ---------------------------------------------------------------------------
// Betti splittings.

struct SplittingCell {
  int i = 0, j = 0;
  std::uint64_t whole = 0, first = 0, second = 0, meet = 0;  // meet is beta_{i-1,j}(I1 cap I2)
  long long residual() const {
    return static_cast<long long>(whole) - static_cast<long long>(first + second + meet);
  }
};

struct SplittingReport {
  bool holds = true;
  FieldSpec field;
  std::vector<SplittingCell> cells;  // every (i, j) where some table is nonzero
};

inline SplittingReport betti_splitting_check(const MonomialIdeal& I, const MonomialIdeal& I1, const MonomialIdeal& I2,
                                             FieldSpec K) {
  check_same_ring(I, I1);
  check_same_ring(I, I2);
  {
    std::vector<Monomial> joined(I1.generators());
    joined.insert(joined.end(), I2.generators().begin(), I2.generators().end());
    bool disjoint = std::none_of(I1.generators().begin(), I1.generators().end(),
                                 [&](const Monomial& u) { return I2.contains(u) && I2.index_of(u) != I2.size(); });
    if (!disjoint || joined.size() != I.size() || !(minimalize(joined, I.ambient()) == I))
      throw std::invalid_argument("G(I) is not the disjoint union of G(I1) and G(I2)");
  }
  auto meet = intersect_ideals(I1, I2);
  GradedBettiTable tI = graded_betti(I, K), t1 = graded_betti(I1, K), t2 = graded_betti(I2, K), tm = graded_betti(meet, K);
  std::map<std::pair<int, int>, SplittingCell> cells;
  auto touch = [&](int i, int j) -> SplittingCell& {
    auto& c = cells[{i, j}];
    c.i = i;
    c.j = j;
    return c;
  };
  for (const auto& [ij, v] : tI.entries()) touch(ij.first, ij.second).whole = v;
  for (const auto& [ij, v] : t1.entries()) touch(ij.first, ij.second).first = v;
  for (const auto& [ij, v] : t2.entries()) touch(ij.first, ij.second).second = v;
  for (const auto& [ij, v] : tm.entries()) touch(ij.first + 1, ij.second).meet = v;
  SplittingReport r;
  r.field = K;
  for (auto& [ij, c] : cells) {
    if (c.residual() != 0) r.holds = false;
    r.cells.push_back(c);
  }
  return r;
}

// ---------------------------------------------------------------------------
// lcm criterion for Tor-vanishing inclusions.

enum class LcmMode { exhaustive, sampled };

struct LcmCheckReport {
  bool ok = true;
  LcmMode mode = LcmMode::exhaustive;
  std::uint64_t subsets_checked = 0;
  std::vector<std::size_t> failing_subset;  // generator indices of Jsub
};

/// For each generator u of Jsub, the lex-least generator of L dividing u.
inline std::vector<Monomial> lex_least_divisor_map(const MonomialIdeal& Jsub, const MonomialIdeal& L) {
  std::vector<Monomial> out;
  for (const auto& u : Jsub.generators()) {
    const Monomial* best = nullptr;
    for (const auto& w : L.generators())
      if (w.divides(u) && (best == nullptr || lex_greater(*best, w))) best = &w;
    if (!best) throw std::invalid_argument(to_string(u) + " has no divisor among the generators of L");
    out.push_back(*best);
  }
  return out;
}

/// lcm(Omega) in m * lcm(phi(Omega)) for nonempty subsets Omega of G(Jsub).
/// All subsets when |G(Jsub)| <= exhaustive_limit; otherwise every subset of
/// size <= 3 plus `random_subsets` seeded random ones.
inline LcmCheckReport tor_vanishing_lcm_check(const MonomialIdeal& Jsub, const MonomialIdeal& L,
                                              const std::vector<Monomial>& phi, std::size_t exhaustive_limit = 20,
                                              std::uint64_t seed = 1, std::size_t random_subsets = 20000) {
  check_same_ring(Jsub, L);
  const std::size_t m = Jsub.size();
  if (phi.size() != m) throw std::invalid_argument("phi must have one image per generator");
  for (const auto& w : phi)
    if (L.index_of(w) == L.size()) throw std::invalid_argument("phi image " + to_string(w) + " is not a generator of L");
  LcmCheckReport r;
  auto holds = [](const Monomial& a, const Monomial& b) { return b.divides(a) && a != b; };
  std::vector<std::size_t> chosen;
  if (m <= exhaustive_limit) {
    r.mode = LcmMode::exhaustive;
    auto rec = [&](auto&& self, std::size_t k, const Monomial& la, const Monomial& lb) -> bool {
      if (k == m) return true;
      // include k
      Monomial na = chosen.empty() ? Jsub[k] : lcm(la, Jsub[k]);
      Monomial nb = chosen.empty() ? phi[k] : lcm(lb, phi[k]);
      chosen.push_back(k);
      ++r.subsets_checked;
      if (!holds(na, nb)) {
        r.failing_subset = chosen;
        return false;
      }
      if (!self(self, k + 1, na, nb)) return false;
      chosen.pop_back();
      return self(self, k + 1, la, lb);
    };
    Monomial one(Jsub.ambient());
    r.ok = m == 0 || rec(rec, 0, one, one);
    return r;
  }
  r.mode = LcmMode::sampled;
  auto test = [&](const std::vector<std::size_t>& omega) {
    Monomial a = Jsub[omega[0]], b = phi[omega[0]];
    for (auto k : omega) {
      a = lcm(a, Jsub[k]);
      b = lcm(b, phi[k]);
    }
    ++r.subsets_checked;
    if (!holds(a, b)) {
      r.ok = false;
      r.failing_subset = omega;
    }
    return r.ok;
  };
  for (std::size_t a = 0; a < m && r.ok; ++a) {
    if (!test({a})) break;
    for (std::size_t b = a + 1; b < m && r.ok; ++b) {
      if (!test({a, b})) break;
      for (std::size_t c = b + 1; c < m && r.ok; ++c)
        if (!test({a, b, c})) break;
    }
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t s = 0; s < random_subsets && r.ok; ++s) {
    std::vector<std::size_t> omega;
    for (std::size_t k = 0; k < m; ++k)
      if (coin(rng)) omega.push_back(k);
    if (omega.size() > 3) test(omega);
  }
  return r;
}

}  // namespace linpow

#endif  // LINPOW_FAMILIES_HPP
