#ifndef LINPOW_LINEAR_QUOTIENTS_HPP
#define LINPOW_LINEAR_QUOTIENTS_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "monomial.hpp"

namespace linpow {

/// A permutation of the canonical generator indices of an ideal.
using GeneratorOrder = std::vector<std::size_t>;

inline bool is_permutation_of(const GeneratorOrder& ord, std::size_t m) {
  if (ord.size() != m) return false;
  std::vector<bool> seen(m, false);
  for (auto i : ord) {
    if (i >= m || seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

struct LqVerdict {
  bool ok = true;
  bool equigenerated = true;
  /// 1-based position j of the first colon (u_1..u_{j-1}):u_j that is not
  /// generated by variables; 0 when ok.
  std::size_t failing_position = 0;
  /// A minimal generator of that colon of degree != 1.
  std::optional<Monomial> witness;
};

/// Checks that every successive colon of `seq` is generated by variables.
inline LqVerdict verify_lq_sequence(std::span<const Monomial> seq) {
  LqVerdict v;
  if (seq.empty()) return v;
  for (const auto& u : seq)
    if (u.degree() != seq.front().degree()) v.equigenerated = false;
  const std::size_t n = seq.front().ambient();
  std::vector<Monomial> quots;
  for (std::size_t j = 1; j < seq.size(); ++j) {
    const Monomial& u = seq[j];
    quots.clear();
    std::vector<bool> linear(n, false);
    for (std::size_t k = 0; k < j; ++k) {
      quots.push_back(colon(seq[k], u));
      const Monomial& q = quots.back();
      if (q.degree() == 1)
        for (std::size_t x = 0; x < n; ++x)
          if (q[x]) linear[x] = true;
    }
    for (const auto& q : quots) {
      bool covered = false;
      for (std::size_t x = 0; x < n && !covered; ++x) covered = q[x] != 0 && linear[x];
      if (covered) continue;
      // q is not divisible by a linear colon generator; report a minimal one below it
      Monomial best = q;
      for (const auto& r : quots)
        if (r.divides(best) && r.degree() < best.degree()) best = r;
      v.ok = false;
      v.failing_position = j + 1;
      v.witness = best;
      return v;
    }
  }
  return v;
}

inline LqVerdict verify_lq_order(const MonomialIdeal& I, const GeneratorOrder& ord) {
  if (!is_permutation_of(ord, I.size())) throw std::invalid_argument("order is not a permutation of the generators");
  std::vector<Monomial> seq;
  seq.reserve(ord.size());
  for (auto i : ord) seq.push_back(I[i]);
  return verify_lq_sequence(seq);
}

inline GeneratorOrder identity_order(std::size_t m) {
  GeneratorOrder ord(m);
  std::iota(ord.begin(), ord.end(), std::size_t{0});
  return ord;
}

/// Order of `seq` as indices into the canonical generator list of I.
inline GeneratorOrder order_of(const MonomialIdeal& I, std::span<const Monomial> seq) {
  GeneratorOrder ord;
  for (const auto& u : seq) {
    auto k = I.index_of(u);
    if (k == I.size()) throw std::invalid_argument("monomial " + to_string(u) + " is not a minimal generator");
    ord.push_back(k);
  }
  if (!is_permutation_of(ord, I.size())) throw std::invalid_argument("sequence does not list every generator once");
  return ord;
}

enum class SearchStatus { found, none_exists, budget_exhausted };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none_exists: return "none";
    case SearchStatus::budget_exhausted: return "budget";
  }
  return "?";
}

struct LqSearchResult {
  SearchStatus status = SearchStatus::none_exists;
  std::optional<GeneratorOrder> order;
  std::uint64_t nodes = 0;
};

namespace detail {

struct BitsetHash {
  std::size_t operator()(const std::vector<std::uint64_t>& b) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : b) h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

class LqSearch {
 public:
  LqSearch(const MonomialIdeal& I, std::uint64_t budget) : I_(I), budget_(budget), m_(I.size()) {
    if (I.ambient() > kMaxMaskVars) throw std::length_error("linear quotients search supports up to 64 variables");
  }

  LqSearchResult run() {
    LqSearchResult res;
    State root;
    root.chosen.assign((m_ + 63) / 64, 0);
    root.linear.assign(m_, 0);
    root.uncovered.assign(m_, {});
    root.score.assign(m_, 0);
    try {
      if (dfs(root)) {
        res.status = SearchStatus::found;
        res.order = path_;
      } else {
        res.status = SearchStatus::none_exists;
      }
    } catch (const Budget&) {
      res.status = SearchStatus::budget_exhausted;
    }
    res.nodes = nodes_;
    return res;
  }

 private:
  struct Budget {};
  struct State {
    std::vector<std::uint64_t> chosen;
    std::vector<VarMask> linear;                  // variables x_k with x_k in (S):u
    std::vector<std::vector<VarMask>> uncovered;  // supports of colon generators not divisible by those
    std::vector<std::uint32_t> score;             // #earlier v with deg colon(v,u) == 1
    std::size_t size = 0;
  };

  bool is_chosen(const State& s, std::size_t i) const { return s.chosen[i / 64] >> (i % 64) & 1U; }

  State extend(const State& s, std::size_t w) const {
    State t = s;
    t.chosen[w / 64] |= std::uint64_t{1} << (w % 64);
    ++t.size;
    for (std::size_t u = 0; u < m_; ++u) {
      if (is_chosen(t, u)) continue;
      Monomial q = colon(I_[w], I_[u]);
      VarMask supp = q.support_mask();
      if (q.degree() == 1) {
        ++t.score[u];
        if ((t.linear[u] & supp) == 0) {
          t.linear[u] |= supp;
          auto& unc = t.uncovered[u];
          unc.erase(std::remove_if(unc.begin(), unc.end(), [&](VarMask x) { return (x & t.linear[u]) != 0; }),
                    unc.end());
        }
      } else if ((supp & t.linear[u]) == 0) {
        t.uncovered[u].push_back(supp);
      }
    }
    return t;
  }

  bool dfs(const State& s) {
    if (s.size == m_) return true;
    if (failed_.count(s.chosen)) return false;
    if (++nodes_ > budget_) throw Budget{};
    std::vector<std::size_t> cands;
    for (std::size_t u = 0; u < m_; ++u)
      if (!is_chosen(s, u) && s.uncovered[u].empty()) cands.push_back(u);
    std::stable_sort(cands.begin(), cands.end(),
                     [&](std::size_t a, std::size_t b) { return s.score[a] > s.score[b]; });
    for (auto u : cands) {
      path_.push_back(u);
      if (dfs(extend(s, u))) return true;
      path_.pop_back();
    }
    failed_.insert(s.chosen);
    return false;
  }

  const MonomialIdeal& I_;
  std::uint64_t budget_;
  std::size_t m_;
  std::uint64_t nodes_ = 0;
  GeneratorOrder path_;
  std::unordered_set<std::vector<std::uint64_t>, BitsetHash> failed_;
};

}  // namespace detail

/// Backtracking search for a linear quotients order. Failed generator sets
/// are memoized (the colon only depends on the set of earlier generators), so
/// "none" is a certificate of exhaustion; running out of budget is reported
/// separately.
inline LqSearchResult find_lq_order(const MonomialIdeal& I, std::uint64_t budget = 1'000'000) {
  if (!I.is_equigenerated()) throw std::invalid_argument("linear quotients search needs an equigenerated ideal");
  if (I.size() <= 1) {
    LqSearchResult r;
    r.status = SearchStatus::found;
    r.order = identity_order(I.size());
    return r;
  }
  auto res = detail::LqSearch(I, budget).run();
  if (res.order && !verify_lq_order(I, *res.order).ok) throw std::logic_error("search produced an invalid order");
  return res;
}

/// Generators sorted lex-descending, where priority[0] is the largest variable.
inline GeneratorOrder lex_order(const MonomialIdeal& I, const std::vector<std::size_t>& priority) {
  if (!is_permutation_of(priority, I.ambient())) throw std::invalid_argument("variable priority is not a permutation");
  GeneratorOrder ord = identity_order(I.size());
  std::stable_sort(ord.begin(), ord.end(), [&](std::size_t a, std::size_t b) {
    for (auto v : priority)
      if (I[a][v] != I[b][v]) return I[a][v] > I[b][v];
    return false;
  });
  return ord;
}

inline LqVerdict lex_lq_check(const MonomialIdeal& I, const std::vector<std::size_t>& priority) {
  return verify_lq_order(I, lex_order(I, priority));
}

/// Symmetric exchange: for u, v in G(I) and u_i > v_i there is j with
/// u_j < v_j and x_j u / x_i in G(I).
inline bool is_polymatroidal(const MonomialIdeal& I) {
  if (I.is_zero()) throw std::invalid_argument("polymatroidal check on the zero ideal");
  if (!I.is_equigenerated()) throw std::invalid_argument("polymatroidal ideals are equigenerated");
  std::unordered_set<Monomial, MonomialHash> gens(I.generators().begin(), I.generators().end());
  const std::size_t n = I.ambient();
  for (const auto& u : I.generators())
    for (const auto& v : I.generators()) {
      for (std::size_t i = 0; i < n; ++i) {
        if (u[i] <= v[i]) continue;
        bool found = false;
        for (std::size_t j = 0; j < n && !found; ++j) {
          if (u[j] >= v[j]) continue;
          std::vector<Monomial::Exponent> e(u.exponents().begin(), u.exponents().end());
          --e[i];
          ++e[j];
          found = gens.count(Monomial(std::move(e))) > 0;
        }
        if (!found) return false;
      }
    }
  return true;
}

inline std::string format_order(const GeneratorOrder& ord) {
  std::string out;
  for (std::size_t k = 0; k < ord.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(ord[k] + 1);
  }
  return out;
}

}  // namespace linpow

#endif  // LINPOW_LINEAR_QUOTIENTS_HPP
