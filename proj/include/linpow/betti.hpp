#ifndef LINPOW_BETTI_HPP
#define LINPOW_BETTI_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"
#include "linalg.hpp"
#include "monomial.hpp"
#include "parallel.hpp"
#include "simplicial.hpp"

namespace linpow {

/// Graded Betti numbers beta_{i,j} of an ideal over a field.
class GradedBettiTable {
 public:
  using Key = std::pair<int, int>;  // (homological degree i, internal degree j)

  GradedBettiTable() = default;
  explicit GradedBettiTable(FieldSpec field, std::string subject = {})
      : field_(field), subject_(std::move(subject)) {}

  FieldSpec field() const { return field_; }
  const std::string& subject() const { return subject_; }
  void set_subject(std::string s) { subject_ = std::move(s); }
  const std::map<Key, std::uint64_t>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  void add(int i, int j, std::uint64_t count) {
    if (count == 0) return;
    entries_[{i, j}] += count;
  }

  std::uint64_t operator()(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
  }

  /// max { j - i : beta_{i,j} != 0 }.
  int regularity() const {
    if (entries_.empty()) throw std::domain_error("regularity of an empty Betti table");
    int reg = std::numeric_limits<int>::min();
    for (const auto& [k, v] : entries_) reg = std::max(reg, k.second - k.first);
    return reg;
  }

  int projective_dimension() const {
    int pd = -1;
    for (const auto& [k, v] : entries_) pd = std::max(pd, k.first);
    return pd;
  }

  /// Same numbers; field and subject labels are ignored.
  bool same_numbers(const GradedBettiTable& other) const { return entries_ == other.entries_; }

  friend bool operator==(const GradedBettiTable& a, const GradedBettiTable& b) {
    return a.field_ == b.field_ && a.entries_ == b.entries_;
  }

 private:
  FieldSpec field_;
  std::string subject_;
  std::map<Key, std::uint64_t> entries_;
};

/// Plain text form: a `field` line, then `i j count` triples sorted by (i, j).
inline void write_betti_text(std::ostream& os, const GradedBettiTable& t) {
  os << "field " << t.field().name() << '\n';
  if (!t.subject().empty()) os << "# " << t.subject() << '\n';
  for (const auto& [k, v] : t.entries()) os << k.first << ' ' << k.second << ' ' << v << '\n';
}

/// Macaulay2-style grid: rows j - i, columns i.
inline std::string betti_diagram(const GradedBettiTable& t) {
  if (t.empty()) return "(zero)\n";
  int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min(), pd = t.projective_dimension();
  for (const auto& [k, v] : t.entries()) {
    lo = std::min(lo, k.second - k.first);
    hi = std::max(hi, k.second - k.first);
  }
  std::ostringstream os;
  os << "      ";
  for (int i = 0; i <= pd; ++i) os << ' ' << std::string(5 - std::min<std::size_t>(5, std::to_string(i).size()), ' ') << i;
  os << '\n';
  for (int r = lo; r <= hi; ++r) {
    std::string label = std::to_string(r) + ":";
    os << std::string(6 - std::min<std::size_t>(6, label.size()), ' ') << label;
    for (int i = 0; i <= pd; ++i) {
      auto v = t(i, i + r);
      std::string cell = v ? std::to_string(v) : ".";
      os << ' ' << std::string(5 - std::min<std::size_t>(5, cell.size()), ' ') << cell;
    }
    os << '\n';
  }
  return os.str();
}

namespace detail {

/// Faces of the restriction to W of the complex whose minimal non-faces are
/// `gens`. Returns false when more than `limit` faces would be produced.
inline bool restricted_faces(VarMask W, const std::vector<VarMask>& inside, std::size_t limit, FaceLevels& out) {
  out.by_size.assign(1, {VarMask{0}});
  std::size_t total = 1;
  while (true) {
    std::vector<VarMask> next;
    for (VarMask f : out.by_size.back()) {
      VarMask top = f == 0 ? 0 : VarMask{1} << (63 - std::countl_zero(f));
      VarMask cand = W & ~(top == 0 ? VarMask{0} : (top << 1) - 1);
      while (cand) {
        VarMask bit = cand & (~cand + 1);
        cand ^= bit;
        VarMask g = f | bit;
        bool face = true;
        for (VarMask u : inside)
          if ((u & bit) && (u & ~g) == 0) {
            face = false;
            break;
          }
        if (!face) continue;
        next.push_back(g);
        if (++total > limit) return false;
      }
    }
    if (next.empty()) break;
    out.by_size.push_back(std::move(next));
  }
  return true;
}

/// Faces of the upper Koszul complex K^W = { F subset W : W \ F contains a generator }.
inline void upper_koszul_faces(VarMask W, const std::vector<VarMask>& inside, FaceLevels& out) {
  out.by_size.clear();
  bool nonempty = std::any_of(inside.begin(), inside.end(), [W](VarMask u) { return (u & ~W) == 0; });
  if (!nonempty) return;
  out.by_size.assign(1, {VarMask{0}});
  while (true) {
    std::vector<VarMask> next;
    for (VarMask f : out.by_size.back()) {
      VarMask top = f == 0 ? 0 : VarMask{1} << (63 - std::countl_zero(f));
      VarMask cand = W & ~(top == 0 ? VarMask{0} : (top << 1) - 1);
      while (cand) {
        VarMask bit = cand & (~cand + 1);
        cand ^= bit;
        VarMask g = f | bit;
        if (std::any_of(inside.begin(), inside.end(), [g](VarMask u) { return (u & g) == 0; })) next.push_back(g);
      }
    }
    if (next.empty()) break;
    out.by_size.push_back(std::move(next));
  }
}

}  // namespace detail

/// Betti table of a squarefree ideal from Hochster's formula
///   beta_{i,j}(I) = sum_{|W| = j} dim H~_{j-i-2}(Delta|_W).
///
/// Only W that are unions of generator supports are visited; any other W has
/// a vertex lying in no generator inside W, which is a cone point of the
/// restriction. When the restriction has more than half of the subsets of W
/// as faces, the Alexander-dual upper Koszul complex K^W is used instead:
///   beta_{i,W}(I) = dim H~_{i-1}(K^W).
inline GradedBettiTable hochster_betti(const MonomialIdeal& I, FieldSpec K) {
  if (I.is_unit()) throw std::invalid_argument("Hochster formula needs a proper ideal");
  const std::size_t n = I.ambient();
  if (n > 30) throw std::length_error("Hochster sum over more than 2^30 subsets");
  auto gens = detail::squarefree_masks(I);
  GradedBettiTable table(K, to_string(I));
  if (gens.empty()) return table;

  std::vector<VarMask> candidates;
  const VarMask full = (VarMask{1} << n) - 1;
  for (VarMask W = 1; W <= full; ++W) {
    VarMask cover = 0;
    for (VarMask u : gens)
      if ((u & ~W) == 0) cover |= u;
    if (cover == W) candidates.push_back(W);
  }

  std::vector<std::vector<std::pair<int, std::uint64_t>>> contrib(candidates.size());
  parallel_for(candidates.size(), [&](std::size_t idx) {
    VarMask W = candidates[idx];
    const int w = std::popcount(W);
    std::vector<VarMask> inside;
    for (VarMask u : gens)
      if ((u & ~W) == 0) inside.push_back(u);
    FaceLevels faces;
    std::size_t limit = std::size_t{1} << (w - 1);
    if (detail::restricted_faces(W, inside, limit, faces)) {
      auto h = reduced_homology(faces, K);
      for (std::size_t k = 0; k < h.dims.size(); ++k) {
        if (h.dims[k] == 0) continue;
        int deg = static_cast<int>(k) - 1;  // H~_deg
        int i = w - deg - 2;
        if (i >= 0) contrib[idx].emplace_back(i, h.dims[k]);
      }
    } else {
      detail::upper_koszul_faces(W, inside, faces);
      auto h = reduced_homology(faces, K);
      for (std::size_t k = 0; k < h.dims.size(); ++k) {
        if (h.dims[k] == 0) continue;
        int i = static_cast<int>(k);  // H~_{i-1}
        contrib[idx].emplace_back(i, h.dims[k]);
      }
    }
  });
  for (std::size_t idx = 0; idx < candidates.size(); ++idx)
    for (auto [i, c] : contrib[idx]) table.add(i, std::popcount(candidates[idx]), c);
  return table;
}

/// Betti table of any monomial ideal: polarize, then Hochster.
inline GradedBettiTable graded_betti(const MonomialIdeal& I, FieldSpec K) {
  if (I.is_zero() || I.is_unit()) throw std::invalid_argument("Betti table needs a proper nonzero ideal");
  GradedBettiTable t = I.is_squarefree() ? hochster_betti(I, K) : hochster_betti(polarize(I).ideal, K);
  t.set_subject(to_string(I));
  return t;
}

/// Independent oracle: beta_{i,j}(I) = dim H_{i+1}(K(x) ⊗ S/I)_j, computed
/// multidegree by multidegree over every monomial of degree <= max_j with
/// dense elimination. Meant for small rings (n <= 8).
inline GradedBettiTable betti_via_koszul(const MonomialIdeal& I, FieldSpec K, std::size_t max_j) {
  if (I.is_zero() || I.is_unit()) throw std::invalid_argument("Koszul oracle needs a proper nonzero ideal");
  if (max_j < I.max_degree()) throw std::invalid_argument("max_j below the generator degrees");
  const std::size_t n = I.ambient();
  if (n > 16) throw std::length_error("Koszul oracle is for small rings");
  GradedBettiTable table(K, to_string(I));

  auto in_ideal = [&](const std::vector<Monomial::Exponent>& e) {
    for (const auto& u : I.generators()) {
      bool div = true;
      for (std::size_t k = 0; k < n; ++k)
        if (u[k] > e[k]) {
          div = false;
          break;
        }
      if (div) return true;
    }
    return false;
  };

  std::vector<Monomial::Exponent> a(n, 0);
  // odometer over all exponent vectors of total degree <= max_j
  auto visit = [&](std::size_t deg) {
    VarMask supp = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (a[k] > 0) supp |= VarMask{1} << k;
    // basis of K_p ⊗ S/I in multidegree a: subsets F of supp with x^{a-F} not in I
    std::vector<std::vector<VarMask>> basis(n + 2);
    std::vector<Monomial::Exponent> rest(n);
    for (VarMask F = supp;; F = (F - 1) & supp) {
      for (std::size_t k = 0; k < n; ++k) rest[k] = static_cast<Monomial::Exponent>(a[k] - ((F >> k) & 1U));
      if (!in_ideal(rest)) basis[static_cast<std::size_t>(std::popcount(F))].push_back(F);
      if (F == 0) break;
    }
    auto boundary_rank = [&](std::size_t p) -> std::size_t {
      // d_p : C_p -> C_{p-1}
      if (p == 0 || p > n || basis[p].empty() || basis[p - 1].empty()) return 0;
      const auto& src = basis[p];
      const auto& dst = basis[p - 1];
      std::vector<std::vector<std::int64_t>> m(dst.size(), std::vector<std::int64_t>(src.size(), 0));
      for (std::size_t c = 0; c < src.size(); ++c) {
        int t = 0;
        for (std::size_t k = 0; k < n; ++k) {
          if (!(src[c] >> k & 1U)) continue;
          VarMask G = src[c] & ~(VarMask{1} << k);
          auto it = std::find(dst.begin(), dst.end(), G);
          if (it != dst.end()) m[static_cast<std::size_t>(it - dst.begin())][c] = (t % 2 == 0) ? 1 : -1;
          ++t;
        }
      }
      return dense_rank(m, K);
    };
    std::vector<std::size_t> ranks(n + 2, 0);
    for (std::size_t p = 1; p <= n; ++p) ranks[p] = boundary_rank(p);
    for (std::size_t p = 1; p <= n; ++p) {
      std::size_t h = basis[p].size() - ranks[p] - ranks[p + 1];
      if (h) table.add(static_cast<int>(p) - 1, static_cast<int>(deg), h);
    }
  };
  std::size_t deg = 0;
  while (true) {
    visit(deg);
    // next exponent vector with total degree <= max_j
    std::size_t k = 0;
    while (k < n) {
      if (deg < max_j) {
        ++a[k];
        ++deg;
        break;
      }
      deg -= a[k];
      a[k] = 0;
      ++k;
    }
    if (k == n) break;
  }
  return table;
}

/// Regularity over K; the unit ideal has regularity 0.
inline int regularity(const MonomialIdeal& I, FieldSpec K) {
  if (I.is_zero()) throw std::domain_error("regularity of the zero ideal is undefined");
  if (I.is_unit()) return 0;
  return graded_betti(I, K).regularity();
}

inline bool has_linear_resolution(const MonomialIdeal& I, FieldSpec K) {
  if (I.is_zero()) throw std::domain_error("linear resolution of the zero ideal is undefined");
  if (!I.is_equigenerated()) return false;
  return regularity(I, K) == static_cast<int>(I.alpha());
}

/// Reisner's criterion: every link (including the link of the empty face) has
/// vanishing reduced homology below its dimension.
inline bool is_cm_reisner(const SimplicialComplex& D, FieldSpec K) {
  if (D.is_void()) throw std::invalid_argument("Reisner criterion on the void complex");
  auto levels = D.face_levels();
  for (const auto& level : levels.by_size)
    for (VarMask F : level) {
      auto lk = link_of(D, F);
      auto h = homology_dims(lk, K);
      for (int i = -1; i < lk.dimension(); ++i)
        if (h.at(i) != 0) return false;
    }
  return true;
}

struct EagonReinerReport {
  bool linear_resolution = false;
  bool dual_cohen_macaulay = false;
  bool agree() const { return linear_resolution == dual_cohen_macaulay; }
};

/// Both sides of Eagon-Reiner: I has a linear resolution iff S/I^∨ is CM.
inline EagonReinerReport eagon_reiner(const MonomialIdeal& I, FieldSpec K) {
  if (!I.is_squarefree()) throw std::invalid_argument("Eagon-Reiner check needs a squarefree ideal");
  EagonReinerReport r;
  r.linear_resolution = has_linear_resolution(I, K);
  r.dual_cohen_macaulay = is_cm_reisner(complex_from_ideal(alexander_dual(I)), K);
  return r;
}

inline bool eagon_reiner_check(const MonomialIdeal& I, FieldSpec K) { return eagon_reiner(I, K).agree(); }

}  // namespace linpow

#endif  // LINPOW_BETTI_HPP
