#ifndef LINPOW_REES_HPP
#define LINPOW_REES_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <tuple>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "monomial.hpp"

namespace linpow {

/// y_j maps to gens[j] * t. Monomials of T = S[y_1..y_m] are Monomials on
/// n + m variables, the x-block first.
class ReesPresentation {
 public:
  ReesPresentation(std::size_t n, std::vector<Monomial> gens) : n_(n), gens_(std::move(gens)) {
    if (gens_.empty()) throw std::invalid_argument("Rees presentation of the zero ideal");
    for (const auto& u : gens_) {
      if (u.ambient() != n_) throw std::invalid_argument("generator lives in a different ring");
      if (u.degree() != gens_.front().degree()) throw std::invalid_argument("Rees presentation needs an equigenerated ideal");
    }
    for (std::size_t i = 0; i < gens_.size(); ++i)
      for (std::size_t j = i + 1; j < gens_.size(); ++j)
        if (gens_[i] == gens_[j]) throw std::invalid_argument("repeated generator in Rees presentation");
  }
  explicit ReesPresentation(const MonomialIdeal& I) : ReesPresentation(I.ambient(), I.generators()) {}

  std::size_t n() const { return n_; }
  std::size_t m() const { return gens_.size(); }
  std::size_t total() const { return n_ + gens_.size(); }
  unsigned d() const { return gens_.front().degree(); }
  const std::vector<Monomial>& generators() const { return gens_; }

  Monomial x_part(const Monomial& t) const {
    return Monomial(std::vector<Monomial::Exponent>(t.exponents().begin(), t.exponents().begin() + n_));
  }
  unsigned x_degree(const Monomial& t) const {
    unsigned s = 0;
    for (std::size_t i = 0; i < n_; ++i) s += t[i];
    return s;
  }
  unsigned y_degree(const Monomial& t) const { return t.degree() - x_degree(t); }

  /// x-part times the images of the y's, as a monomial of S.
  Monomial image(const Monomial& t) const {
    std::vector<Monomial::Exponent> e(t.exponents().begin(), t.exponents().begin() + n_);
    for (std::size_t j = 0; j < gens_.size(); ++j)
      for (std::size_t i = 0; i < n_; ++i) e[i] = static_cast<Monomial::Exponent>(e[i] + t[n_ + j] * gens_[j][i]);
    return Monomial(std::move(e));
  }

  Monomial lift(const Monomial& x, const Monomial& y) const {
    if (x.ambient() != n_ || y.ambient() != gens_.size()) throw std::invalid_argument("lift: wrong block sizes");
    std::vector<Monomial::Exponent> e(x.exponents().begin(), x.exponents().end());
    e.insert(e.end(), y.exponents().begin(), y.exponents().end());
    return Monomial(std::move(e));
  }

 private:
  std::size_t n_;
  std::vector<Monomial> gens_;
};

// ---------------------------------------------------------------------------
// Monomial orders on T.

enum class OrderKind { lex, pure_lex, revlex, product };
enum class BlockFirst { x, y };

/// `lex` is degree-lex, `revlex` degree-revlex, `pure_lex` plain lex, all
/// over the variable sequence (first block, then second block). `product`
/// compares the first block by `inner_first`, then the second by
/// `inner_second`. Priorities list variables from largest to smallest.
struct OrderSpec {
  OrderKind kind = OrderKind::lex;
  BlockFirst block = BlockFirst::x;
  std::vector<std::size_t> x_priority;
  std::vector<std::size_t> y_priority;
  OrderKind inner_first = OrderKind::lex;
  OrderKind inner_second = OrderKind::lex;

  static OrderSpec make(OrderKind kind, BlockFirst block, std::size_t n, std::size_t m) {
    OrderSpec o;
    o.kind = kind;
    o.block = block;
    o.x_priority = identity_order(n);
    o.y_priority = identity_order(m);
    return o;
  }

  friend bool operator==(const OrderSpec&, const OrderSpec&) = default;
};

inline const char* to_string(OrderKind k) {
  switch (k) {
    case OrderKind::lex: return "lex";
    case OrderKind::pure_lex: return "pure-lex";
    case OrderKind::revlex: return "revlex";
    case OrderKind::product: return "product";
  }
  return "?";
}

inline OrderKind parse_order_kind(std::string_view s) {
  if (s == "lex") return OrderKind::lex;
  if (s == "pure-lex" || s == "purelex") return OrderKind::pure_lex;
  if (s == "revlex") return OrderKind::revlex;
  if (s == "product") return OrderKind::product;
  throw std::invalid_argument("unknown order kind '" + std::string(s) + "'");
}

inline std::string describe(const OrderSpec& o) {
  std::ostringstream os;
  os << to_string(o.kind) << ' ' << (o.block == BlockFirst::x ? "x-first" : "y-first");
  if (o.kind == OrderKind::product) os << " (" << to_string(o.inner_first) << ", " << to_string(o.inner_second) << ')';
  os << " x:" << format_order(o.x_priority) << " y:" << format_order(o.y_priority);
  return os.str();
}

namespace detail {

/// Variables of T from largest to smallest, split into the two blocks.
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>> order_blocks(const OrderSpec& o, std::size_t n,
                                                                                   std::size_t m) {
  if (!is_permutation_of(o.x_priority, n) || !is_permutation_of(o.y_priority, m))
    throw std::invalid_argument("order priorities do not match the ring");
  std::vector<std::size_t> xs = o.x_priority, ys;
  for (auto j : o.y_priority) ys.push_back(n + j);
  if (o.block == BlockFirst::x) return {xs, ys};
  return {ys, xs};
}

inline std::strong_ordering compare_on(OrderKind kind, const std::vector<std::size_t>& vars, const Monomial& a,
                                       const Monomial& b) {
  if (kind != OrderKind::pure_lex) {
    unsigned da = 0, db = 0;
    for (auto v : vars) {
      da += a[v];
      db += b[v];
    }
    if (da != db) return da <=> db;
  }
  if (kind == OrderKind::revlex) {
    for (auto it = vars.rbegin(); it != vars.rend(); ++it)
      if (a[*it] != b[*it]) return b[*it] <=> a[*it];
    return std::strong_ordering::equal;
  }
  for (auto v : vars)
    if (a[v] != b[v]) return a[v] <=> b[v];
  return std::strong_ordering::equal;
}

}  // namespace detail

/// Monomial order comparator bound to a ring T with n x-variables and m y-variables.
class MonomialOrder {
 public:
  MonomialOrder(OrderSpec spec, std::size_t n, std::size_t m) : spec_(std::move(spec)), n_(n), m_(m) {
    std::tie(first_, second_) = detail::order_blocks(spec_, n, m);
    all_ = first_;
    all_.insert(all_.end(), second_.begin(), second_.end());
    if (spec_.kind == OrderKind::product &&
        (spec_.inner_first == OrderKind::product || spec_.inner_second == OrderKind::product))
      throw std::invalid_argument("product order blocks need lex, pure-lex or revlex");
  }

  std::strong_ordering operator()(const Monomial& a, const Monomial& b) const {
    if (a.ambient() != n_ + m_ || b.ambient() != n_ + m_) throw std::invalid_argument("order applied outside its ring");
    if (spec_.kind != OrderKind::product) return detail::compare_on(spec_.kind, all_, a, b);
    auto c = detail::compare_on(spec_.inner_first, first_, a, b);
    if (c != 0) return c;
    return detail::compare_on(spec_.inner_second, second_, a, b);
  }

  bool greater(const Monomial& a, const Monomial& b) const { return (*this)(a, b) > 0; }
  const OrderSpec& spec() const { return spec_; }
  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }

 private:
  OrderSpec spec_;
  std::size_t n_, m_;
  std::vector<std::size_t> first_, second_, all_;
};

inline std::strong_ordering order_compare(const OrderSpec& o, std::size_t n, std::size_t m, const Monomial& a,
                                          const Monomial& b) {
  return MonomialOrder(o, n, m)(a, b);
}

// ---------------------------------------------------------------------------
// Dominance. Comparisons are restricted to pairs uv, u'v' of equal bidegree
// (deg u = deg u', deg v = deg v'), the homogeneity of the Rees grading.

struct DominanceReport {
  bool x_dominant = true;
  bool y_dominant = true;
  bool structural_x = false;
  bool structural_y = false;
  std::size_t pairs_checked = 0;
  bool agrees() const { return x_dominant == structural_x && y_dominant == structural_y; }
};

/// Hard-coded classification of the order families (for n, m >= 2).
inline std::pair<bool, bool> structural_dominance(const OrderSpec& o) {
  bool xf = o.block == BlockFirst::x;
  switch (o.kind) {
    case OrderKind::lex:
    case OrderKind::pure_lex:
    case OrderKind::product: return {xf, !xf};
    case OrderKind::revlex: return {!xf, xf};  // the last block decides degrevlex ties
  }
  return {false, false};
}

inline DominanceReport dominance_class(const OrderSpec& o, std::size_t n, std::size_t m, std::size_t samples,
                                       std::uint64_t seed = 1) {
  if (n < 2 || m < 2) throw std::invalid_argument("dominance classification needs at least two x and two y variables");
  MonomialOrder ord(o, n, m);
  DominanceReport r;
  std::tie(r.structural_x, r.structural_y) = structural_dominance(o);
  auto check = [&](const Monomial& u, const Monomial& v, const Monomial& u2, const Monomial& v2) {
    auto lift = [&](const Monomial& x, const Monomial& y) {
      std::vector<Monomial::Exponent> e(x.exponents().begin(), x.exponents().end());
      e.insert(e.end(), y.exponents().begin(), y.exponents().end());
      return Monomial(std::move(e));
    };
    Monomial zero_y(m), zero_x(n);
    bool whole = ord.greater(lift(u, v), lift(u2, v2));
    ++r.pairs_checked;
    if (u != u2 && whole != ord.greater(lift(u, zero_y), lift(u2, zero_y))) r.x_dominant = false;
    if (v != v2 && whole != ord.greater(lift(zero_x, v), lift(zero_x, v2))) r.y_dominant = false;
  };
  // exhaustive part: all monomials of degree <= 1 in each block
  auto small = [](std::size_t k) {
    std::vector<std::vector<Monomial>> by_deg(2);
    by_deg[0].push_back(Monomial(k));
    for (std::size_t i = 0; i < k; ++i) by_deg[1].push_back(Monomial::variable(k, i));
    return by_deg;
  };
  auto xs = small(n), ys = small(m);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (const auto& u : xs[a])
        for (const auto& u2 : xs[a])
          for (const auto& v : ys[b])
            for (const auto& v2 : ys[b]) check(u, v, u2, v2);
  std::mt19937_64 rng(seed);
  auto random_mono = [&](std::size_t k, unsigned deg) {
    std::vector<Monomial::Exponent> e(k, 0);
    std::uniform_int_distribution<std::size_t> pick(0, k - 1);
    for (unsigned s = 0; s < deg; ++s) ++e[pick(rng)];
    return Monomial(std::move(e));
  };
  std::uniform_int_distribution<unsigned> deg(0, 4);
  for (std::size_t s = 0; s < samples; ++s) {
    unsigned dx = deg(rng), dy = deg(rng);
    check(random_mono(n, dx), random_mono(m, dy), random_mono(n, dx), random_mono(m, dy));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Binomials lead - trail with lead > trail under the order they were built for.

struct Binomial {
  Monomial lead;
  Monomial trail;
  friend bool operator==(const Binomial&, const Binomial&) = default;
};

inline Binomial make_binomial(const MonomialOrder& ord, Monomial a, Monomial b) {
  if (a == b) throw std::invalid_argument("zero binomial");
  if (ord.greater(a, b)) return {std::move(a), std::move(b)};
  return {std::move(b), std::move(a)};
}

inline bool is_balanced(const ReesPresentation& P, const Binomial& g) { return P.image(g.lead) == P.image(g.trail); }

namespace detail {

inline std::string block_string(const Monomial& t, std::size_t from, std::size_t to, char letter) {
  std::string out;
  for (std::size_t i = from; i < to; ++i) {
    if (!t[i]) continue;
    if (!out.empty()) out += '*';
    out += letter + std::to_string(i - from + 1);
    if (t[i] > 1) out += '^' + std::to_string(t[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace detail

inline std::string term_string(const ReesPresentation& P, const Monomial& t) {
  return detail::block_string(t, 0, P.n(), 'x') + " * " + detail::block_string(t, P.n(), P.total(), 'y');
}

inline std::string binomial_string(const ReesPresentation& P, const Binomial& g) {
  return term_string(P, g.lead) + " - " + term_string(P, g.trail);
}

/// Parses `x-mono * y-mono`, a product of x<i> and y<j> tokens in any order.
inline Monomial parse_term(const ReesPresentation& P, std::string_view text) {
  std::vector<Monomial::Exponent> e(P.total(), 0);
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('*', start);
    if (stop == std::string_view::npos) stop = text.size();
    auto tok = detail::trim(text.substr(start, stop - start));
    start = stop + 1;
    if (tok.empty() || tok == "1") continue;
    unsigned power = 1;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      power = static_cast<unsigned>(detail::parse_uint(tok.substr(caret + 1), "exponent"));
      tok = tok.substr(0, caret);
    }
    if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'y')) throw std::invalid_argument("bad term token");
    std::size_t idx = detail::parse_uint(tok.substr(1), "variable");
    std::size_t limit = tok[0] == 'x' ? P.n() : P.m();
    if (idx == 0 || idx > limit) throw std::invalid_argument("variable index out of range");
    e[(tok[0] == 'x' ? 0 : P.n()) + idx - 1] += static_cast<Monomial::Exponent>(power);
  }
  return Monomial(std::move(e));
}

// ---------------------------------------------------------------------------
// Degree-capped binomial Groebner bases.

/// Thrown when a reduction would leave the x-degree guard.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Incremental Buchberger for binomials of T. Every binomial handled here is
/// homogeneous in x-degree and y-degree, so reduction never changes them;
/// S-pairs whose lcm has y-degree above the cap are held back.
class BinomialGroebner {
 public:
  BinomialGroebner(const ReesPresentation& P, OrderSpec spec)
      : P_(P), ord_(std::move(spec), P.n(), P.m()), x_guard_(0) {}

  const std::vector<Binomial>& basis() const { return basis_; }
  const MonomialOrder& order() const { return ord_; }

  Monomial normal_form(Monomial t) const {
    bool moved = true;
    while (moved) {
      moved = false;
      for (const auto& g : basis_) {
        if (!g.lead.divides(t)) continue;
        t = t / g.lead * g.trail;
        moved = true;
        break;
      }
    }
    return t;
  }

  /// Remainder of a - b; nullopt when it reduces to zero.
  std::optional<Binomial> reduce(const Monomial& a, const Monomial& b) const {
    Monomial na = normal_form(a), nb = normal_form(b);
    if (na == nb) return std::nullopt;
    return make_binomial(ord_, std::move(na), std::move(nb));
  }

  bool reduces_to_zero(const Binomial& g) const { return !reduce(g.lead, g.trail).has_value(); }

  /// Adds a binomial (after reduction) and queues its S-pairs.
  bool insert(const Binomial& g) {
    auto r = reduce(g.lead, g.trail);
    if (!r) return false;
    guard(*r);
    std::size_t k = basis_.size();
    basis_.push_back(*r);
    for (std::size_t i = 0; i < k; ++i) queue_pair(i, k);
    return true;
  }

  /// Processes every queued S-pair whose lcm has y-degree <= cap.
  void complete(unsigned cap) {
    cap_ = std::max(cap_, cap);
    x_guard_ = 2 * cap_ * P_.d() + max_input_x_;
    while (true) {
      auto it = std::find_if(pairs_.begin(), pairs_.end(), [&](const Pair& p) { return p.y_degree <= cap; });
      if (it == pairs_.end()) break;
      Pair p = *it;
      pairs_.erase(it);
      const auto& gi = basis_[p.i];
      const auto& gj = basis_[p.j];
      Monomial a = p.lcm / gi.lead * gi.trail;
      Monomial b = p.lcm / gj.lead * gj.trail;
      insert(Binomial{std::move(a), std::move(b)});
    }
  }

  /// Drops elements with redundant leads and fully reduces the trails.
  std::vector<Binomial> reduced_basis() const {
    std::vector<Binomial> keep;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (i == j || !basis_[j].lead.divides(basis_[i].lead)) continue;
        redundant = basis_[j].lead != basis_[i].lead || j < i;
      }
      if (!redundant) keep.push_back(basis_[i]);
    }
    BinomialGroebner tmp(P_, ord_.spec());
    tmp.basis_ = keep;
    for (auto& g : keep) g.trail = tmp.normal_form(g.trail);
    std::sort(keep.begin(), keep.end(), [&](const Binomial& a, const Binomial& b) { return ord_.greater(b.lead, a.lead); });
    return keep;
  }

  /// S-pairs of the current basis with lcm y-degree <= cap that do not reduce to zero.
  std::size_t open_pairs(unsigned cap) const {
    std::size_t open = 0;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (std::size_t j = i + 1; j < basis_.size(); ++j) {
        Monomial l = lcm(basis_[i].lead, basis_[j].lead);
        if (P_.y_degree(l) > cap || gcd(basis_[i].lead, basis_[j].lead).is_one()) continue;
        if (reduce(l / basis_[i].lead * basis_[i].trail, l / basis_[j].lead * basis_[j].trail)) ++open;
      }
    return open;
  }

  void note_input_x_degree(unsigned x) { max_input_x_ = std::max(max_input_x_, x); }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    unsigned y_degree;
  };

  void queue_pair(std::size_t i, std::size_t j) {
    const auto& a = basis_[i].lead;
    const auto& b = basis_[j].lead;
    if (gcd(a, b).is_one()) return;  // coprime leads: the S-pair reduces to zero
    Monomial l = lcm(a, b);
    Pair p{i, j, l, P_.y_degree(l)};
    // normal strategy: smallest lcm first, ties by insertion
    auto pos = std::upper_bound(pairs_.begin(), pairs_.end(), p,
                                [&](const Pair& x, const Pair& y) { return ord_.greater(y.lcm, x.lcm); });
    pairs_.insert(pos, std::move(p));
  }

  void guard(const Binomial& g) const {
    if (x_guard_ && (P_.x_degree(g.lead) > x_guard_ || P_.x_degree(g.trail) > x_guard_))
      throw CapExceeded("reduction exceeded the x-degree bound " + std::to_string(x_guard_));
  }

  const ReesPresentation& P_;
  MonomialOrder ord_;
  std::vector<Binomial> basis_;
  std::vector<Pair> pairs_;
  unsigned cap_ = 0;
  unsigned x_guard_;
  unsigned max_input_x_ = 0;
};

/// Groebner basis, up to y-degree `cap`, of the ideal generated by `gens`.
inline std::vector<Binomial> buchberger_capped(const ReesPresentation& P, const std::vector<Binomial>& gens,
                                               const OrderSpec& spec, unsigned cap) {
  BinomialGroebner gb(P, spec);
  for (const auto& g : gens) {
    if (!is_balanced(P, g)) throw std::invalid_argument("input binomial is not in the Rees ideal");
    if (P.y_degree(g.lead) > cap) throw std::invalid_argument("cap is below the y-degree of an input binomial");
    gb.note_input_x_degree(std::max(P.x_degree(g.lead), P.x_degree(g.trail)));
  }
  gb.complete(cap);
  for (const auto& g : gens) {
    gb.insert(g);
    gb.complete(cap);
  }
  return gb.reduced_basis();
}

namespace detail {

inline void monomials_of_degree(std::size_t k, unsigned deg, std::vector<Monomial>& out) {
  std::vector<Monomial::Exponent> e(k, 0);
  auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
    if (pos + 1 == k) {
      e[pos] = static_cast<Monomial::Exponent>(left);
      out.emplace_back(e);
      e[pos] = 0;
      return;
    }
    for (unsigned a = left + 1; a-- > 0;) {
      e[pos] = static_cast<Monomial::Exponent>(a);
      self(self, pos + 1, left - a);
    }
    e[pos] = 0;
  };
  if (k == 0) {
    if (deg == 0) out.emplace_back(std::size_t{0});
    return;
  }
  rec(rec, 0, deg);
}

}  // namespace detail

/// Minimal generators of the Rees ideal up to y-degree `cap`. Candidates are
/// the relations (phi(Y2)/g) Y1 - (phi(Y1)/g) Y2, g = gcd(phi(Y1), phi(Y2)),
/// over y-monomials Y1, Y2 of equal degree with disjoint support; every
/// binomial of the ideal is a monomial multiple of one of them. They are
/// visited by total degree, so keeping exactly those outside the ideal of the
/// earlier ones yields a minimal generating set.
inline std::vector<Binomial> rees_generators_capped(const ReesPresentation& P, unsigned cap,
                                                    std::optional<OrderSpec> spec = std::nullopt) {
  if (cap < 1) throw std::invalid_argument("cap must be at least 1");
  OrderSpec o = spec ? *spec : OrderSpec::make(OrderKind::lex, BlockFirst::x, P.n(), P.m());
  BinomialGroebner gb(P, o);
  Monomial one_x(P.n());
  std::vector<Binomial> cands;
  for (unsigned s = 1; s <= cap; ++s) {
    std::vector<Monomial> ys;
    detail::monomials_of_degree(P.m(), s, ys);
    for (std::size_t a = 0; a < ys.size(); ++a)
      for (std::size_t b = a + 1; b < ys.size(); ++b) {
        if (!gcd(ys[a], ys[b]).is_one()) continue;
        Monomial fa = P.image(P.lift(one_x, ys[a])), fb = P.image(P.lift(one_x, ys[b]));
        Monomial g = gcd(fa, fb);
        cands.push_back(make_binomial(gb.order(), P.lift(fb / g, ys[a]), P.lift(fa / g, ys[b])));
      }
  }
  std::stable_sort(cands.begin(), cands.end(), [&](const Binomial& a, const Binomial& b) {
    if (a.lead.degree() != b.lead.degree()) return a.lead.degree() < b.lead.degree();
    return P.y_degree(a.lead) < P.y_degree(b.lead);
  });
  std::vector<Binomial> out;
  for (const auto& rel : cands) {
    if (gb.reduces_to_zero(rel)) continue;
    out.push_back(rel);
    gb.note_input_x_degree(std::max(P.x_degree(rel.lead), P.x_degree(rel.trail)));
    gb.insert(rel);
    gb.complete(cap);
  }
  return out;
}

struct XConditionReport {
  bool ok = true;
  unsigned cap = 0;
  std::size_t initial_generators = 0;
  std::optional<Binomial> witness;  // element whose lead is a minimal initial generator of x-degree >= 2
};

/// Every minimal generator of the initial ideal spanned by the basis leads has x-degree <= 1.
inline XConditionReport x_condition_check(const ReesPresentation& P, const std::vector<Binomial>& gb, unsigned cap = 0) {
  XConditionReport r;
  r.cap = cap;
  for (std::size_t i = 0; i < gb.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < gb.size() && minimal; ++j)
      if (j != i && gb[j].lead.divides(gb[i].lead) && (gb[j].lead != gb[i].lead || j < i)) minimal = false;
    if (!minimal) continue;
    ++r.initial_generators;
    if (P.x_degree(gb[i].lead) > 1 && r.ok) {
      r.ok = false;
      r.witness = gb[i];
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Edge rings and even closed walks. z_k corresponds to the k-th edge of G in
// lex order and maps to x_e; binomials live on m = |E(G)| variables.

struct WalkBinomial {
  Monomial plus;   // product over the odd-position edges
  Monomial minus;  // product over the even-position edges
  friend bool operator==(const WalkBinomial&, const WalkBinomial&) = default;
};

inline Monomial edge_image(const Graph& G, const Monomial& z) {
  auto E = G.edges();
  std::vector<Monomial::Exponent> e(G.vertex_count(), 0);
  for (std::size_t k = 0; k < E.size(); ++k) {
    e[E[k].first] = static_cast<Monomial::Exponent>(e[E[k].first] + z[k]);
    e[E[k].second] = static_cast<Monomial::Exponent>(e[E[k].second] + z[k]);
  }
  return Monomial(std::move(e));
}

namespace detail {

/// No binomial u' - v' of the toric ideal other than h itself has u' | u, v' | v.
inline bool is_primitive_edge_binomial(const Graph& G, const Monomial& u, const Monomial& v) {
  auto divisors = [](const Monomial& w) {
    std::vector<Monomial> out{Monomial(w.ambient())};
    for (std::size_t i = 0; i < w.ambient(); ++i) {
      std::vector<Monomial> next;
      for (const auto& d : out)
        for (unsigned a = 0; a <= w[i]; ++a) {
          std::vector<Monomial::Exponent> e(d.exponents().begin(), d.exponents().end());
          e[i] = static_cast<Monomial::Exponent>(a);
          next.emplace_back(std::move(e));
        }
      out = std::move(next);
    }
    return out;
  };
  auto du = divisors(u), dv = divisors(v);
  for (const auto& a : du)
    for (const auto& b : dv) {
      if (a.is_one() || b.is_one() || a == b) continue;
      if (a == u && b == v) continue;
      if (a.degree() != b.degree()) continue;
      if (edge_image(G, a) == edge_image(G, b)) return false;
    }
  return true;
}

}  // namespace detail

/// Binomials of primitive even closed walks of length <= max_len, one per
/// binomial up to sign, sorted.
inline std::vector<WalkBinomial> primitive_walk_relations(const Graph& G, unsigned max_len) {
  const std::size_t n = G.vertex_count();
  auto E = G.edges();
  const std::size_t m = E.size();
  std::vector<std::vector<std::size_t>> edge_id(n, std::vector<std::size_t>(n, m));
  for (std::size_t k = 0; k < m; ++k) edge_id[E[k].first][E[k].second] = edge_id[E[k].second][E[k].first] = k;

  std::set<std::pair<std::vector<Monomial::Exponent>, std::vector<Monomial::Exponent>>> seen;
  std::vector<WalkBinomial> out;
  std::vector<Monomial::Exponent> sides[2] = {std::vector<Monomial::Exponent>(m, 0),
                                               std::vector<Monomial::Exponent>(m, 0)};
  // walks start at their smallest vertex; every closed walk has a rotation of that form
  std::size_t start = 0;
  auto dfs = [&](auto&& self, std::size_t v, unsigned len) -> void {
    if (len > 0 && len % 2 == 0 && v == start) {
      Monomial a(sides[0]), b(sides[1]);
      if (a != b && gcd(a, b).is_one()) {
        auto key = lex_greater(a, b) ? std::make_pair(sides[0], sides[1]) : std::make_pair(sides[1], sides[0]);
        if (!seen.count(key) && detail::is_primitive_edge_binomial(G, a, b)) {
          seen.insert(key);
          out.push_back(lex_greater(a, b) ? WalkBinomial{a, b} : WalkBinomial{b, a});
        }
      }
    }
    if (len == max_len) return;
    for (VarMask f = G.neighbors(v); f; f &= f - 1) {
      auto w = static_cast<std::size_t>(std::countr_zero(f));
      if (w < start) continue;
      std::size_t k = edge_id[v][w];
      ++sides[len % 2][k];
      self(self, w, len + 1);
      --sides[len % 2][k];
    }
  };
  for (start = 0; start < n; ++start) dfs(dfs, start, 0);
  std::sort(out.begin(), out.end(), [](const WalkBinomial& a, const WalkBinomial& b) {
    if (a.plus != b.plus) return lex_greater(a.plus, b.plus);
    return lex_greater(a.minus, b.minus);
  });
  return out;
}

/// G* : a new vertex n+1 joined to every vertex of G.
inline Graph cone_graph(const Graph& G) {
  const std::size_t n = G.vertex_count();
  Graph H(n + 1);
  for (auto [a, b] : G.edges()) H.add_edge(a, b);
  for (std::size_t v = 0; v < n; ++v) H.add_edge(v, n);
  return H;
}

/// Relations of the Rees ideal of I_c(G) (generators in the canonical order of
/// I_c(G)) obtained from primitive walks of G*. A walk relation u Z_a - v Z_b
/// in the edge ring of G* (u, v over the cone edges) becomes u Y_b - v Y_a.
inline std::vector<Binomial> complementary_walk_relations(const Graph& G, unsigned max_len, unsigned cap,
                                                          const MonomialOrder& ord) {
  const std::size_t n = G.vertex_count();
  auto Ic = complementary_edge_ideal(G);
  ReesPresentation P(Ic);
  Graph H = cone_graph(G);
  auto EH = H.edges();
  // map H-edges to either an x-variable (cone edge) or a generator index of I_c(G)
  std::vector<std::pair<bool, std::size_t>> role(EH.size());
  for (std::size_t k = 0; k < EH.size(); ++k) {
    auto [a, b] = EH[k];
    if (b == n) {
      role[k] = {true, a};
      continue;
    }
    VarMask comp = G.all_vertices() & ~((VarMask{1} << a) | (VarMask{1} << b));
    std::size_t idx = Ic.index_of(Monomial::from_mask(n, comp));
    if (idx == Ic.size()) throw std::logic_error("edge without a generator");
    role[k] = {false, idx};
  }
  std::vector<Binomial> out;
  for (const auto& w : primitive_walk_relations(H, max_len)) {
    std::vector<Monomial::Exponent> u(n, 0), v(n, 0), ya(P.m(), 0), yb(P.m(), 0);
    for (std::size_t k = 0; k < EH.size(); ++k) {
      if (role[k].first) {
        u[role[k].second] = static_cast<Monomial::Exponent>(u[role[k].second] + w.plus[k]);
        v[role[k].second] = static_cast<Monomial::Exponent>(v[role[k].second] + w.minus[k]);
      } else {
        ya[role[k].second] = static_cast<Monomial::Exponent>(ya[role[k].second] + w.plus[k]);
        yb[role[k].second] = static_cast<Monomial::Exponent>(yb[role[k].second] + w.minus[k]);
      }
    }
    Monomial Ya(ya), Yb(yb);
    if (Ya.degree() == 0 || Ya.degree() > cap) continue;
    Monomial A = P.lift(Monomial(u), Yb), B = P.lift(Monomial(v), Ya);
    if (A == B) continue;
    out.push_back(make_binomial(ord, A, B));
  }
  return out;
}

struct WalkAgreement {
  bool walks_in_rees = true;   // every translated walk relation reduces to 0 mod the Rees GB
  bool rees_in_walks = true;   // every Rees generator reduces to 0 mod the walk GB
  std::size_t walk_relations = 0;
  std::size_t rees_generators = 0;
  bool ok() const { return walks_in_rees && rees_in_walks; }
};

inline WalkAgreement walk_oracle_agreement(const Graph& G, unsigned cap, unsigned max_len, const OrderSpec& spec) {
  auto Ic = complementary_edge_ideal(G);
  ReesPresentation P(Ic);
  MonomialOrder ord(spec, P.n(), P.m());
  WalkAgreement r;
  auto rees = rees_generators_capped(P, cap, spec);
  auto walks = complementary_walk_relations(G, max_len, cap, ord);
  r.rees_generators = rees.size();
  r.walk_relations = walks.size();
  BinomialGroebner gr(P, spec), gw(P, spec);
  for (const auto& g : rees) {
    gr.note_input_x_degree(std::max(P.x_degree(g.lead), P.x_degree(g.trail)));
    gr.insert(g);
  }
  gr.complete(cap);
  for (const auto& g : walks) {
    gw.note_input_x_degree(std::max(P.x_degree(g.lead), P.x_degree(g.trail)));
    gw.insert(g);
  }
  gw.complete(cap);
  for (const auto& g : walks)
    if (!gr.reduces_to_zero(g)) r.walks_in_rees = false;
  for (const auto& g : rees)
    if (!gw.reduces_to_zero(g)) r.rees_in_walks = false;
  return r;
}

/// x-first lex order on the Rees ring of I_c(G) with the elimination labeling
/// as x-priority and the canonical generator order on the y's.
inline OrderSpec complementary_x_order(const Graph& G) {
  auto Ic = complementary_edge_ideal(G);
  OrderSpec o = OrderSpec::make(OrderKind::lex, BlockFirst::x, G.vertex_count(), Ic.size());
  o.x_priority = complementary_priority(G);
  return o;
}

struct ReesXConditionRun {
  std::size_t generators = 0;
  std::vector<Binomial> gb;
  XConditionReport xcond;
};

inline ReesXConditionRun complementary_x_condition(const Graph& G, unsigned cap) {
  auto Ic = complementary_edge_ideal(G);
  ReesPresentation P(Ic);
  auto spec = complementary_x_order(G);
  ReesXConditionRun r;
  auto gens = rees_generators_capped(P, cap, spec);
  r.generators = gens.size();
  r.gb = buchberger_capped(P, gens, spec, cap);
  r.xcond = x_condition_check(P, r.gb, cap);
  return r;
}

inline void write_gb(std::ostream& os, const ReesPresentation& P, const OrderSpec& spec, unsigned cap,
                     const std::vector<Binomial>& gb) {
  os << "# order " << describe(spec) << "\n# cap " << cap << "\n";
  for (const auto& g : gb) os << binomial_string(P, g) << '\n';
}

}  // namespace linpow

#endif  // LINPOW_REES_HPP
