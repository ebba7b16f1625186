#ifndef LINPOW_MONOMIAL_HPP
#define LINPOW_MONOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace linpow {

using VarMask = std::uint64_t;
inline constexpr std::size_t kMaxMaskVars = 64;

/// A monomial x^a in a polynomial ring with a fixed number of variables.
///
/// Exponents are stored as small unsigned integers; products that would
/// exceed the 16-bit cap throw std::overflow_error.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;

  /// The monomial 1 in `n` variables.
  explicit Monomial(std::size_t n) : exps_(n, 0) {}

  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
    for (auto e : exps_) degree_ += e;
  }

  Monomial(std::initializer_list<int> exps) {
    exps_.reserve(exps.size());
    for (int e : exps) {
      if (e < 0 || e > std::numeric_limits<Exponent>::max())
        throw std::invalid_argument("monomial exponent out of range");
      exps_.push_back(static_cast<Exponent>(e));
      degree_ += static_cast<std::size_t>(e);
    }
  }

  static Monomial variable(std::size_t n, std::size_t i, Exponent e = 1) {
    if (i >= n) throw std::out_of_range("variable index out of range");
    Monomial m(n);
    m.exps_[i] = e;
    m.degree_ = e;
    return m;
  }

  /// Squarefree monomial x_F for the vertex set encoded in `mask`.
  static Monomial from_mask(std::size_t n, VarMask mask) {
    Monomial m(n);
    for (std::size_t i = 0; i < n && i < kMaxMaskVars; ++i)
      if (mask >> i & 1U) {
        m.exps_[i] = 1;
        ++m.degree_;
      }
    return m;
  }

  std::size_t ambient() const { return exps_.size(); }
  std::size_t degree() const { return degree_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  bool is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
  }

  Exponent max_exponent() const {
    return exps_.empty() ? 0 : *std::max_element(exps_.begin(), exps_.end());
  }

  /// Support as a bitmask; only valid for ambient() <= 64.
  VarMask support_mask() const {
    if (ambient() > kMaxMaskVars) throw std::length_error("too many variables for a bitmask");
    VarMask mask = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0) mask |= VarMask{1} << i;
    return mask;
  }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0) out.push_back(i);
    return out;
  }

  bool divides(const Monomial& other) const {
    check_same(other);
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    a.check_same(b);
    Monomial out(a.ambient());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) {
      unsigned s = unsigned{a.exps_[i]} + b.exps_[i];
      if (s > std::numeric_limits<Exponent>::max()) throw std::overflow_error("monomial exponent overflow");
      out.exps_[i] = static_cast<Exponent>(s);
    }
    out.degree_ = a.degree_ + b.degree_;
    return out;
  }

  /// Exact quotient a / b; b must divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    if (!b.divides(a)) throw std::domain_error("monomial quotient is not exact");
    Monomial out(a.ambient());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) out.exps_[i] = static_cast<Exponent>(a.exps_[i] - b.exps_[i]);
    out.degree_ = a.degree_ - b.degree_;
    return out;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    a.check_same(b);
    Monomial out(a.ambient());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) {
      out.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
      out.degree_ += out.exps_[i];
    }
    return out;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    a.check_same(b);
    Monomial out(a.ambient());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) {
      out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
      out.degree_ += out.exps_[i];
    }
    return out;
  }

  /// u / gcd(u, v), the generator of (u) : (v).
  friend Monomial colon(const Monomial& u, const Monomial& v) {
    u.check_same(v);
    Monomial out(u.ambient());
    for (std::size_t i = 0; i < u.exps_.size(); ++i) {
      out.exps_[i] = u.exps_[i] > v.exps_[i] ? static_cast<Exponent>(u.exps_[i] - v.exps_[i]) : Exponent{0};
      out.degree_ += out.exps_[i];
    }
    return out;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  /// Lexicographic comparison with x_1 > x_2 > ... (true when a > b).
  friend bool lex_greater(const Monomial& a, const Monomial& b) { return a.exps_ > b.exps_; }

  /// Canonical generator order: degree ascending, then lex descending.
  friend bool canonical_less(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return a.exps_ > b.exps_;
  }

  std::size_t hash() const {
    std::size_t h = exps_.size();
    for (auto e : exps_) h = h * 1000003U ^ e;
    return h;
  }

 private:
  void check_same(const Monomial& other) const {
    if (other.ambient() != ambient()) throw std::invalid_argument("monomials live in different rings");
  }

  std::vector<Exponent> exps_;
  std::size_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// A monomial ideal stored by its minimal generators in canonical order.
///
/// The zero ideal has no generators; the unit ideal has the single
/// generator 1.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(std::size_t n) : n_(n) {}

  static MonomialIdeal unit(std::size_t n) {
    MonomialIdeal I(n);
    I.gens_.emplace_back(n);
    return I;
  }

  std::size_t ambient() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  const Monomial& operator[](std::size_t i) const { return gens_[i]; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_proper() const { return !is_unit(); }

  bool is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& u) { return u.is_squarefree(); });
  }

  bool is_equigenerated() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [this](const Monomial& u) { return u.degree() == gens_.front().degree(); });
  }

  std::size_t alpha() const {
    if (gens_.empty()) throw std::domain_error("alpha of the zero ideal");
    return gens_.front().degree();
  }

  std::size_t max_degree() const { return gens_.empty() ? 0 : gens_.back().degree(); }

  bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& u) { return u.divides(m); });
  }

  /// Index of `m` in the generator list, or size() when it is not a generator.
  std::size_t index_of(const Monomial& m) const {
    auto it = std::find(gens_.begin(), gens_.end(), m);
    return static_cast<std::size_t>(it - gens_.begin());
  }

  /// lcm of all generators.
  Monomial lcm_all() const {
    Monomial acc(n_);
    for (const auto& u : gens_) acc = lcm(acc, u);
    return acc;
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.n_ == b.n_ && a.gens_ == b.gens_;
  }

  friend MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t n);

 private:
  std::size_t n_ = 0;
  std::vector<Monomial> gens_;
};

/// Keeps the divisibility-minimal monomials of `gens`, canonically sorted.
inline MonomialIdeal minimalize(std::vector<Monomial> gens, std::size_t n) {
  for (const auto& g : gens)
    if (g.ambient() != n) throw std::invalid_argument("generator has the wrong number of variables");
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return canonical_less(a, b); });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  MonomialIdeal out(n);
  for (auto& g : gens) {
    // divisors have strictly smaller degree and were placed first
    bool redundant = std::any_of(out.gens_.begin(), out.gens_.end(), [&](const Monomial& h) {
      return h.degree() < g.degree() && h.divides(g);
    });
    if (!redundant) out.gens_.push_back(std::move(g));
  }
  return out;
}

inline void check_same_ring(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.ambient() != J.ambient()) throw std::invalid_argument("ideals live in different rings");
}

inline MonomialIdeal multiply_ideals(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_ring(I, J);
  std::vector<Monomial> prods;
  prods.reserve(I.size() * J.size());
  for (const auto& u : I.generators())
    for (const auto& v : J.generators()) prods.push_back(u * v);
  return minimalize(std::move(prods), I.ambient());
}

inline MonomialIdeal add_ideals(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_ring(I, J);
  std::vector<Monomial> all = I.generators();
  all.insert(all.end(), J.generators().begin(), J.generators().end());
  return minimalize(std::move(all), I.ambient());
}

/// Minimal generators of I^k. For I^0 the caller decides (the unit ideal).
inline MonomialIdeal power_ideal(const MonomialIdeal& I, unsigned k) {
  if (k == 0) throw std::invalid_argument("power_ideal requires k >= 1");
  MonomialIdeal acc = I;
  for (unsigned i = 1; i < k; ++i) acc = multiply_ideals(acc, I);
  return acc;
}

inline MonomialIdeal colon_ideal(const MonomialIdeal& I, const Monomial& v) {
  if (v.ambient() != I.ambient()) throw std::invalid_argument("colon by a monomial from another ring");
  std::vector<Monomial> quots;
  quots.reserve(I.size());
  for (const auto& u : I.generators()) quots.push_back(colon(u, v));
  return minimalize(std::move(quots), I.ambient());
}

inline MonomialIdeal intersect_ideals(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_ring(I, J);
  std::vector<Monomial> lcms;
  lcms.reserve(I.size() * J.size());
  for (const auto& u : I.generators())
    for (const auto& v : J.generators()) lcms.push_back(lcm(u, v));
  return minimalize(std::move(lcms), I.ambient());
}

struct IdealProfile {
  std::size_t alpha = 0;
  bool equigenerated = false;
  std::vector<std::size_t> support;  // 0-based variable indices
  bool fully_supported = false;
};

inline IdealProfile ideal_profile(const MonomialIdeal& I) {
  if (I.is_zero()) throw std::domain_error("profile of the zero ideal");
  IdealProfile p;
  p.alpha = I.alpha();
  p.equigenerated = I.is_equigenerated();
  p.support = I.lcm_all().support();
  p.fully_supported = p.support.size() == I.ambient();
  return p;
}

struct Polarization {
  MonomialIdeal ideal;
  /// origin[k] = (original variable, copy number starting at 1) for new variable k.
  std::vector<std::pair<std::size_t, std::size_t>> origin;
};

/// Replaces x_i^e by x_{i,1}...x_{i,e}. Every original variable keeps at
/// least one copy, so squarefree input maps identically.
inline Polarization polarize(const MonomialIdeal& I) {
  const std::size_t n = I.ambient();
  std::vector<std::size_t> copies(n, 1), offset(n, 0);
  for (const auto& u : I.generators())
    for (std::size_t i = 0; i < n; ++i) copies[i] = std::max<std::size_t>(copies[i], u[i]);
  Polarization out;
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    offset[i] = total;
    for (std::size_t c = 1; c <= copies[i]; ++c) out.origin.emplace_back(i, c);
    total += copies[i];
  }
  std::vector<Monomial> gens;
  for (const auto& u : I.generators()) {
    std::vector<Monomial::Exponent> e(total, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t c = 0; c < u[i]; ++c) e[offset[i] + c] = 1;
    gens.emplace_back(std::move(e));
  }
  out.ideal = minimalize(std::move(gens), total);
  return out;
}

/// Generators of I supported inside `vars`, re-indexed into |vars| variables
/// (in increasing order of the original index).
inline MonomialIdeal restrict_ideal(const MonomialIdeal& I, std::vector<std::size_t> vars) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  for (auto v : vars)
    if (v >= I.ambient()) throw std::out_of_range("restriction variable out of range");
  std::vector<bool> keep(I.ambient(), false);
  for (auto v : vars) keep[v] = true;
  std::vector<Monomial> gens;
  for (const auto& u : I.generators()) {
    bool inside = true;
    for (std::size_t i = 0; i < I.ambient(); ++i)
      if (u[i] != 0 && !keep[i]) inside = false;
    if (!inside) continue;
    std::vector<Monomial::Exponent> e;
    e.reserve(vars.size());
    for (auto v : vars) e.push_back(u[v]);
    gens.emplace_back(std::move(e));
  }
  return minimalize(std::move(gens), vars.size());
}

/// Embeds an ideal of `sub.ambient()` variables back along `vars` into n variables.
inline MonomialIdeal embed_ideal(const MonomialIdeal& sub, std::vector<std::size_t> vars, std::size_t n) {
  std::sort(vars.begin(), vars.end());
  if (vars.size() != sub.ambient()) throw std::invalid_argument("embedding size mismatch");
  std::vector<Monomial> gens;
  for (const auto& u : sub.generators()) {
    std::vector<Monomial::Exponent> e(n, 0);
    for (std::size_t k = 0; k < vars.size(); ++k) e.at(vars[k]) = u[k];
    gens.emplace_back(std::move(e));
  }
  return minimalize(std::move(gens), n);
}

/// Every monomial of `sub` lies in `sup`.
inline bool ideal_contained(const MonomialIdeal& sub, const MonomialIdeal& sup) {
  check_same_ring(sub, sup);
  return std::all_of(sub.generators().begin(), sub.generators().end(),
                     [&](const Monomial& u) { return sup.contains(u); });
}

// ---------------------------------------------------------------------------
// Text format: one monomial per line, `x3*x5^2`, letters a-f alias x1-x6,
// `1` for the unit monomial, blank lines and `#` comments ignored.

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::size_t parse_uint(std::string_view s, const char* what) {
  if (s.empty()) throw std::invalid_argument(std::string("missing number in ") + what);
  std::size_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument(std::string("bad number '") + std::string(s) + "' in " + what);
    v = v * 10 + static_cast<std::size_t>(c - '0');
    if (v > 1'000'000) throw std::invalid_argument(std::string("number too large in ") + what);
  }
  return v;
}

/// Parses one monomial line into (variable index, exponent) pairs.
inline std::vector<std::pair<std::size_t, std::size_t>> parse_monomial_tokens(std::string_view line) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  line = trim(line);
  if (line == "1") return out;
  std::size_t start = 0;
  while (start <= line.size()) {
    std::size_t stop = line.find('*', start);
    if (stop == std::string_view::npos) stop = line.size();
    std::string_view tok = trim(line.substr(start, stop - start));
    if (tok.empty()) throw std::invalid_argument("empty factor in monomial '" + std::string(line) + "'");
    std::size_t exp = 1;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      exp = parse_uint(trim(tok.substr(caret + 1)), "exponent");
      tok = trim(tok.substr(0, caret));
    }
    std::size_t var = 0;
    if (tok.size() == 1 && tok[0] >= 'a' && tok[0] <= 'f') {
      var = static_cast<std::size_t>(tok[0] - 'a');
    } else if (tok.size() >= 2 && tok[0] == 'x') {
      std::size_t idx = parse_uint(tok.substr(1), "variable");
      if (idx == 0) throw std::invalid_argument("variables are numbered from x1");
      var = idx - 1;
    } else {
      throw std::invalid_argument("unknown variable '" + std::string(tok) + "'");
    }
    if (exp > std::numeric_limits<Monomial::Exponent>::max()) throw std::invalid_argument("exponent too large");
    out.emplace_back(var, exp);
    start = stop + 1;
  }
  return out;
}

}  // namespace detail

/// Generators in file order (not minimalized). `min_vars` widens the ring.
inline std::vector<Monomial> parse_monomials(std::istream& in, std::size_t min_vars = 0) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> rows;
  std::size_t n = min_vars;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view view(line);
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = detail::trim(view);
    if (view.empty()) continue;
    auto toks = detail::parse_monomial_tokens(view);
    for (auto& [v, e] : toks) n = std::max(n, v + 1);
    rows.push_back(std::move(toks));
  }
  std::vector<Monomial> out;
  for (const auto& toks : rows) {
    std::vector<Monomial::Exponent> e(n, 0);
    for (auto [v, x] : toks) {
      std::size_t s = e[v] + x;
      if (s > std::numeric_limits<Monomial::Exponent>::max()) throw std::invalid_argument("exponent too large");
      e[v] = static_cast<Monomial::Exponent>(s);
    }
    out.emplace_back(std::move(e));
  }
  return out;
}

inline MonomialIdeal parse_ideal(std::istream& in, std::size_t min_vars = 0) {
  auto gens = parse_monomials(in, min_vars);
  std::size_t n = gens.empty() ? min_vars : gens.front().ambient();
  return minimalize(std::move(gens), n);
}

inline MonomialIdeal parse_ideal(std::string_view text, std::size_t min_vars = 0) {
  std::istringstream in{std::string(text)};
  return parse_ideal(in, min_vars);
}

inline std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.ambient(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << to_string(m); }

inline void write_ideal(std::ostream& os, const MonomialIdeal& I) {
  for (const auto& u : I.generators()) os << to_string(u) << '\n';
}

inline std::string to_string(const MonomialIdeal& I) {
  std::string out = "(";
  for (std::size_t k = 0; k < I.size(); ++k) {
    if (k) out += ", ";
    out += to_string(I[k]);
  }
  return out + ")";
}

inline MonomialIdeal make_ideal(std::size_t n, std::initializer_list<std::string_view> gens) {
  std::vector<Monomial> ms;
  for (auto g : gens) {
    std::vector<Monomial::Exponent> e(n, 0);
    for (auto [v, x] : detail::parse_monomial_tokens(g)) {
      if (v >= n) throw std::invalid_argument("variable outside the ring");
      e[v] = static_cast<Monomial::Exponent>(e[v] + x);
    }
    ms.emplace_back(std::move(e));
  }
  return minimalize(std::move(ms), n);
}

}  // namespace linpow

#endif  // LINPOW_MONOMIAL_HPP
