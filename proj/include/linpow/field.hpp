#ifndef LINPOW_FIELD_HPP
#define LINPOW_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace linpow {

/// Coefficient field: Q (characteristic 0) or a prime field F_p.
class FieldSpec {
 public:
  constexpr FieldSpec() = default;

  static constexpr FieldSpec rationals() { return FieldSpec(); }

  static FieldSpec prime(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be 0 or a prime");
    FieldSpec k;
    k.p_ = p;
    return k;
  }

  /// Accepts `q`, `0`, `f2`, `f3`, `fp` style names and bare primes.
  static FieldSpec parse(std::string_view name) {
    std::string s;
    for (char c : name) s += static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
    if (s == "q" || s == "0" || s == "qq") return rationals();
    if (!s.empty() && (s[0] == 'f' || s[0] == 'p')) s.erase(0, 1);
    if (s.empty()) throw std::invalid_argument("unknown field '" + std::string(name) + "'");
    std::uint64_t p = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw std::invalid_argument("unknown field '" + std::string(name) + "'");
      p = p * 10 + static_cast<std::uint64_t>(c - '0');
      if (p > 0xFFFFFFFFULL) throw std::invalid_argument("field characteristic too large");
    }
    if (p == 0) return rationals();
    return prime(static_cast<std::uint32_t>(p));
  }

  constexpr std::uint32_t characteristic() const { return p_; }
  constexpr bool is_rational() const { return p_ == 0; }

  std::string name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

  friend constexpr bool operator==(FieldSpec a, FieldSpec b) { return a.p_ == b.p_; }

  static constexpr bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

 private:
  std::uint32_t p_ = 0;
};

inline constexpr FieldSpec kQ = FieldSpec::rationals();

inline FieldSpec F2() { return FieldSpec::prime(2); }
inline FieldSpec F3() { return FieldSpec::prime(3); }

}  // namespace linpow

#endif  // LINPOW_FIELD_HPP
