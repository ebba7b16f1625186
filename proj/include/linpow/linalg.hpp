#ifndef LINPOW_LINALG_HPP
#define LINPOW_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "field.hpp"

namespace linpow {

struct SparseEntry {
  std::uint32_t row;
  std::int64_t value;
};

/// Integer column with strictly increasing row indices and nonzero values.
using SparseColumn = std::vector<SparseEntry>;

struct ColumnReduction {
  std::size_t rank = 0;
  std::vector<std::uint32_t> pivot_rows;  // one per nonzero reduced column
};

namespace detail {

struct Overflow : std::exception {};

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (r != 1) throw std::domain_error("element not invertible");
  return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

struct ModArith {
  using Value = std::uint32_t;
  std::uint32_t p;

  Value from_int(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(p);
    return static_cast<Value>(m < 0 ? m + p : m);
  }
  bool is_zero(Value v) const { return v == 0; }
  // a*x - b*y mod p
  Value combine(Value a, Value x, Value b, Value y) const {
    std::uint64_t lhs = std::uint64_t{a} * x % p;
    std::uint64_t rhs = std::uint64_t{b} * y % p;
    return static_cast<Value>((lhs + p - rhs) % p);
  }
  // multipliers so that a*pivot_j - b*pivot_k == 0 with a = 1
  std::pair<Value, Value> multipliers(Value pivot_j, Value pivot_k) const {
    return {1, static_cast<Value>(std::uint64_t{pivot_j} * inv_mod(pivot_k, p) % p)};
  }
  template <class Col>
  void normalize(Col&) const {}
};

struct CheckedIntArith {
  using Value = std::int64_t;

  Value from_int(std::int64_t v) const { return v; }
  bool is_zero(Value v) const { return v == 0; }
  Value combine(Value a, Value x, Value b, Value y) const {
    Value l, r, out;
    if (__builtin_mul_overflow(a, x, &l) || __builtin_mul_overflow(b, y, &r) || __builtin_sub_overflow(l, r, &out))
      throw Overflow{};
    return out;
  }
  std::pair<Value, Value> multipliers(Value pivot_j, Value pivot_k) const { return {pivot_k, pivot_j}; }
  template <class Col>
  void normalize(Col& col) const {
    Value g = 0;
    for (const auto& e : col) {
      Value a = e.second < 0 ? -e.second : e.second;
      Value x = g, y = a;
      while (y != 0) std::tie(x, y) = std::make_pair(y, x % y);
      g = x;
      if (g == 1) return;
    }
    if (g > 1)
      for (auto& e : col) e.second /= g;
  }
};

struct BigIntArith {
  using Value = mpz_class;

  Value from_int(std::int64_t v) const { return Value(static_cast<long>(v)); }
  bool is_zero(const Value& v) const { return sgn(v) == 0; }
  Value combine(const Value& a, const Value& x, const Value& b, const Value& y) const { return a * x - b * y; }
  std::pair<Value, Value> multipliers(const Value& pivot_j, const Value& pivot_k) const { return {pivot_k, pivot_j}; }
  template <class Col>
  void normalize(Col& col) const {
    mpz_class g = 0;
    for (const auto& e : col) {
      g = ::gcd(g, e.second);
      if (g == 1) return;
    }
    if (g > 1)
      for (auto& e : col) e.second /= g;
  }
};

template <class Arith>
ColumnReduction reduce_columns_with(const std::vector<SparseColumn>& cols, std::size_t row_count,
                                    const std::vector<bool>& skip, const Arith& ar) {
  using Value = typename Arith::Value;
  using Col = std::vector<std::pair<std::uint32_t, Value>>;
  ColumnReduction out;
  std::vector<std::int64_t> pivot_of(row_count, -1);
  std::vector<Col> reduced(cols.size());
  Col work, merged;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (!skip.empty() && skip[j]) continue;
    work.clear();
    for (const auto& e : cols[j]) {
      Value v = ar.from_int(e.value);
      if (!ar.is_zero(v)) work.emplace_back(e.row, std::move(v));
    }
    while (!work.empty()) {
      std::uint32_t r = work.back().first;
      std::int64_t k = pivot_of[r];
      if (k < 0) {
        ar.normalize(work);
        pivot_of[r] = static_cast<std::int64_t>(j);
        out.pivot_rows.push_back(r);
        ++out.rank;
        reduced[j] = work;
        break;
      }
      const Col& other = reduced[static_cast<std::size_t>(k)];
      auto [a, b] = ar.multipliers(work.back().second, other.back().second);
      merged.clear();
      std::size_t p = 0, q = 0;
      const Value zero = ar.from_int(0);
      while (p < work.size() || q < other.size()) {
        if (q == other.size() || (p < work.size() && work[p].first < other[q].first)) {
          Value v = ar.combine(a, work[p].second, b, zero);
          if (!ar.is_zero(v)) merged.emplace_back(work[p].first, std::move(v));
          ++p;
        } else if (p == work.size() || other[q].first < work[p].first) {
          Value v = ar.combine(a, zero, b, other[q].second);
          if (!ar.is_zero(v)) merged.emplace_back(other[q].first, std::move(v));
          ++q;
        } else {
          Value v = ar.combine(a, work[p].second, b, other[q].second);
          if (!ar.is_zero(v)) merged.emplace_back(work[p].first, std::move(v));
          ++p;
          ++q;
        }
      }
      std::swap(work, merged);
      ar.normalize(work);
    }
  }
  return out;
}

}  // namespace detail

/// Rank of the matrix with the given columns over K, by left-to-right column
/// reduction. Columns flagged in `skip` are known to reduce to zero and are
/// not touched. Over Q the reduction is fraction-free on integers: it runs on
/// checked 64-bit integers first and restarts on GMP integers on overflow.
inline ColumnReduction reduce_columns(const std::vector<SparseColumn>& cols, std::size_t row_count, FieldSpec K,
                                      const std::vector<bool>& skip = {}) {
  if (!K.is_rational()) return detail::reduce_columns_with(cols, row_count, skip, detail::ModArith{K.characteristic()});
  try {
    return detail::reduce_columns_with(cols, row_count, skip, detail::CheckedIntArith{});
  } catch (const detail::Overflow&) {
    return detail::reduce_columns_with(cols, row_count, skip, detail::BigIntArith{});
  }
}

/// Dense Gaussian elimination rank, rationals via GMP or arithmetic mod p.
/// Kept separate from the sparse reduction so it can serve as a cross-check.
inline std::size_t dense_rank(const std::vector<std::vector<std::int64_t>>& m, FieldSpec K) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m.front().size();
  std::size_t rank = 0;
  if (K.is_rational()) {
    std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = static_cast<long>(m[i][j]);
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
      std::size_t piv = rank;
      while (piv < rows && sgn(a[piv][c]) == 0) ++piv;
      if (piv == rows) continue;
      std::swap(a[piv], a[rank]);
      for (std::size_t i = rank + 1; i < rows; ++i) {
        if (sgn(a[i][c]) == 0) continue;
        mpq_class f = a[i][c] / a[rank][c];
        for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
      }
      ++rank;
    }
    return rank;
  }
  const std::uint32_t p = K.characteristic();
  std::vector<std::vector<std::uint32_t>> a(rows, std::vector<std::uint32_t>(cols));
  detail::ModArith ar{p};
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = ar.from_int(m[i][j]);
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    std::uint32_t inv = detail::inv_mod(a[rank][c], p);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      std::uint32_t f = static_cast<std::uint32_t>(std::uint64_t{a[i][c]} * inv % p);
      for (std::size_t j = c; j < cols; ++j) a[i][j] = ar.combine(1, a[i][j], f, a[rank][j]);
    }
    ++rank;
  }
  return rank;
}

}  // namespace linpow

#endif  // LINPOW_LINALG_HPP
