#pragma once

// Gaussian elimination over F_p, parameterised on the element representation
// so the subset scans can run on machine words whenever p fits.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ecag/arith.hpp"

namespace ecag::detail {

__extension__ using u128 = unsigned __int128;

struct WordField {
  using value_type = std::uint64_t;
  std::uint64_t p;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }
  value_type add(value_type a, value_type b) const {
    value_type r = a + b;
    return r >= p ? r - p : r;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<u128>(a) * b % p);
  }
  value_type inv(value_type a) const {
    value_type result = 1;
    value_type base = a;
    for (value_type e = p - 2; e > 0; e >>= 1) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
    }
    return result;
  }
  value_type from(const BigInt& v) const { return v.get_ui(); }
  BigInt to_big(value_type v) const { return BigInt(static_cast<unsigned long>(v)); }
};

struct BigField {
  using value_type = BigInt;
  BigInt p;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return a == 0; }
  value_type add(const value_type& a, const value_type& b) const {
    value_type r = a + b;
    if (r >= p) r -= p;
    return r;
  }
  value_type sub(const value_type& a, const value_type& b) const {
    value_type r = a - b;
    if (r < 0) r += p;
    return r;
  }
  value_type neg(const value_type& a) const { return a == 0 ? value_type(0) : value_type(p - a); }
  value_type mul(const value_type& a, const value_type& b) const { return mod(a * b, p); }
  value_type inv(const value_type& a) const {
    BigInt r;
    mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return r;
  }
  value_type from(const BigInt& v) const { return v; }
  BigInt to_big(const value_type& v) const { return v; }
};

template <class F>
struct Dense {
  using E = typename F::value_type;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<E> v;

  Dense() = default;
  Dense(std::size_t r, std::size_t c, E fill) : rows(r), cols(c), v(r * c, fill) {}
  E& at(std::size_t r, std::size_t c) { return v[r * cols + c]; }
  const E& at(std::size_t r, std::size_t c) const { return v[r * cols + c]; }
};

/// Reduced row echelon form in place. Returns the pivot column of each nonzero row.
template <class F>
std::vector<std::size_t> rref(const F& f, Dense<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && f.is_zero(m.at(sel, col))) ++sel;
    if (sel == m.rows) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
    }
    const auto scale = f.inv(m.at(row, col));
    for (std::size_t c = col; c < m.cols; ++c) m.at(row, c) = f.mul(m.at(row, c), scale);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row || f.is_zero(m.at(r, col))) continue;
      const auto factor = m.at(r, col);
      for (std::size_t c = col; c < m.cols; ++c) {
        m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(row, c)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
std::size_t rank(const F& f, Dense<F> m) {
  return rref(f, m).size();
}

template <class F>
Dense<F> transpose(const Dense<F>& m) {
  Dense<F> t(m.cols, m.rows, typename F::value_type{});
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
  return t;
}

/// a with a * m = v, or nothing when v is outside the row space.
template <class F>
std::optional<std::vector<typename F::value_type>> solve_left(const F& f, const Dense<F>& m,
                                                              const std::vector<typename F::value_type>& v) {
  // (m^T | v^T)
  Dense<F> aug(m.cols, m.rows + 1, f.zero());
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) aug.at(c, r) = m.at(r, c);
  for (std::size_t c = 0; c < m.cols; ++c) aug.at(c, m.rows) = v[c];
  const auto pivots = rref(f, aug);
  if (!pivots.empty() && pivots.back() == m.rows) return std::nullopt;
  std::vector<typename F::value_type> a(m.rows, f.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) a[pivots[i]] = aug.at(i, m.rows);
  return a;
}

/// Basis of { a : a * m = 0 }.
template <class F>
std::vector<std::vector<typename F::value_type>> left_nullspace(const F& f, const Dense<F>& m) {
  Dense<F> t = transpose(m);
  const auto pivots = rref(f, t);
  std::vector<bool> is_pivot(m.rows, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<typename F::value_type>> basis;
  for (std::size_t free = 0; free < m.rows; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::value_type> a(m.rows, f.zero());
    a[free] = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) a[pivots[i]] = f.neg(t.at(i, free));
    basis.push_back(std::move(a));
  }
  return basis;
}

/// Columns `cols` of m, in the given order.
template <class F>
Dense<F> select_columns(const Dense<F>& m, const std::vector<std::size_t>& cols) {
  Dense<F> out(m.rows, cols.size(), typename F::value_type{});
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) out.at(r, j) = m.at(r, cols[j]);
  return out;
}

/// Advances `comb` (strictly increasing indices < n) to the next k-subset in
/// lexicographic order. Returns false after the last one.
inline bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
  const std::size_t k = comb.size();
  for (std::size_t i = k; i-- > 0;) {
    if (comb[i] < n - k + i) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace ecag::detail
