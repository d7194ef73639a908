#pragma once

// Exact linear algebra over Z, Q and GF(2).
//
// Ranks over Q are computed on integer matrices: every rational row is
// rescaled by the lcm of its denominators (row scaling does not change the
// rank) and then reduced with fraction-free Bareiss elimination, so no
// intermediate value ever leaves Z.  A rank modulo a 62-bit prime is a cheap
// lower bound; it is accepted as the exact rank only when it meets an upper
// bound the caller can certify independently.

#include <gmpxx.h>

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rigidlab {

using Integer = mpz_class;
using Rational = mpq_class;

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) {
      std::swap((*this)(a, c), (*this)(b, c));
    }
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Largest prime below 2^62.
inline constexpr std::uint64_t kRankPrime = (std::uint64_t{1} << 62) - 57;

/// Rescales each row by the lcm of its denominators.
inline Matrix<Integer> integer_rows(const Matrix<Rational>& m) {
  Matrix<Integer> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (const auto& x : m.row(r)) {
      if (x.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& x = m(r, c);
      if (sgn(x) == 0) continue;
      Integer v = l / x.get_den();
      out(r, c) = v * x.get_num();
    }
  }
  return out;
}

/// Rank by fraction-free (Bareiss) elimination.  Every division is exact.
inline std::size_t bareiss_rank(Matrix<Integer> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  Integer prev = 1, tmp;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == rows) continue;
    m.swap_rows(rank, pivot);
    const Integer& p = m(rank, c);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const bool lead_zero = sgn(m(i, c)) == 0;
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer& x = m(i, j);
        if (lead_zero) {
          if (sgn(x) == 0) continue;
          mpz_mul(tmp.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
        } else {
          mpz_mul(tmp.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
          mpz_submul(tmp.get_mpz_t(), m(i, c).get_mpz_t(), m(rank, j).get_mpz_t());
        }
        mpz_divexact(x.get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(rank, c);
    ++rank;
  }
  return rank;
}

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t reduce(const Integer& x, std::uint64_t p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace detail

/// Rank of an integer matrix modulo the prime `p`.  Always <= the rank over Q.
inline std::size_t rank_mod_prime(const Matrix<Integer>& m, std::uint64_t p = kRankPrime) {
  using detail::mulmod;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = detail::reduce(m(r, c), p);

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[pivot * cols + j], a[rank * cols + j]);
    }
    const std::uint64_t inv = detail::powmod(a[rank * cols + c], p - 2, p);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const std::uint64_t lead = a[i * cols + c];
      if (lead == 0) continue;
      const std::uint64_t f = mulmod(lead, inv, p);
      for (std::size_t j = c; j < cols; ++j) {
        const std::uint64_t sub = mulmod(f, a[rank * cols + j], p);
        std::uint64_t& x = a[i * cols + j];
        x = x >= sub ? x - sub : x + p - sub;
      }
    }
    ++rank;
  }
  return rank;
}

struct RankResult {
  std::size_t rank = 0;
  /// "modular-certified" when the modular lower bound met the supplied upper
  /// bound, "bareiss" when exact elimination ran.
  std::string method;
};

/// Exact rank.  When `upper_bound` is given it must be a proven upper bound
/// on the rank; a modular rank reaching it is then exact.
inline RankResult rank_certified(const Matrix<Rational>& m,
                                 std::optional<std::size_t> upper_bound = std::nullopt) {
  Matrix<Integer> z = integer_rows(m);
  std::size_t bound = std::min(m.rows(), m.cols());
  if (upper_bound) bound = std::min(bound, *upper_bound);
  const std::size_t lower = rank_mod_prime(z);
  if (lower == bound) return {lower, "modular-certified"};
  return {bareiss_rank(std::move(z)), "bareiss"};
}

inline std::size_t rank_exact(const Matrix<Rational>& m) { return rank_certified(m).rank; }

/// Basis of the right nullspace {x : m x = 0} over Q, from the reduced row
/// echelon form.  One basis vector per free column.
inline std::vector<std::vector<Rational>> nullspace(Matrix<Rational> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == rows) continue;
    m.swap_rows(r, pivot);
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(cols, Rational(0));
    x[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = -m(i, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Dense matrix over GF(2), rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1U;
  }
  void flip(std::size_t r, std::size_t c) {
    bits_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64);
  }
  void set(std::size_t r, std::size_t c, bool v) {
    if (get(r, c) != v) flip(r, c);
  }

  std::size_t rank() const {
    std::vector<std::uint64_t> a = bits_;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
      const std::size_t w = c / 64;
      const std::uint64_t mask = std::uint64_t{1} << (c % 64);
      std::size_t pivot = rank;
      while (pivot < rows_ && !(a[pivot * words_ + w] & mask)) ++pivot;
      if (pivot == rows_) continue;
      if (pivot != rank) {
        for (std::size_t k = 0; k < words_; ++k)
          std::swap(a[pivot * words_ + k], a[rank * words_ + k]);
      }
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == rank || !(a[i * words_ + w] & mask)) continue;
        for (std::size_t k = w; k < words_; ++k) a[i * words_ + k] ^= a[rank * words_ + k];
      }
      ++rank;
    }
    return rank;
  }

  std::size_t nullity() const { return cols_ - rank(); }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace rigidlab
