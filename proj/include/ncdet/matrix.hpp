#pragma once

/**
 * @file matrix.hpp
 * @brief Dense square matrices over any ncdet::Ring.
 *
 * Products keep the left factor's entries on the left. Integers act as
 * central scalars through the ring's integer embedding.
 */

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "algebra_core.hpp"
#include "errors.hpp"

namespace ncdet {

/// Hard ceiling on matrix dimension; the symmetric determinant costs (n!)^2.
inline constexpr std::size_t kMaxDimension = 6;

template <Ring R>
class Matrix {
 public:
  using value_type = R;

  Matrix() = default;

  explicit Matrix(std::size_t n) : n_(check_dim(n)), entries_(n * n) {}

  Matrix(std::size_t n, std::vector<R> entries) : n_(check_dim(n)), entries_(std::move(entries)) {
    if (entries_.size() != n * n) throw DimensionError("matrix entry count does not match n*n");
  }

  /// Row-major nested initializer, e.g. Matrix<IntElem>::from_rows({{1,2},{3,4}}).
  static Matrix from_rows(const std::vector<std::vector<R>>& rows) {
    Matrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw DimensionError("matrix rows must have length n");
      for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix identity(std::size_t n) { return scalar(n, R{Integer(1)}); }

  static Matrix scalar(std::size_t n, const R& s) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
    return m;
  }

  std::size_t dim() const noexcept { return n_; }

  R& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  const std::vector<R>& entries() const noexcept { return entries_; }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  /// True iff off-diagonal entries vanish and all diagonal entries agree.
  bool is_scalar() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        if (i != j && !(*this)(i, j).is_zero()) return false;
        if (i == j && !((*this)(i, i) == (*this)(0, 0))) return false;
      }
    return true;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix r(a.n_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) r.entries_[i] = a.entries_[i] + b.entries_[i];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix r(a.n_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) r.entries_[i] = a.entries_[i] - b.entries_[i];
    return r;
  }

  friend Matrix operator-(const Matrix& a) {
    Matrix r(a.n_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) r.entries_[i] = -a.entries_[i];
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    const std::size_t n = a.n_;
    Matrix r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        R acc{};
        for (std::size_t k = 0; k < n; ++k) {
          if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
          acc = acc + a(i, k) * b(k, j);
        }
        r(i, j) = std::move(acc);
      }
    return r;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  static std::size_t check_dim(std::size_t n) {
    if (n > kMaxDimension)
      throw CapExceeded("matrix dimension " + std::to_string(n) + " exceeds the cap of " +
                        std::to_string(kMaxDimension));
    return n;
  }

  static void check_same(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) throw DimensionError("matrix dimensions differ");
  }

  std::size_t n_ = 0;
  std::vector<R> entries_;
};

template <Ring R>
Matrix<R> mat_mul(const Matrix<R>& a, const Matrix<R>& b) {
  return a * b;
}

/// s*A: every entry multiplied by s on the left.
template <Ring R>
Matrix<R> scale_left(const R& s, const Matrix<R>& a) {
  Matrix<R> r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = s * a(i, j);
  return r;
}

/// A*s: every entry multiplied by s on the right.
template <Ring R>
Matrix<R> scale_right(const Matrix<R>& a, const R& s) {
  Matrix<R> r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = a(i, j) * s;
  return r;
}

template <Ring R>
Matrix<R> scale(const Matrix<R>& a, const Integer& k) {
  return scale_left(R{k}, a);
}

template <Ring R>
R trace(const Matrix<R>& a) {
  R acc{};
  for (std::size_t i = 0; i < a.dim(); ++i) acc = acc + a(i, i);
  return acc;
}

template <Ring R>
Matrix<R> transpose(const Matrix<R>& a) {
  Matrix<R> r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = a(j, i);
  return r;
}

template <Ring R>
Matrix<R> power(const Matrix<R>& a, std::size_t e) {
  Matrix<R> r = Matrix<R>::identity(a.dim());
  for (std::size_t i = 0; i < e; ++i) r = r * a;
  return r;
}

/// Deletes `row` and `col` (0-based).
template <Ring R>
Matrix<R> minor_matrix(const Matrix<R>& a, std::size_t row, std::size_t col) {
  const std::size_t n = a.dim();
  if (n == 0 || row >= n || col >= n) throw DimensionError("minor index out of range");
  Matrix<R> m(n - 1);
  for (std::size_t i = 0, mi = 0; i < n; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, mj = 0; j < n; ++j) {
      if (j == col) continue;
      m(mi, mj++) = a(i, j);
    }
    ++mi;
  }
  return m;
}

/// Entry-wise ring map, e.g. lifting an integer matrix into another ring.
template <Ring To, Ring From, class F>
Matrix<To> map_entries(const Matrix<From>& a, F&& f) {
  Matrix<To> r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = f(a(i, j));
  return r;
}

template <Ring R>
std::string to_string(const Matrix<R>& a) {
  std::string out;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    out += "[";
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (j) out += ", ";
      out += to_string(a(i, j));
    }
    out += "]\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Supermatrices

/// Block split {1..t} | {t+1..n} with 1 <= t <= n-1.
class SupermatrixProfile {
 public:
  SupermatrixProfile(std::size_t n, std::size_t t) : n_(n), t_(t) {
    if (n < 2 || t < 1 || t > n - 1) throw DimensionError("supermatrix split needs 1 <= t <= n-1");
  }
  std::size_t n() const noexcept { return n_; }
  std::size_t t() const noexcept { return t_; }

  /// Expected parity of entry (i, j), 0-based: even on diagonal blocks.
  int parity(std::size_t i, std::size_t j) const { return (i < t_) == (j < t_) ? 0 : 1; }

 private:
  std::size_t n_;
  std::size_t t_;
};

/// Diagonal blocks purely even, off-diagonal blocks purely odd. Zero counts
/// as homogeneous of both parities.
template <Ring R>
bool is_supermatrix(const Matrix<R>& a, const SupermatrixProfile& profile) {
  if constexpr (!ring_traits<R>::is_z2_graded) {
    throw NotApplicable("supermatrix test needs a Z2-graded ring");
  } else {
    if (a.dim() != profile.n()) throw DimensionError("supermatrix profile dimension mismatch");
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) {
        const bool ok = profile.parity(i, j) == 0 ? a(i, j).is_even() : a(i, j).is_odd();
        if (!ok) return false;
      }
    return true;
  }
}

// ---------------------------------------------------------------------------
// Classical oracles (commutative rings only)

template <Ring R>
R commutative_det(const Matrix<R>& a) {
  if constexpr (!ring_traits<R>::is_commutative) {
    throw NotApplicable("classical determinant needs a commutative ring");
  } else {
    const std::size_t n = a.dim();
    if (n == 0) return R{Integer(1)};
    if (n == 1) return a(0, 0);
    R acc{};
    for (std::size_t j = 0; j < n; ++j) {
      if (a(0, j).is_zero()) continue;
      R term = a(0, j) * commutative_det(minor_matrix(a, 0, j));
      acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  }
}

/// Classical adjugate: transposed cofactor matrix.
template <Ring R>
Matrix<R> commutative_adj(const Matrix<R>& a) {
  if constexpr (!ring_traits<R>::is_commutative) {
    throw NotApplicable("classical adjugate needs a commutative ring");
  } else {
    const std::size_t n = a.dim();
    Matrix<R> r(n);
    if (n == 1) {
      r(0, 0) = R{Integer(1)};
      return r;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        R c = commutative_det(minor_matrix(a, j, i));
        r(i, j) = ((i + j) % 2 == 0) ? c : -c;
      }
    return r;
  }
}

}  // namespace ncdet
