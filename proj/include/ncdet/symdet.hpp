#pragma once

/**
 * @file symdet.hpp
 * @brief Symmetric determinant, preadjoint, adjoint sequences and the k-th
 * right/left determinants of square matrices over a noncommutative ring.
 *
 *   sdet(A)      = sum_{a,b in S_n} sgn(a) sgn(b) A[a(1),b(1)] ... A[a(n),b(n)]
 *   A*[r,s]      = same sum restricted to a(s) = s, b(s) = r, factor s omitted
 *   P_1 = A*,  P_{j+1} = (A P_1 ... P_j)*      rdet_k(A) = tr(A P_1 ... P_k)
 *   Q_1 = A*,  Q_{j+1} = (Q_j ... Q_1 A)*      ldet_k(A) = tr(Q_k ... Q_1 A)
 *
 * Every product keeps the row order of the factors; nothing here assumes
 * commutativity.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "algebra_core.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "permutation.hpp"

namespace ncdet {

enum class Side { left, right };

inline const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }

struct SdetOptions {
  /// Negates the sign of the pair with this enumeration index. Used only by
  /// mutation tests that check the verification suites catch sign errors.
  std::optional<std::size_t> flip_sign_at_pair;
};

namespace detail {

struct SignedImages {
  std::vector<std::uint8_t> images;
  int sign;
};

inline std::vector<SignedImages> signed_images(std::size_t n) {
  std::vector<SignedImages> out;
  for_each_permutation(n, [&](const std::vector<std::uint8_t>& images, int sign) {
    out.push_back({images, sign});
  });
  return out;
}

/// Permutations of {0..n-1} fixing `pos -> value`, with signs from the full
/// inversion count, in lexicographic order of the free positions.
inline std::vector<SignedImages> pinned_images(std::size_t n, std::size_t pos, std::size_t value) {
  std::vector<std::uint8_t> values;
  for (std::size_t v = 0; v < n; ++v)
    if (v != value) values.push_back(static_cast<std::uint8_t>(v));
  std::vector<SignedImages> out;
  for_each_permutation(n - 1, [&](const std::vector<std::uint8_t>& sigma, int) {
    std::vector<std::uint8_t> images(n);
    for (std::size_t p = 0, q = 0; p < n; ++p) images[p] = p == pos ? static_cast<std::uint8_t>(value) : values[sigma[q++]];
    out.push_back({images, Permutation(images).sign()});
  });
  return out;
}

/// Sum over (row perm, col perm) pairs of sign * ordered product of
/// A[rows[t], cols[t]] for t != skip. Products of consecutive column
/// permutations share their prefix, so only the changed tail is recomputed.
template <Ring R>
R signed_pair_sum(const Matrix<R>& a, const std::vector<SignedImages>& rows,
                  const std::vector<SignedImages>& cols, std::optional<std::size_t> skip,
                  const SdetOptions& options = {}) {
  const std::size_t n = a.dim();
  std::vector<std::size_t> positions;
  for (std::size_t t = 0; t < n; ++t)
    if (!skip || t != *skip) positions.push_back(t);
  const std::size_t len = positions.size();

  Summation<R> sum;
  std::size_t pair_index = 0;
  std::vector<R> prefix(len + 1);
  prefix[0] = R{Integer(1)};
  for (const auto& alpha : rows) {
    const std::vector<std::uint8_t>* prev = nullptr;
    for (const auto& beta : cols) {
      std::size_t from = 0;
      if (prev) {
        while (from < len && (*prev)[positions[from]] == beta.images[positions[from]]) ++from;
      }
      for (std::size_t q = from; q < len; ++q) {
        const std::size_t t = positions[q];
        prefix[q + 1] = prefix[q].is_zero() ? R{} : prefix[q] * a(alpha.images[t], beta.images[t]);
      }
      prev = &beta.images;
      int sign = alpha.sign * beta.sign;
      if (options.flip_sign_at_pair && *options.flip_sign_at_pair == pair_index) sign = -sign;
      ++pair_index;
      if (prefix[len].is_zero()) continue;
      if (sign > 0)
        sum.add(prefix[len]);
      else
        sum.subtract(prefix[len]);
    }
  }
  return std::move(sum).result();
}

template <Ring R>
R trace_of_product(const Matrix<R>& x, const Matrix<R>& y) {
  if (x.dim() != y.dim()) throw DimensionError("matrix dimensions differ");
  Summation<R> sum;
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j)
      if (!x(i, j).is_zero() && !y(j, i).is_zero()) sum.add(x(i, j) * y(j, i));
  return std::move(sum).result();
}

inline Integer factorial(std::size_t n) {
  Integer f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned>(i);
  return f;
}

}  // namespace detail

using detail::factorial;
using detail::trace_of_product;

/// Double permutation sum over S_n x S_n; exact.
template <Ring R>
R symmetric_determinant(const Matrix<R>& a, const SdetOptions& options = {}) {
  if (a.dim() == 0) return R{Integer(1)};
  const auto perms = detail::signed_images(a.dim());
  return detail::signed_pair_sum(a, perms, perms, std::nullopt, options);
}

/// Preadjoint by its defining stabilized double sum, ((n-1)!)^2 pairs per entry.
template <Ring R>
Matrix<R> preadjoint(const Matrix<R>& a) {
  const std::size_t n = a.dim();
  if (n == 0) throw DimensionError("preadjoint needs n >= 1");
  Matrix<R> out(n);
  for (std::size_t s = 0; s < n; ++s) {
    const auto alphas = detail::pinned_images(n, s, s);
    for (std::size_t r = 0; r < n; ++r) {
      const auto betas = detail::pinned_images(n, s, r);
      out(r, s) = detail::signed_pair_sum(a, alphas, betas, s);
    }
  }
  return out;
}

/// Preadjoint through signed symmetric minors: A*[r,s] = (-1)^{r+s} sdet(A without row s, column r).
template <Ring R>
Matrix<R> preadjoint_via_minors(const Matrix<R>& a) {
  const std::size_t n = a.dim();
  if (n < 2) throw DimensionError("preadjoint via minors needs n >= 2");
  Matrix<R> out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      R m = symmetric_determinant(minor_matrix(a, s, r));
      out(r, s) = (r + s) % 2 == 0 ? m : -m;
    }
  return out;
}

template <Ring R>
struct AdjointSequence {
  Side side = Side::right;
  Matrix<R> base;
  /// P_1..P_k (right) or Q_1..Q_k (left).
  std::vector<Matrix<R>> matrices;
};

template <Ring R>
AdjointSequence<R> adjoint_sequence(const Matrix<R>& a, Side side, std::size_t k) {
  if (k < 1) throw InputError("adjoint sequence length must be at least 1");
  AdjointSequence<R> seq{side, a, {}};
  Matrix<R> running = a;  // A P_1 ... P_j, or Q_j ... Q_1 A
  for (std::size_t j = 0; j < k; ++j) {
    Matrix<R> next = preadjoint(running);
    if (j + 1 < k) running = side == Side::right ? running * next : next * running;
    seq.matrices.push_back(std::move(next));
  }
  return seq;
}

/// rdet_k(A) = tr(A P_1 ... P_k).
template <Ring R>
R rdet(const Matrix<R>& a, std::size_t k) {
  if (k < 1) throw InputError("k must be at least 1");
  Matrix<R> running = a;
  for (std::size_t j = 1;; ++j) {
    Matrix<R> p = preadjoint(running);
    if (j == k) return trace_of_product(running, p);
    running = running * p;
  }
}

/// ldet_k(A) = tr(Q_k ... Q_1 A).
template <Ring R>
R ldet(const Matrix<R>& a, std::size_t k) {
  if (k < 1) throw InputError("k must be at least 1");
  Matrix<R> running = a;
  for (std::size_t j = 1;; ++j) {
    Matrix<R> q = preadjoint(running);
    if (j == k) return trace_of_product(q, running);
    running = q * running;
  }
}

template <Ring R>
R kth_determinant(const Matrix<R>& a, Side side, std::size_t k) {
  return side == Side::right ? rdet(a, k) : ldet(a, k);
}

/// The k-th right adjoint n*P_1...P_k, or the left one n*Q_k...Q_1.
template <Ring R>
Matrix<R> kth_adjoint(const Matrix<R>& a, Side side, std::size_t k) {
  const auto seq = adjoint_sequence(a, side, k);
  Matrix<R> prod = Matrix<R>::identity(a.dim());
  for (const auto& m : seq.matrices) prod = side == Side::right ? prod * m : m * prod;
  return scale(prod, Integer(a.dim()));
}

/// scalar = tr(A A*) (right) or tr(A* A) (left); defect = n A A* - scalar I
/// (or n A* A - scalar I).
template <Ring R>
struct CommutatorDefect {
  R scalar;
  Matrix<R> defect;
};

template <Ring R>
CommutatorDefect<R> commutator_defect(const Matrix<R>& a, Side side) {
  const std::size_t n = a.dim();
  const Matrix<R> adj = preadjoint(a);
  const Matrix<R> prod = side == Side::right ? a * adj : adj * a;
  R s = trace(prod);
  Matrix<R> defect = scale(prod, Integer(n)) - Matrix<R>::scalar(n, s);
  if (!trace(defect).is_zero()) throw InvariantViolation("commutator defect has nonzero trace");
  return {std::move(s), std::move(defect)};
}

/// Exact inverse of an integer matrix with determinant +-1.
inline Matrix<IntElem> unimodular_inverse(const Matrix<IntElem>& t) {
  const IntElem det = commutative_det(t);
  if (det.value() != 1 && det.value() != -1) throw NotApplicable("conjugating matrix is not unimodular");
  return scale_left(det, commutative_adj(t));
}

template <Ring R>
Matrix<R> lift_integer_matrix(const Matrix<IntElem>& t) {
  return map_entries<R>(t, [](const IntElem& x) { return R{x.value()}; });
}

/// T^{-1} A T, with T's entries acting as central scalars.
template <Ring R>
Matrix<R> conjugate(const Matrix<R>& a, const Matrix<IntElem>& t) {
  if (a.dim() != t.dim()) throw DimensionError("conjugating matrix has the wrong dimension");
  return lift_integer_matrix<R>(unimodular_inverse(t)) * a * lift_integer_matrix<R>(t);
}

}  // namespace ncdet
