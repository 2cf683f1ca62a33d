#pragma once

/**
 * @file charpoly.hpp
 * @brief Right/left characteristic polynomials p_{A,k}(z) = rdet_k(zI - A),
 * q_{A,k}(z) = ldet_k(zI - A), Cayley-Hamilton witnesses, the standard
 * polynomial S_4 and the symmetric Newton trace formulas for n = 2, 3.
 */

#include <cstddef>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "algebra_core.hpp"
#include "central_poly.hpp"
#include "errors.hpp"
#include "grassmann.hpp"
#include "matrix.hpp"
#include "permutation.hpp"
#include "symdet.hpp"

namespace ncdet {

template <Ring R>
CentralPoly<R> charpoly(const Matrix<R>& a, Side side, std::size_t k) {
  return kth_determinant(characteristic_matrix(a), side, k);
}

/// n * ((n-1)!)^(1 + n + ... + n^(k-1)): the leading coefficient of
/// p_{A,k} over a Lie nilpotent ring, and the commutative rdet_k prefactor.
inline Integer kth_leading_coefficient(std::size_t n, std::size_t k) {
  std::size_t exponent = 0;
  std::size_t pw = 1;
  for (std::size_t i = 0; i < k; ++i, pw *= n) exponent += pw;
  return Integer(n) * boost::multiprecision::pow(factorial(n - 1), static_cast<unsigned>(exponent));
}

/// Closed form of rdet_k = ldet_k over a commutative ring.
template <Ring R>
R commutative_kth_determinant(const Matrix<R>& a, std::size_t k) {
  const R det = commutative_det(a);
  std::size_t e = 1;
  for (std::size_t i = 1; i < k; ++i) e *= a.dim();
  R pw{Integer(1)};
  for (std::size_t i = 0; i < e; ++i) pw = pw * det;
  return R{kth_leading_coefficient(a.dim(), k)} * pw;
}

// ---------------------------------------------------------------------------
// Cayley-Hamilton with matrix coefficients

/// n(zI-A)(zI-A)* = p_{A,1}(z) I + C_0 + C_1 z + ... + C_n z^n, and the
/// left analogue with q_{A,1} and D_i. The residuals are
///   sum_i A^i (lambda_i I + C_i)   and   sum_i (mu_i I + D_i) A^i.
template <Ring R>
struct CHWitness {
  std::vector<R> lambdas;
  std::vector<R> mus;
  std::vector<Matrix<R>> right_defects;
  std::vector<Matrix<R>> left_defects;
  Matrix<R> right_residual;
  Matrix<R> left_residual;

  bool holds() const {
    if (!right_residual.is_zero() || !left_residual.is_zero()) return false;
    const std::size_t n = right_residual.dim();
    if (!(lambdas.back() == R{factorial(n)}) || !(mus.back() == R{factorial(n)})) return false;
    for (const auto& c : right_defects)
      if (!trace(c).is_zero()) return false;
    for (const auto& d : left_defects)
      if (!trace(d).is_zero()) return false;
    return true;
  }
};

template <Ring R>
CHWitness<R> cayley_hamilton_witness(const Matrix<R>& a) {
  const std::size_t n = a.dim();
  const auto m = characteristic_matrix(a);
  const auto adj = preadjoint(m);
  const auto right_prod = m * adj;
  const auto left_prod = adj * m;
  const CentralPoly<R> p = trace(right_prod);
  const CentralPoly<R> q = trace(left_prod);
  const Integer nn(n);
  const auto right = to_matrix_poly(scale(right_prod, nn));
  const auto left = to_matrix_poly(scale(left_prod, nn));

  CHWitness<R> w;
  for (std::size_t i = 0; i <= n; ++i) {
    w.lambdas.push_back(p.coefficient(i));
    w.mus.push_back(q.coefficient(i));
    const Matrix<R> ri = i < right.coefficients.size() ? right.coefficients[i] : Matrix<R>(n);
    const Matrix<R> li = i < left.coefficients.size() ? left.coefficients[i] : Matrix<R>(n);
    w.right_defects.push_back(ri - Matrix<R>::scalar(n, w.lambdas[i]));
    w.left_defects.push_back(li - Matrix<R>::scalar(n, w.mus[i]));
  }

  w.right_residual = Matrix<R>(n);
  w.left_residual = Matrix<R>(n);
  Matrix<R> apow = Matrix<R>::identity(n);
  for (std::size_t i = 0; i <= n; ++i) {
    w.right_residual = w.right_residual + apow * (Matrix<R>::scalar(n, w.lambdas[i]) + w.right_defects[i]);
    w.left_residual = w.left_residual + (Matrix<R>::scalar(n, w.mus[i]) + w.left_defects[i]) * apow;
    apow = apow * a;
  }
  return w;
}

// ---------------------------------------------------------------------------
// Cayley-Hamilton with scalar coefficients (Lie nilpotent index 2)

struct ScalarCHReport {
  CentralPoly<GrassmannElem> right_poly;
  CentralPoly<GrassmannElem> left_poly;
  /// sum_i A^i lambda_i and sum_i mu_i A^i.
  Matrix<GrassmannElem> right_residual;
  Matrix<GrassmannElem> left_residual;
  /// The other placement of the coefficients, reported for comparison only:
  /// sum_i lambda_i A^i and sum_i A^i mu_i.
  Matrix<GrassmannElem> right_residual_mirrored;
  Matrix<GrassmannElem> left_residual_mirrored;
  Integer expected_leading;
  bool leading_ok = false;

  bool right_holds() const { return right_residual.is_zero(); }
  bool left_holds() const { return left_residual.is_zero(); }
  bool holds() const { return right_holds() && left_holds() && leading_ok; }
};

/// Substitutes A into p_{A,k} (coefficients on the right) and q_{A,k}
/// (coefficients on the left). Restricted to n = 2 unless allow_larger.
template <Ring R>
ScalarCHReport scalar_ch_check(const Matrix<R>& a, std::size_t k = 2, bool allow_larger = false) {
  if constexpr (!std::is_same_v<R, GrassmannElem>) {
    throw NotApplicable("scalar Cayley-Hamilton check needs the Grassmann algebra");
  } else {
    const std::size_t n = a.dim();
    if (n != 2 && !allow_larger) throw DimensionError("scalar Cayley-Hamilton check is limited to n = 2");
    ScalarCHReport rep;
    rep.right_poly = charpoly(a, Side::right, k);
    rep.left_poly = charpoly(a, Side::left, k);
    std::size_t degree = 1;
    for (std::size_t i = 0; i < k; ++i) degree *= n;
    rep.expected_leading = kth_leading_coefficient(n, k);
    rep.leading_ok = rep.right_poly.length() == degree + 1 && rep.left_poly.length() == degree + 1 &&
                     rep.right_poly.leading() == GrassmannElem(rep.expected_leading) &&
                     rep.left_poly.leading() == GrassmannElem(rep.expected_leading);

    rep.right_residual = rep.left_residual = Matrix<R>(n);
    rep.right_residual_mirrored = rep.left_residual_mirrored = Matrix<R>(n);
    Matrix<R> apow = Matrix<R>::identity(n);
    for (std::size_t i = 0; i <= degree; ++i) {
      const R lambda = rep.right_poly.coefficient(i);
      const R mu = rep.left_poly.coefficient(i);
      rep.right_residual = rep.right_residual + scale_right(apow, lambda);
      rep.left_residual = rep.left_residual + scale_left(mu, apow);
      rep.right_residual_mirrored = rep.right_residual_mirrored + scale_left(lambda, apow);
      rep.left_residual_mirrored = rep.left_residual_mirrored + scale_right(apow, mu);
      apow = apow * a;
    }
    return rep;
  }
}

// ---------------------------------------------------------------------------
// Standard polynomial and Newton formulas

template <Ring R>
R standard_polynomial_4(const R& x1, const R& x2, const R& x3, const R& x4) {
  const R xs[4] = {x1, x2, x3, x4};
  Summation<R> sum;
  for_each_permutation(4, [&](const std::vector<std::uint8_t>& s, int sign) {
    R term = xs[s[0]] * xs[s[1]] * xs[s[2]] * xs[s[3]];
    if (sign > 0)
      sum.add(std::move(term));
    else
      sum.subtract(term);
  });
  return std::move(sum).result();
}

/// tr(A)^2 - tr(A^2), which equals sdet(A) for every 2x2 matrix.
template <Ring R>
R newton_sdet_2(const Matrix<R>& a) {
  if (a.dim() != 2) throw DimensionError("2x2 Newton formula needs n = 2");
  const R t = trace(a);
  return t * t - trace(a * a);
}

/// tr^3(A) - tr(A)tr(A^2) - tr(A tr(A) A) - tr(A^2)tr(A) + tr(A^3) + tr((A^T)^3),
/// evaluated with the factor order exactly as written; the middle scalar
/// of tr(A tr(A) A) is inserted as the matrix tr(A) I.
template <Ring R>
R newton_sdet_3(const Matrix<R>& a) {
  if (a.dim() != 3) throw DimensionError("3x3 Newton formula needs n = 3");
  const R t = trace(a);
  const Matrix<R> a2 = a * a;
  const Matrix<R> at = transpose(a);
  const R t2 = trace(a2);
  const R sandwiched = trace(a * Matrix<R>::scalar(3, t) * a);
  return t * t * t - t * t2 - sandwiched - t2 * t + trace(a2 * a) + trace(at * at * at);
}

/// 6z^3 - 6 tr(A) z^2 + 3(tr^2(A) - tr(A^2)) z - sdet(A).
template <Ring R>
CentralPoly<R> symmetric_charpoly_3_closed_form(const Matrix<R>& a) {
  if (a.dim() != 3) throw DimensionError("closed-form characteristic polynomial needs n = 3");
  const R t = trace(a);
  return CentralPoly<R>(std::vector<R>{-symmetric_determinant(a), R{Integer(3)} * (t * t - trace(a * a)),
                                       R{Integer(-6)} * t, R{Integer(6)}});
}

}  // namespace ncdet
