#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "algebra_core.hpp"
#include "matrix.hpp"

namespace ncdet {

/// Polynomial in one central indeterminate z with coefficients in R.
/// Itself a ring, so matrices over R[z] reuse every matrix algorithm.
template <Ring R>
class CentralPoly {
 public:
  CentralPoly() = default;
  explicit CentralPoly(const Integer& c) : coeffs_{R{c}} { trim(); }
  explicit CentralPoly(long long c) : CentralPoly(Integer(c)) {}
  explicit CentralPoly(int c) : CentralPoly(Integer(c)) {}
  explicit CentralPoly(R c) : coeffs_{std::move(c)} { trim(); }
  explicit CentralPoly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// c * z^degree.
  static CentralPoly monomial(R c, std::size_t degree) {
    std::vector<R> v(degree + 1);
    v[degree] = std::move(c);
    return CentralPoly(std::move(v));
  }
  static CentralPoly z() { return monomial(R{Integer(1)}, 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Number of stored coefficients (degree + 1; 0 for the zero polynomial).
  std::size_t length() const noexcept { return coeffs_.size(); }
  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const std::vector<R>& coefficients() const noexcept { return coeffs_; }

  R coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : R{}; }
  const R& leading() const { return coeffs_.back(); }

  friend CentralPoly operator+(const CentralPoly& a, const CentralPoly& b) { return combine(a, b, false); }
  friend CentralPoly operator-(const CentralPoly& a, const CentralPoly& b) { return combine(a, b, true); }
  friend CentralPoly operator-(const CentralPoly& a) {
    CentralPoly r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend CentralPoly operator*(const CentralPoly& a, const CentralPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return CentralPoly(std::move(out));
  }

  friend bool operator==(const CentralPoly&, const CentralPoly&) = default;

  /// Descending degree; non-constant ring coefficients are parenthesized.
  friend std::string to_string(const CentralPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = p.coeffs_.size(); i-- > 0;) {
      const R& c = p.coeffs_[i];
      if (c.is_zero()) continue;
      std::string body = to_string(c);
      const bool simple = is_integer_constant(c);
      bool negative = false;
      if (simple && body.front() == '-') {
        negative = true;
        body.erase(0, 1);
      }
      if (first)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      first = false;
      if (i == 0) {
        out += simple ? body : "(" + body + ")";
        continue;
      }
      if (!simple)
        out += "(" + body + ")*";
      else if (body != "1")
        out += body + "*";
      out += i == 1 ? "z" : "z^" + std::to_string(i);
    }
    return out;
  }

 private:
  static bool is_integer_constant(const R& c) {
    const std::string s = to_string(c);
    std::size_t i = s.front() == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  }

  static CentralPoly combine(const CentralPoly& a, const CentralPoly& b, bool subtract) {
    std::vector<R> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (i < a.coeffs_.size()) out[i] = a.coeffs_[i];
      if (i < b.coeffs_.size()) out[i] = subtract ? out[i] - b.coeffs_[i] : out[i] + b.coeffs_[i];
    }
    return CentralPoly(std::move(out));
  }

  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

template <Ring R>
struct ring_traits<CentralPoly<R>> {
  static constexpr bool is_commutative = ring_traits<R>::is_commutative;
  static constexpr bool is_z2_graded = false;
};

/// Matrix polynomial stored as its z-degree slices M_0 + M_1 z + ... .
template <Ring R>
struct MatrixPoly {
  std::vector<Matrix<R>> coefficients;

  std::size_t dim() const { return coefficients.empty() ? 0 : coefficients.front().dim(); }
};

template <Ring R>
MatrixPoly<R> to_matrix_poly(const Matrix<CentralPoly<R>>& m) {
  const std::size_t n = m.dim();
  std::size_t len = 0;
  for (const auto& e : m.entries()) len = std::max(len, e.length());
  MatrixPoly<R> out;
  out.coefficients.assign(std::max<std::size_t>(len, 1), Matrix<R>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t d = 0; d < m(i, j).length(); ++d) out.coefficients[d](i, j) = m(i, j).coefficients()[d];
  return out;
}

template <Ring R>
Matrix<CentralPoly<R>> from_matrix_poly(const MatrixPoly<R>& p) {
  const std::size_t n = p.dim();
  Matrix<CentralPoly<R>> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<R> coeffs;
      for (const auto& c : p.coefficients) coeffs.push_back(c(i, j));
      out(i, j) = CentralPoly<R>(std::move(coeffs));
    }
  return out;
}

/// zI - A as a matrix over R[z].
template <Ring R>
Matrix<CentralPoly<R>> characteristic_matrix(const Matrix<R>& a) {
  const std::size_t n = a.dim();
  Matrix<CentralPoly<R>> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = -CentralPoly<R>(a(i, j));
      if (i == j) out(i, j) = out(i, j) + CentralPoly<R>::z();
    }
  return out;
}

}  // namespace ncdet
