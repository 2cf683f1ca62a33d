#pragma once

/**
 * @file verify.hpp
 * @brief Named verification suites. Each suite recomputes one family of
 * determinant identities exactly and records a pass/fail line per check.
 *
 * Suite names follow the numbering of the identities they verify
 * (thm2_1 ... cor4_5) plus commutative_collapse; "all" runs every suite
 * in definition order. Every random draw comes from one mt19937_64
 * seeded from VerifyConfig::seed.
 */

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "algebra_core.hpp"
#include "central_poly.hpp"
#include "charpoly.hpp"
#include "errors.hpp"
#include "freealg.hpp"
#include "grassmann.hpp"
#include "matrix.hpp"
#include "random.hpp"
#include "symdet.hpp"

namespace ncdet {

struct VerifyConfig {
  /// Restricts suites that sweep several dimensions to this one.
  std::optional<std::size_t> n;
  /// Largest k for suites sweeping k = 1..k.
  std::size_t k = 2;
  /// Restricts supermatrix suites to this block split.
  std::optional<std::size_t> t;
  /// Grassmann rank; unset means the suite default (6, or 4 for thm2_7).
  std::optional<int> rank;
  std::size_t trials = 20;
  std::uint64_t seed = kDefaultSeed;
  /// Forwarded to every symmetric_determinant call (mutation testing).
  SdetOptions sdet;
};

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
  double elapsed_ms = 0;
};

struct SuiteReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return !checks.empty();
  }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "thm2_1", "thm2_2", "thm2_3", "thm2_4",  "thm2_5", "thm2_6", "thm2_7", "thm3_1", "cor3_2",
      "prop3_3", "cor3_4", "prop4_1", "thm4_2", "rem4_3", "thm4_4", "cor4_5", "commutative_collapse"};
  return names;
}

namespace detail {

class SuiteRunner {
 public:
  SuiteRunner(std::string suite, const VerifyConfig& cfg, SuiteReport& report)
      : suite_(std::move(suite)), cfg_(cfg), report_(report) {}

  /// Runs `body`, which returns pass/fail and may fill `detail`.
  void check(const std::string& name, const std::function<bool(std::string&)>& body) {
    CheckResult r{suite_, name, false, {}, 0};
    const auto start = std::chrono::steady_clock::now();
    try {
      r.passed = body(r.detail);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report_.checks.push_back(std::move(r));
  }

  std::vector<std::size_t> dims(std::vector<std::size_t> defaults) const {
    if (cfg_.n) return {*cfg_.n};
    return defaults;
  }

  const VerifyConfig& cfg() const { return cfg_; }

 private:
  std::string suite_;
  const VerifyConfig& cfg_;
  SuiteReport& report_;
};

inline std::string nstr(std::size_t n) { return "n=" + std::to_string(n); }

template <Ring R>
std::string residual_detail(const R& residual) {
  if (residual.is_zero()) return "residual 0";
  const std::string s = to_string(residual);
  return "residual " + (s.size() > 160 ? s.substr(0, 160) + " ..." : s);
}

inline bool all_entries_in_commutator_span(const Matrix<FreePoly>& m) {
  for (const auto& e : m.entries())
    if (!in_commutator_span(e)) return false;
  return true;
}

/// Shear, bidiagonal and signed-cycle unimodular matrices of size n.
inline std::vector<Matrix<IntElem>> unimodular_samples(std::size_t n) {
  std::vector<Matrix<IntElem>> out;
  Matrix<IntElem> shear = Matrix<IntElem>::identity(n);
  shear(0, 1) = IntElem(1);
  out.push_back(shear);
  Matrix<IntElem> bidiag = Matrix<IntElem>::identity(n);
  for (std::size_t i = 1; i < n; ++i) bidiag(i, i - 1) = IntElem(i % 2 == 1 ? 2 : -1);
  out.push_back(bidiag);
  Matrix<IntElem> cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle(i, (i + 1) % n) = IntElem(i == 0 ? -1 : 1);
  out.push_back(cycle);
  return out;
}

// ---------------------------------------------------------------------------

inline void suite_thm2_1(SuiteRunner& run) {
  for (std::size_t n : run.dims({2, 3})) {
    const auto a = generic_matrix(n);
    const auto adj = preadjoint(a);
    const auto ts = unimodular_samples(n);
    for (std::size_t ti = 0; ti < ts.size(); ++ti) {
      const auto& t = ts[ti];
      const std::string tag = nstr(n) + ", T#" + std::to_string(ti + 1);
      const auto c = conjugate(a, t);
      run.check("tr(T^-1 A T) = tr(A), " + tag, [&](std::string& d) {
        d = residual_detail(trace(c) - trace(a));
        return trace(c) == trace(a);
      });
      run.check("(T^-1 A T)* = T^-1 A* T, " + tag, [&](std::string&) { return preadjoint(c) == conjugate(adj, t); });
      for (std::size_t k = 1; k <= run.cfg().k; ++k) {
        run.check("rdet_" + std::to_string(k) + " invariant, " + tag, [&](std::string& d) {
          const auto diff = rdet(c, k) - rdet(a, k);
          d = residual_detail(diff);
          return diff.is_zero();
        });
        run.check("ldet_" + std::to_string(k) + " invariant, " + tag, [&](std::string& d) {
          const auto diff = ldet(c, k) - ldet(a, k);
          d = residual_detail(diff);
          return diff.is_zero();
        });
      }
    }
  }
}

inline void suite_thm2_2(SuiteRunner& run) {
  for (std::size_t n : run.dims({2, 3})) {
    const auto a = generic_matrix(n);
    for (Side side : {Side::right, Side::left}) {
      run.check(std::string(to_string(side)) + " defect: trace 0, entries in [R,R], " + nstr(n),
                [&](std::string& d) {
                  const auto cd = commutator_defect(a, side);
                  const bool scalar_ok = cd.scalar == symmetric_determinant(a, run.cfg().sdet);
                  const bool trace_ok = trace(cd.defect).is_zero();
                  const bool span_ok = all_entries_in_commutator_span(cd.defect);
                  d = std::string("scalar=sdet ") + (scalar_ok ? "yes" : "no") + ", trace " +
                      (trace_ok ? "0" : "nonzero") + ", [R,R] " + (span_ok ? "yes" : "no");
                  return scalar_ok && trace_ok && span_ok;
                });
    }
  }
}

inline void suite_thm2_3(SuiteRunner& run) {
  const int rank = run.cfg().rank.value_or(GrassmannElem::kDefaultRank);
  const std::size_t k = run.cfg().k;
  std::mt19937_64 rng(run.cfg().seed);
  for (std::size_t n : run.dims({2, 3})) {
    std::vector<Matrix<GrassmannElem>> samples;
    for (std::size_t i = 0; i < run.cfg().trials; ++i) samples.push_back(random_grassmann_matrix(n, rank, rng));
    const std::string tag = nstr(n) + ", k=" + std::to_string(k) + ", rank " + std::to_string(rank) + ", " +
                            std::to_string(samples.size()) + " trials";
    run.check("n A P_1...P_k = rdet_k(A) I, " + tag, [&](std::string& d) {
      for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto prod = samples[i] * kth_adjoint(samples[i], Side::right, k);
        if (!prod.is_scalar() || !(prod(0, 0) == rdet(samples[i], k))) {
          d = "trial " + std::to_string(i) + " is not rdet_k(A) I";
          return false;
        }
      }
      return true;
    });
    run.check("n Q_k...Q_1 A = ldet_k(A) I, " + tag, [&](std::string& d) {
      for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto prod = kth_adjoint(samples[i], Side::left, k) * samples[i];
        if (!prod.is_scalar() || !(prod(0, 0) == ldet(samples[i], k))) {
          d = "trial " + std::to_string(i) + " is not ldet_k(A) I";
          return false;
        }
      }
      return true;
    });
  }
}

inline std::vector<SupermatrixProfile> super_profiles(const SuiteRunner& run) {
  std::vector<SupermatrixProfile> out;
  for (std::size_t n : run.dims({2, 3}))
    for (std::size_t t = 1; t < n; ++t)
      if (!run.cfg().t || *run.cfg().t == t) out.emplace_back(n, t);
  return out;
}

inline void suite_thm2_4(SuiteRunner& run) {
  const int rank = run.cfg().rank.value_or(GrassmannElem::kDefaultRank);
  std::mt19937_64 rng(run.cfg().seed);
  for (const auto& profile : super_profiles(run)) {
    std::vector<Matrix<GrassmannElem>> samples;
    for (std::size_t i = 0; i < run.cfg().trials; ++i) samples.push_back(random_supermatrix(profile, rank, rng));
    const std::string tag = nstr(profile.n()) + ", t=" + std::to_string(profile.t()) + ", " +
                            std::to_string(samples.size()) + " trials";
    run.check("A* is a supermatrix, " + tag, [&](std::string& d) {
      for (std::size_t i = 0; i < samples.size(); ++i)
        if (!is_supermatrix(preadjoint(samples[i]), profile)) {
          d = "trial " + std::to_string(i);
          return false;
        }
      return true;
    });
    for (std::size_t k = 1; k <= run.cfg().k; ++k) {
      run.check("rdet_" + std::to_string(k) + ", ldet_" + std::to_string(k) + " even, " + tag, [&](std::string& d) {
        for (std::size_t i = 0; i < samples.size(); ++i)
          if (!rdet(samples[i], k).is_even() || !ldet(samples[i], k).is_even()) {
            d = "trial " + std::to_string(i);
            return false;
          }
        return true;
      });
    }
  }
}

inline void suite_thm2_5(SuiteRunner& run) {
  const int rank = run.cfg().rank.value_or(GrassmannElem::kDefaultRank);
  std::mt19937_64 rng(run.cfg().seed);
  for (const auto& profile : super_profiles(run)) {
    std::vector<Matrix<GrassmannElem>> samples;
    for (std::size_t i = 0; i < run.cfg().trials; ++i) samples.push_back(random_supermatrix(profile, rank, rng));
    for (std::size_t k = 1; k <= run.cfg().k; ++k) {
      const std::string tag = nstr(profile.n()) + ", t=" + std::to_string(profile.t()) + ", k=" + std::to_string(k) +
                              ", " + std::to_string(samples.size()) + " trials";
      run.check("p_{A,k}, q_{A,k} have even coefficients, " + tag, [&](std::string& d) {
        for (std::size_t i = 0; i < samples.size(); ++i)
          for (Side side : {Side::right, Side::left}) {
            const auto poly = charpoly(samples[i], side, k);
            for (const auto& c : poly.coefficients())
              if (!c.is_even()) {
                d = "trial " + std::to_string(i) + ", " + to_string(side);
                return false;
              }
          }
        return true;
      });
    }
  }
}

inline void suite_thm2_6(SuiteRunner& run) {
  for (std::size_t n : run.dims({2, 3})) {
    run.check("matrix-coefficient Cayley-Hamilton identities, " + nstr(n), [&](std::string& d) {
      const auto a = generic_matrix(n);
      const auto w = cayley_hamilton_witness(a);
      bool span_ok = true;
      for (const auto& c : w.right_defects) span_ok = span_ok && all_entries_in_commutator_span(c);
      for (const auto& c : w.left_defects) span_ok = span_ok && all_entries_in_commutator_span(c);
      const bool lead_ok = w.lambdas.back() == FreePoly(factorial(n));
      d = std::string("right residual ") + (w.right_residual.is_zero() ? "0" : "nonzero") + ", left residual " +
          (w.left_residual.is_zero() ? "0" : "nonzero") + ", lambda_n = " + to_string(w.lambdas.back()) +
          ", defects in [R,R] " + (span_ok ? "yes" : "no");
      return w.holds() && span_ok && lead_ok;
    });
  }
}

inline void suite_thm2_7(SuiteRunner& run) {
  const int rank = run.cfg().rank.value_or(4);
  std::mt19937_64 rng(run.cfg().seed);
  const std::size_t n = 2;
  const std::size_t k = 2;
  std::vector<Matrix<GrassmannElem>> samples;
  samples.push_back(Matrix<GrassmannElem>(n));
  for (std::size_t i = 0; i < run.cfg().trials; ++i) samples.push_back(random_grassmann_matrix(n, rank, rng));
  run.check("scalar-coefficient Cayley-Hamilton, n=2, k=2, rank " + std::to_string(rank) + ", zero matrix + " +
                std::to_string(run.cfg().trials) + " trials",
            [&](std::string& d) {
              std::size_t mirrored_right = 0, mirrored_left = 0;
              for (std::size_t i = 0; i < samples.size(); ++i) {
                const auto rep = scalar_ch_check(samples[i], k);
                if (!rep.holds()) {
                  d = "sample " + std::to_string(i) + ": right " + (rep.right_holds() ? "ok" : "fails") + ", left " +
                      (rep.left_holds() ? "ok" : "fails") + ", leading " + (rep.leading_ok ? "ok" : "wrong");
                  return false;
                }
                mirrored_right += rep.right_residual_mirrored.is_zero();
                mirrored_left += rep.left_residual_mirrored.is_zero();
              }
              d = "leading coefficient " + kth_leading_coefficient(n, k).str() +
                  "; mirrored placements vanish in " + std::to_string(mirrored_right) + "/" +
                  std::to_string(mirrored_left) + " of " + std::to_string(samples.size());
              return true;
            });
}

inline void suite_thm3_1(SuiteRunner& run) {
  for (std::size_t n : run.dims({2, 3, 4})) {
    run.check("tr(A A*) = sdet(A) = tr(A* A), generic " + nstr(n), [&](std::string& d) {
      const auto a = generic_matrix(n);
      const auto s = symmetric_determinant(a, run.cfg().sdet);
      const auto adj = preadjoint(a);
      const auto r = trace(a * adj);
      const auto l = trace(adj * a);
      d = std::to_string(s.size()) + " terms; " + residual_detail(r - s) + " / " + residual_detail(l - s);
      return r == s && l == s;
    });
  }
}

inline void suite_cor3_2(SuiteRunner& run) {
  for (std::size_t n : run.dims({2, 3})) {
    run.check("p_{A,1} = q_{A,1}, generic " + nstr(n), [&](std::string& d) {
      const auto a = generic_matrix(n);
      const auto p = charpoly(a, Side::right, 1);
      const auto q = charpoly(a, Side::left, 1);
      const auto s = symmetric_determinant(characteristic_matrix(a), run.cfg().sdet);
      d = "degree " + std::to_string(p.degree());
      return p == q && p == s;
    });
  }
}

inline void suite_prop3_3(SuiteRunner& run) {
  run.check("rdet_2(A) - ldet_2(A) = S_4(a,b,c,d), generic n=2", [&](std::string& d) {
    const auto a = generic_matrix(2);
    const auto s4 = standard_polynomial_4(a(0, 0), a(0, 1), a(1, 0), a(1, 1));
    const auto residual = rdet(a, 2) - ldet(a, 2) - s4;
    d = "S_4 has " + std::to_string(s4.size()) + " terms; " + residual_detail(residual);
    return residual.is_zero() && s4.size() == 24;
  });
}

inline void suite_cor3_4(SuiteRunner& run) {
  run.check("p_{A,2} - q_{A,2} = S_4(a,b,c,d) constant, generic n=2", [&](std::string& d) {
    const auto a = generic_matrix(2);
    const auto diff = charpoly(a, Side::right, 2) - charpoly(a, Side::left, 2);
    const auto s4 = standard_polynomial_4(a(0, 0), a(0, 1), a(1, 0), a(1, 1));
    d = "difference has z-degree " + std::to_string(diff.degree());
    return diff == CentralPoly<FreePoly>(s4);
  });
}

inline void suite_prop4_1(SuiteRunner& run) {
  run.check("tr^2(A) - tr(A^2) = sdet(A), generic n=2", [&](std::string& d) {
    const auto a = generic_matrix(2);
    const auto residual = newton_sdet_2(a) - symmetric_determinant(a, run.cfg().sdet);
    d = residual_detail(residual);
    return residual.is_zero();
  });
}

inline void suite_thm4_2(SuiteRunner& run) {
  run.check("symmetric 3x3 Newton trace formula = sdet(A), generic n=3", [&](std::string& d) {
    const auto a = generic_matrix(3);
    const auto s = symmetric_determinant(a, run.cfg().sdet);
    const auto residual = newton_sdet_3(a) - s;
    d = "sdet has " + std::to_string(s.size()) + " terms; " + residual_detail(residual);
    return residual.is_zero() && s.size() == 36;
  });
}

inline void suite_rem4_3(SuiteRunner& run) {
  for (std::size_t n : run.dims({2, 3, 4})) {
    run.check("tr((A^T)^2) = tr(A^2), generic " + nstr(n), [&](std::string& d) {
      const auto a = generic_matrix(n);
      const auto at = transpose(a);
      const auto residual = trace(at * at) - trace(a * a);
      d = residual_detail(residual);
      return residual.is_zero();
    });
  }
  run.check("tr((A^T)^3) != tr(A^3), generic n=2", [&](std::string& d) {
    const auto a = generic_matrix(2);
    const auto at = transpose(a);
    const auto diff = trace(at * at * at) - trace(a * a * a);
    d = "difference " + to_string(diff);
    return !diff.is_zero();
  });
}

inline void suite_thm4_4(SuiteRunner& run) {
  run.check("p_{A,1} = 6z^3 - 6tr(A)z^2 + 3(tr^2(A) - tr(A^2))z - sdet(A), generic n=3", [&](std::string&) {
    const auto a = generic_matrix(3);
    const auto closed = CentralPoly<FreePoly>(std::vector<FreePoly>{
        -symmetric_determinant(a, run.cfg().sdet),
        FreePoly(3) * (trace(a) * trace(a) - trace(a * a)), FreePoly(-6) * trace(a), FreePoly(6)});
    return charpoly(a, Side::right, 1) == closed && charpoly(a, Side::left, 1) == closed;
  });
}

inline void suite_cor4_5(SuiteRunner& run) {
  run.check("3x3 Cayley-Hamilton with lambda = (-sdet, 3(tr^2-tr(A^2)), -6tr, 6), generic n=3",
            [&](std::string& d) {
              const auto a = generic_matrix(3);
              const auto w = cayley_hamilton_witness(a);
              const FreePoly t = trace(a);
              const std::vector<FreePoly> expected = {-symmetric_determinant(a, run.cfg().sdet),
                                                      FreePoly(3) * (t * t - trace(a * a)), FreePoly(-6) * t,
                                                      FreePoly(6)};
              const bool lambdas_ok = w.lambdas == expected && w.mus == expected;
              d = std::string("lambdas ") + (lambdas_ok ? "match" : "differ") + ", residuals " +
                  (w.right_residual.is_zero() && w.left_residual.is_zero() ? "0" : "nonzero");
              return lambdas_ok && w.holds();
            });
}

inline void suite_commutative_collapse(SuiteRunner& run) {
  std::mt19937_64 rng(run.cfg().seed);
  const std::size_t trials = run.cfg().trials;
  for (std::size_t n : run.dims({2, 3, 4})) {
    std::vector<Matrix<IntElem>> samples;
    for (std::size_t i = 0; i < trials; ++i) samples.push_back(random_int_matrix(n, rng));
    const std::string tag = nstr(n) + ", " + std::to_string(trials) + " random integer matrices";
    run.check("sdet = n! det, " + tag, [&](std::string&) {
      for (const auto& a : samples)
        if (!(symmetric_determinant(a, run.cfg().sdet) == IntElem(factorial(n)) * commutative_det(a))) return false;
      return true;
    });
    run.check("A* = (n-1)! adj(A), " + tag, [&](std::string&) {
      for (const auto& a : samples)
        if (!(preadjoint(a) == scale(commutative_adj(a), factorial(n - 1)))) return false;
      return true;
    });
    run.check("rdet_1 = ldet_1 = n! det, " + tag, [&](std::string&) {
      for (const auto& a : samples) {
        const auto expected = commutative_kth_determinant(a, 1);
        if (!(rdet(a, 1) == expected) || !(ldet(a, 1) == expected)) return false;
      }
      return true;
    });
    if (n == 2) {
      run.check("rdet_2 = ldet_2 = 2 det^2, " + tag, [&](std::string&) {
        for (const auto& a : samples) {
          const auto det = commutative_det(a);
          const IntElem expected = IntElem(2) * det * det;
          if (!(rdet(a, 2) == expected) || !(ldet(a, 2) == expected)) return false;
        }
        return true;
      });
    }
    run.check("tr(AB) = tr(BA), " + tag, [&](std::string&) {
      for (std::size_t i = 0; i + 1 < samples.size(); ++i)
        if (!(trace(samples[i] * samples[i + 1]) == trace(samples[i + 1] * samples[i]))) return false;
      return true;
    });
    if (n == 3) {
      run.check("Newton collapse: tr(A)tr(A^2) = tr(A tr(A) A) = tr(A^2)tr(A), tr((A^T)^3) = tr(A^3), sdet = 6 det, " +
                    tag,
                [&](std::string&) {
                  for (const auto& a : samples) {
                    const IntElem t = trace(a);
                    const IntElem t2 = trace(a * a);
                    const IntElem mid = trace(a * Matrix<IntElem>::scalar(3, t) * a);
                    const auto at = transpose(a);
                    if (!(t * t2 == mid) || !(t2 * t == mid)) return false;
                    if (!(trace(at * at * at) == trace(a * a * a))) return false;
                    if (!(newton_sdet_3(a) == IntElem(6) * commutative_det(a))) return false;
                  }
                  return true;
                });
    }
  }
}

}  // namespace detail

/// Runs one suite (or "all"). Throws InputError for an unknown suite name.
inline SuiteReport run_verify(const std::string& suite, const VerifyConfig& cfg = {}) {
  using Fn = void (*)(detail::SuiteRunner&);
  static const std::vector<std::pair<std::string, Fn>> table = {
      {"thm2_1", detail::suite_thm2_1},   {"thm2_2", detail::suite_thm2_2},
      {"thm2_3", detail::suite_thm2_3},   {"thm2_4", detail::suite_thm2_4},
      {"thm2_5", detail::suite_thm2_5},   {"thm2_6", detail::suite_thm2_6},
      {"thm2_7", detail::suite_thm2_7},   {"thm3_1", detail::suite_thm3_1},
      {"cor3_2", detail::suite_cor3_2},   {"prop3_3", detail::suite_prop3_3},
      {"cor3_4", detail::suite_cor3_4},   {"prop4_1", detail::suite_prop4_1},
      {"thm4_2", detail::suite_thm4_2},   {"rem4_3", detail::suite_rem4_3},
      {"thm4_4", detail::suite_thm4_4},   {"cor4_5", detail::suite_cor4_5},
      {"commutative_collapse", detail::suite_commutative_collapse}};

  if (cfg.n && (*cfg.n < 1 || *cfg.n > kMaxDimension))
    throw CapExceeded("verification dimension must lie in [1, " + std::to_string(kMaxDimension) + "]");
  if (cfg.k < 1 || cfg.k > 3) throw CapExceeded("verification k must lie in [1, 3]");
  if (cfg.rank && (*cfg.rank < 0 || *cfg.rank > GrassmannElem::kMaxRank))
    throw CapExceeded("Grassmann rank must lie in [0, 16]");

  SuiteReport report;
  bool found = false;
  for (const auto& [name, fn] : table) {
    if (suite != "all" && suite != name) continue;
    found = true;
    detail::SuiteRunner runner(name, cfg, report);
    fn(runner);
  }
  if (!found) {
    std::string names = "all";
    for (const auto& name : suite_names()) names += ", " + name;
    throw InputError("unknown suite '" + suite + "'; expected one of: " + names);
  }
  return report;
}

inline void print_report(std::ostream& os, const SuiteReport& report) {
  for (const auto& c : report.checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.suite << ": " << c.name;
    if (!c.detail.empty()) os << " [" << c.detail << "]";
    os << " (" << std::fixed;
    os.precision(1);
    os << c.elapsed_ms << " ms)\n";
  }
  std::size_t passed = 0;
  for (const auto& c : report.checks) passed += c.passed;
  os << passed << "/" << report.checks.size() << " checks passed\n";
}

}  // namespace ncdet
