#include <gtest/gtest.h>

#include <random>

#include <ncdet/ncdet.hpp>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace ncdet;
using testing_helpers::fp;
using testing_helpers::I;
using testing_helpers::int_matrix;

namespace {

const Matrix<IntElem> kA2 = int_matrix({{1, 2}, {3, 4}});
const Matrix<IntElem> kA3 = int_matrix({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});

}  // namespace

TEST(Sdet, OneByOne) {
  const auto a = generic_matrix(1);
  EXPECT_EQ(symmetric_determinant(a), a(0, 0));
  EXPECT_EQ(symmetric_determinant(Matrix<IntElem>(0)), I(1));
}

TEST(Sdet, Generic2x2) {
  const auto a = generic_matrix(2);
  EXPECT_EQ(symmetric_determinant(a), fp(a(0, 0).alphabet(), "a*d + d*a - b*c - c*b"));
  EXPECT_EQ(to_string(symmetric_determinant(a)), "a*d - b*c - c*b + d*a");
}

TEST(Sdet, Generic3x3MatchesHandExpansion) {
  const auto a = generic_matrix(3);
  const auto expected = oracle::juxtaposed_sum(a(0, 0).alphabet(), oracle::kSdet3Literal);
  ASSERT_EQ(expected.size(), 36u);
  const auto s = symmetric_determinant(a);
  EXPECT_EQ(s.size(), 36u);
  EXPECT_EQ(s, expected);
}

TEST(Sdet, IntegerOracle) {
  EXPECT_EQ(oracle::sdet(kA2), I(-4));
  EXPECT_EQ(symmetric_determinant(kA2), I(-4));
}

TEST(Sdet, MatchesHeapOracleOnGenericAndGrassmann) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto a = generic_matrix(n);
    EXPECT_EQ(symmetric_determinant(a), oracle::sdet(a)) << n;
  }
  std::mt19937_64 rng(42);
  for (std::size_t n = 2; n <= 4; ++n)
    for (int i = 0; i < 5; ++i) {
      const auto g = random_grassmann_matrix(n, 6, rng);
      EXPECT_EQ(symmetric_determinant(g), oracle::sdet(g));
    }
}

TEST(Sdet, CommutativeCollapse) {
  std::mt19937_64 rng(42);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int i = 0; i < 10; ++i) {
      const auto a = random_int_matrix(n, rng);
      EXPECT_EQ(symmetric_determinant(a).value(), factorial(n) * oracle::det(a));
    }
}

TEST(Sdet, FlippedSignIsDetected) {
  const auto a = generic_matrix(2);
  SdetOptions fault;
  fault.flip_sign_at_pair = 1;
  EXPECT_NE(symmetric_determinant(a, fault), symmetric_determinant(a));
}

TEST(Preadjoint, Generic2x2) {
  const auto a = generic_matrix(2);
  const auto& al = a(0, 0).alphabet();
  const auto expected = Matrix<FreePoly>::from_rows({{fp(al, "d"), fp(al, "-b")}, {fp(al, "-c"), fp(al, "a")}});
  EXPECT_EQ(preadjoint(a), expected);
  EXPECT_EQ(preadjoint_via_minors(a), expected);
}

TEST(Preadjoint, OneByOneIsOne) {
  EXPECT_EQ(preadjoint(generic_matrix(1)), Matrix<FreePoly>::identity(1));
}

TEST(Preadjoint, Integer3x3IsScaledAdjugate) {
  const auto expected = scale(oracle::adjugate(kA3), Integer(2));
  EXPECT_EQ(preadjoint(kA3), expected);
  EXPECT_EQ(preadjoint_via_minors(kA3), expected);
}

TEST(Preadjoint, AgreesWithDefinitionAndMinors) {
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto a = generic_matrix(n);
    const auto direct = preadjoint(a);
    EXPECT_EQ(direct, oracle::preadjoint(a));
    EXPECT_EQ(direct, preadjoint_via_minors(a));
  }
  std::mt19937_64 rng(42);
  for (int i = 0; i < 10; ++i) {
    const auto a = random_int_matrix(4, rng);
    EXPECT_EQ(preadjoint(a), preadjoint_via_minors(a));
    EXPECT_EQ(preadjoint(a), scale(oracle::adjugate(a), factorial(3)));
  }
}

TEST(AdjointSequence, UnfoldsTheRecursion) {
  const auto a = generic_matrix(2);
  const auto one_r = adjoint_sequence(a, Side::right, 1);
  ASSERT_EQ(one_r.matrices.size(), 1u);
  EXPECT_EQ(one_r.matrices[0], preadjoint(a));
  const auto one_l = adjoint_sequence(a, Side::left, 1);
  EXPECT_EQ(one_l.matrices[0], preadjoint(a));

  const auto r = adjoint_sequence(a, Side::right, 2);
  ASSERT_EQ(r.matrices.size(), 2u);
  EXPECT_EQ(r.matrices[1], preadjoint(a * preadjoint(a)));
  const auto l = adjoint_sequence(a, Side::left, 2);
  EXPECT_EQ(l.matrices[1], preadjoint(preadjoint(a) * a));
  EXPECT_THROW(adjoint_sequence(a, Side::right, 0), InputError);
}

TEST(KthDeterminant, IntegerExamples) {
  // Closed form n ((n-1)!)^(1+n+...+n^(k-1)) det^(n^(k-1)).
  const IntElem det2(oracle::det(kA2));
  EXPECT_EQ(rdet(kA2, 2), IntElem(2) * det2 * det2);
  EXPECT_EQ(rdet(kA2, 2), I(8));
  EXPECT_EQ(ldet(kA2, 2), I(8));
  EXPECT_EQ(oracle::det(kA3), Integer(-3));
  EXPECT_EQ(rdet(kA3, 1), I(-18));
  EXPECT_EQ(ldet(kA3, 1), I(-18));
}

TEST(KthDeterminant, FirstOrderIsSdet) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto a = generic_matrix(n);
    EXPECT_EQ(rdet(a, 1), symmetric_determinant(a));
    EXPECT_EQ(ldet(a, 1), symmetric_determinant(a));
  }
}

TEST(KthDeterminant, RecursionStep) {
  const auto a = generic_matrix(2);
  EXPECT_EQ(rdet(a, 2), rdet(a * preadjoint(a), 1));
  EXPECT_EQ(ldet(a, 2), ldet(preadjoint(a) * a, 1));
}

TEST(KthDeterminant, CommutativeClosedForm) {
  std::mt19937_64 rng(42);
  for (std::size_t n = 2; n <= 3; ++n)
    for (std::size_t k = 1; k <= (n == 2 ? 3u : 2u); ++k)
      for (int i = 0; i < 5; ++i) {
        const auto a = random_int_matrix(n, rng, 4);
        const Integer d = oracle::det(a);
        std::size_t e = 1, s = 0, pw = 1;
        for (std::size_t j = 0; j < k; ++j, pw *= n) s += pw;
        for (std::size_t j = 1; j < k; ++j) e *= n;
        const Integer expected = Integer(n) * boost::multiprecision::pow(factorial(n - 1), static_cast<unsigned>(s)) *
                                 boost::multiprecision::pow(d, static_cast<unsigned>(e));
        EXPECT_EQ(rdet(a, k).value(), expected) << "n=" << n << " k=" << k;
        EXPECT_EQ(ldet(a, k).value(), expected);
      }
}

TEST(KthDeterminant, StandardPolynomialDifference) {
  const auto a = generic_matrix(2);
  const auto diff = rdet(a, 2) - ldet(a, 2);
  EXPECT_EQ(diff, standard_polynomial_4(a(0, 0), a(0, 1), a(1, 0), a(1, 1)));
}

TEST(KthAdjoint, ScalarCollapseOverGrassmann) {
  std::mt19937_64 rng(42);
  for (std::size_t n = 2; n <= 3; ++n)
    for (int i = 0; i < 10; ++i) {
      const auto a = random_grassmann_matrix(n, 6, rng);
      const auto r = a * kth_adjoint(a, Side::right, 2);
      EXPECT_TRUE(r.is_scalar());
      EXPECT_EQ(r(0, 0), rdet(a, 2));
      const auto l = kth_adjoint(a, Side::left, 2) * a;
      EXPECT_TRUE(l.is_scalar());
      EXPECT_EQ(l(0, 0), ldet(a, 2));
    }
}

TEST(KthAdjoint, DoesNotCollapseOverFreeAlgebra) {
  const auto a = generic_matrix(2);
  EXPECT_FALSE((a * kth_adjoint(a, Side::right, 1)).is_scalar());
}

TEST(CommutatorDefect, Generic) {
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto a = generic_matrix(n);
    for (Side side : {Side::right, Side::left}) {
      const auto d = commutator_defect(a, side);
      EXPECT_EQ(d.scalar, symmetric_determinant(a));
      EXPECT_TRUE(trace(d.defect).is_zero());
      EXPECT_FALSE(d.defect.is_zero());
      for (const auto& e : d.defect.entries()) EXPECT_TRUE(in_commutator_span(e));
    }
  }
}

TEST(CommutatorDefect, TrivialCases) {
  EXPECT_TRUE(commutator_defect(generic_matrix(1), Side::right).defect.is_zero());
  const auto d = commutator_defect(kA3, Side::left);
  EXPECT_TRUE(d.defect.is_zero());
  EXPECT_EQ(d.scalar, I(-18));
}

TEST(Trace, TransposeSquaresAgreeCubesDoNot) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto a = generic_matrix(n);
    const auto t = transpose(a);
    EXPECT_EQ(trace(t * t), trace(a * a));
  }
  const auto a = generic_matrix(2);
  const auto t = transpose(a);
  EXPECT_NE(trace(t * t * t), trace(a * a * a));
}

TEST(Conjugate, IdentityAndShear) {
  const auto a = generic_matrix(2);
  EXPECT_EQ(conjugate(a, Matrix<IntElem>::identity(2)), a);
  const auto c = conjugate(a, int_matrix({{1, 1}, {0, 1}}));
  EXPECT_EQ(trace(c), trace(a));
  // T^-1 A T = [[a - c, a + b - c - d], [c, c + d]].
  const auto& al = a(0, 0).alphabet();
  EXPECT_EQ(c(0, 1), fp(al, "a + b - c - d"));
  EXPECT_EQ(c(1, 1), fp(al, "c + d"));
}

TEST(Conjugate, InvarianceOfKthDeterminants) {
  const std::vector<Matrix<IntElem>> ts = {int_matrix({{1, 1}, {0, 1}}), int_matrix({{2, 1}, {1, 1}}),
                                           int_matrix({{0, 1}, {-1, 0}})};
  const auto a = generic_matrix(2);
  for (const auto& t : ts) {
    const auto c = conjugate(a, t);
    EXPECT_EQ(preadjoint(c), conjugate(preadjoint(a), t));
    for (std::size_t k = 1; k <= 3; ++k) {
      EXPECT_EQ(rdet(c, k), rdet(a, k));
      EXPECT_EQ(ldet(c, k), ldet(a, k));
    }
  }
}

TEST(Conjugate, RejectsNonUnimodular) {
  EXPECT_THROW(conjugate(generic_matrix(2), int_matrix({{2, 0}, {0, 1}})), NotApplicable);
  EXPECT_THROW(conjugate(generic_matrix(2), Matrix<IntElem>::identity(3)), DimensionError);
}
