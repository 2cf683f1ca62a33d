#include <gtest/gtest.h>

#include <map>
#include <random>

#include <ncdet/ncdet.hpp>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace ncdet;
using testing_helpers::fp;

namespace {

AlphabetPtr ab() {
  static auto a = make_alphabet({"a", "b"});
  return a;
}

}  // namespace

TEST(Alphabet, RejectsDuplicatesAndEmptyNames) {
  EXPECT_THROW(make_alphabet({"a", "a"}), InputError);
  EXPECT_THROW(make_alphabet({"a", ""}), InputError);
  auto x = make_alphabet({"x", "y"});
  EXPECT_EQ(x->find("y"), 1u);
  EXPECT_FALSE(x->find("z"));
}

TEST(FreePoly, ProductExamples) {
  EXPECT_EQ(fp(ab(), "a") * fp(ab(), "b"), fp(ab(), "a*b"));
  EXPECT_EQ(to_string(fp(ab(), "a") * fp(ab(), "b")), "a*b");
  EXPECT_EQ(to_string((fp(ab(), "a") + fp(ab(), "b")) * (fp(ab(), "a") - fp(ab(), "b"))),
            "a*a - a*b + b*a - b*b");
  const auto c = fp(ab(), "a*b - b*a");
  EXPECT_EQ(c * FreePoly(1), c);
  EXPECT_EQ(FreePoly(1) * c, c);
}

TEST(FreePoly, CanonicalForm) {
  // Terms that cancel disappear; order is degree first, then generator ids.
  EXPECT_TRUE((fp(ab(), "a*b") - fp(ab(), "a*b")).is_zero());
  EXPECT_EQ(to_string(fp(ab(), "b*a + 3 + a - a*b")), "3 + a - a*b + b*a");
  EXPECT_EQ(to_string(FreePoly()), "0");
  EXPECT_EQ(to_string(FreePoly(-2)), "-2");
  EXPECT_EQ(to_string(fp(ab(), "2*a*b - b")), "-b + 2*a*b");
  EXPECT_EQ(fp(ab(), "a*b").degree(), 2u);
}

TEST(FreePoly, DifferentAlphabetsDoNotMix) {
  auto other = make_alphabet({"x", "y"});
  EXPECT_THROW(fp(ab(), "a") + fp(other, "x"), RingMismatch);
  EXPECT_THROW(fp(ab(), "a") * fp(other, "x"), RingMismatch);
  // Constants belong to every alphabet.
  EXPECT_EQ(fp(ab(), "a") + FreePoly(2), fp(ab(), "a + 2"));
  EXPECT_EQ(fp(other, "x") * FreePoly(3), fp(other, "3*x"));
}

TEST(FreePoly, TermCapIsEnforced) {
  auto tiny = make_alphabet({"a", "b", "c"}, 20);
  auto s = fp(tiny, "a + b + c");
  auto sq = s * s;  // 9 terms
  EXPECT_EQ(sq.size(), 9u);
  EXPECT_THROW(sq * s, CapExceeded);  // 27 terms
}

TEST(CommutatorSpan, Examples) {
  EXPECT_TRUE(in_commutator_span(fp(ab(), "a*b - b*a")));
  EXPECT_TRUE(in_commutator_span(fp(ab(), "a*a*b - a*b*a")));
  EXPECT_FALSE(in_commutator_span(fp(ab(), "a*b + b*a")));
  EXPECT_TRUE(in_commutator_span(FreePoly()));
}

TEST(CommutatorSpan, OracleAgreesOnExamples) {
  const oracle::CommutatorLattice lattice(2, 3);
  EXPECT_TRUE(lattice.contains(fp(ab(), "a*b - b*a")));
  EXPECT_TRUE(lattice.contains(fp(ab(), "a*a*b - a*b*a")));
  EXPECT_FALSE(lattice.contains(fp(ab(), "a*b + b*a")));
  EXPECT_FALSE(lattice.contains(fp(ab(), "a")));
  EXPECT_FALSE(lattice.contains(FreePoly(1)));
}

TEST(CommutatorSpan, CommutatorsOfRandomPairs) {
  std::mt19937_64 rng(42);
  auto alphabet = make_alphabet({"a", "b", "c", "d"});
  for (int i = 0; i < 200; ++i) {
    const auto p = random_free_poly(alphabet, rng, 3, 3);
    const auto q = random_free_poly(alphabet, rng, 3, 3);
    EXPECT_TRUE(in_commutator_span(commutator(p, q))) << to_string(p) << " | " << to_string(q);
  }
}

TEST(CommutatorSpan, NoMonomialIsInSpan) {
  auto alphabet = make_alphabet({"a", "b", "c"});
  for (const auto& w : oracle::words_up_to(3, 4))
    EXPECT_FALSE(in_commutator_span(FreePoly::from_terms(alphabet, {{w, Integer(1)}})));
}

TEST(CommutatorSpan, Additive) {
  std::mt19937_64 rng(5);
  auto alphabet = make_alphabet({"a", "b", "c"});
  for (int i = 0; i < 100; ++i) {
    const auto p = commutator(random_free_poly(alphabet, rng), random_free_poly(alphabet, rng));
    const auto q = random_free_poly(alphabet, rng);
    const bool pq = in_commutator_span(q);
    EXPECT_EQ(in_commutator_span(p + q), pq);
    const auto r = commutator(random_free_poly(alphabet, rng), random_free_poly(alphabet, rng));
    EXPECT_TRUE(in_commutator_span(p + r));
  }
}

// Criterion and lattice oracle must agree on random low-degree inputs,
// including ones that are in the span by construction.
TEST(CommutatorSpan, CrossValidatedAgainstLatticeOracle) {
  const oracle::CommutatorLattice lattice(3, 3);
  auto alphabet = make_alphabet({"a", "b", "c"});
  std::mt19937_64 rng(42);
  int inside = 0;
  for (int i = 0; i < 50; ++i) {
    FreePoly p = random_free_poly(alphabet, rng, 3, 4);
    if (i % 2 == 0) {
      // Rotation differences: w - rotate(w) with small multipliers.
      std::vector<FreePoly::Term> terms;
      for (const auto& [w, c] : p.terms()) {
        terms.emplace_back(w, c);
        terms.emplace_back(w.rotated(1), -c);
      }
      p = FreePoly::from_terms(alphabet, std::move(terms));
    }
    const bool expected = lattice.contains(p);
    inside += expected;
    EXPECT_EQ(in_commutator_span(p), expected) << to_string(p);
  }
  EXPECT_GE(inside, 20);
}

TEST(Specialize, Examples) {
  EXPECT_TRUE(specialize(fp(ab(), "a*b - b*a"), std::map<std::size_t, IntElem>{{0, IntElem(2)}, {1, IntElem(5)}})
                  .is_zero());
  const auto v1 = GrassmannElem::generator(2, 1), v2 = GrassmannElem::generator(2, 2);
  EXPECT_EQ(specialize(fp(ab(), "a*b"), std::map<std::size_t, GrassmannElem>{{0, v1}, {1, v2}}), v1 * v2);

  auto abcd = make_alphabet({"a", "b", "c", "d"});
  const std::map<std::size_t, IntElem> values{{0, IntElem(1)}, {1, IntElem(2)}, {2, IntElem(3)}, {3, IntElem(4)}};
  const IntElem direct = IntElem(1 * 4 + 4 * 1 - 2 * 3 - 3 * 2);
  EXPECT_EQ(direct, IntElem(-4));
  EXPECT_EQ(specialize(fp(abcd, "a*d + d*a - b*c - c*b"), values), direct);
}

TEST(Specialize, MissingAssignmentThrows) {
  EXPECT_THROW(specialize(fp(ab(), "a*b"), std::map<std::size_t, IntElem>{{0, IntElem(1)}}), MissingAssignment);
  // Generators that do not occur need no image.
  EXPECT_EQ(specialize(fp(ab(), "3*a"), std::map<std::size_t, IntElem>{{0, IntElem(2)}}), IntElem(6));
}

TEST(Specialize, IsARingMap) {
  std::mt19937_64 rng(42);
  auto alphabet = make_alphabet({"a", "b", "c"});
  std::map<std::size_t, GrassmannElem> to_grass;
  std::map<std::size_t, IntElem> to_int;
  for (std::size_t g = 0; g < 3; ++g) {
    to_grass[g] = random_grassmann(6, rng);
    to_int[g] = random_int(rng);
  }
  for (int i = 0; i < 100; ++i) {
    const auto p = random_free_poly(alphabet, rng);
    const auto q = random_free_poly(alphabet, rng);
    EXPECT_EQ(specialize(p * q, to_grass), specialize(p, to_grass) * specialize(q, to_grass));
    EXPECT_EQ(specialize(p + q, to_grass), specialize(p, to_grass) + specialize(q, to_grass));
    EXPECT_EQ(specialize(p * q, to_int), specialize(p, to_int) * specialize(q, to_int));
    EXPECT_EQ(specialize(p + q, to_int), specialize(p, to_int) + specialize(q, to_int));
  }
}

TEST(Word, NecklaceIsLeastRotation) {
  const Word w(std::vector<std::uint8_t>{2, 0, 1, 0});
  EXPECT_EQ(w.necklace(), Word(std::vector<std::uint8_t>{0, 1, 0, 2}));
  EXPECT_EQ(w.rotated(4), w);
}
