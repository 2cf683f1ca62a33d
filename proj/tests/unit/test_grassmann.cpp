#include <gtest/gtest.h>

#include <random>

#include <ncdet/ncdet.hpp>

#include "helpers.hpp"

using namespace ncdet;
using testing_helpers::ge;

namespace {

GrassmannElem v(int i, int rank = 4) { return GrassmannElem::generator(rank, i); }
GrassmannElem one() { return GrassmannElem(1); }

}  // namespace

TEST(Grassmann, Anticommutation) {
  EXPECT_EQ(to_string(v(1) * v(2)), "v1*v2");
  EXPECT_EQ(v(2) * v(1), -(v(1) * v(2)));
  EXPECT_EQ(to_string(v(2) * v(1)), "-v1*v2");
  EXPECT_TRUE((v(1) * v(1)).is_zero());
  EXPECT_EQ((one() + v(1)) * (one() + v(2)), one() + v(1) + v(2) + v(1) * v(2));
}

TEST(Grassmann, WedgeSignOfLongerBlades) {
  // v3 * (v1 v2) = v1 v2 v3 (two transpositions); (v2 v3) * v1 likewise.
  EXPECT_EQ(v(3) * (v(1) * v(2)), v(1) * v(2) * v(3));
  EXPECT_EQ((v(2) * v(3)) * v(1), v(1) * v(2) * v(3));
  EXPECT_EQ((v(1) * v(3)) * v(2), -(v(1) * v(2) * v(3)));
  EXPECT_TRUE(((v(1) * v(2)) * (v(2) * v(3))).is_zero());
}

TEST(Grassmann, GeneratorBounds) {
  EXPECT_THROW(GrassmannElem::generator(4, 5), CapExceeded);
  EXPECT_THROW(GrassmannElem::generator(4, 0), CapExceeded);
  EXPECT_THROW(GrassmannElem::generator(17, 1), CapExceeded);
}

TEST(Grassmann, RanksDoNotMix) {
  EXPECT_THROW(v(1, 4) + v(1, 5), RingMismatch);
  EXPECT_EQ(v(1, 4) + GrassmannElem(2), ge(4, "2 + v1"));
}

TEST(Grassmann, GradedParts) {
  const auto x = one() + v(1) + v(1) * v(2);
  const auto parts = graded_parts(x);
  EXPECT_EQ(parts.even, one() + v(1) * v(2));
  EXPECT_EQ(parts.odd, v(1));

  const auto z = graded_parts(GrassmannElem());
  EXPECT_TRUE(z.even.is_zero());
  EXPECT_TRUE(z.odd.is_zero());

  const auto t = graded_parts(v(1) * v(2) * v(3));
  EXPECT_TRUE(t.even.is_zero());
  EXPECT_EQ(t.odd, v(1) * v(2) * v(3));
}

TEST(Grassmann, ParityOfZeroIsBoth) {
  EXPECT_TRUE(GrassmannElem().is_even());
  EXPECT_TRUE(GrassmannElem().is_odd());
  EXPECT_FALSE((one() + v(1)).is_even());
  EXPECT_FALSE((one() + v(1)).is_odd());
  EXPECT_FALSE((one() + v(1)).parity().has_value());
}

TEST(Grassmann, ParityIsAdditiveUnderProducts) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    const int px = static_cast<int>(rng() % 2), py = static_cast<int>(rng() % 2);
    const auto x = random_grassmann(8, rng, 4, 3, px);
    const auto y = random_grassmann(8, rng, 4, 3, py);
    const auto xy = x * y;
    if (xy.is_zero()) continue;
    ASSERT_TRUE(xy.parity().has_value());
    EXPECT_EQ(*xy.parity(), (px + py) % 2);
  }
}

TEST(Grassmann, LieNilpotencyExamples) {
  EXPECT_TRUE(lie_nilpotency_check(4, 2, 50, 42));
  EXPECT_FALSE(lie_nilpotency_check(4, 1, 50, 42));
  EXPECT_TRUE(lie_nilpotency_check(0, 1, 50, 42));
  EXPECT_EQ(commutator(v(1), v(2)), GrassmannElem(2) * v(1) * v(2));
}

TEST(Grassmann, DoubleCommutatorsVanishUpToRankEight) {
  for (int rank = 0; rank <= 8; ++rank) {
    std::mt19937_64 rng(1000 + rank);
    for (int i = 0; i < 200; ++i) {
      const auto x = random_grassmann(rank, rng);
      const auto y = random_grassmann(rank, rng);
      const auto z = random_grassmann(rank, rng);
      EXPECT_TRUE(commutator(commutator(x, y), z).is_zero()) << "rank " << rank;
    }
  }
}

TEST(Grassmann, EvenPartIsCentral) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const auto e = graded_parts(random_grassmann(6, rng)).even;
    const auto x = random_grassmann(6, rng);
    EXPECT_EQ(e * x, x * e);
  }
}

TEST(Grassmann, BladeOrder) {
  // Fewer generators first, then lexicographic on indices.
  EXPECT_EQ(to_string(ge(4, "v1*v2 + v3 + 1 + v1*v4 + v1")), "1 + v1 + v3 + v1*v2 + v1*v4");
  EXPECT_TRUE(GrassmannElem::blade_less(0b0100, 0b0011));
  EXPECT_TRUE(GrassmannElem::blade_less(0b0011, 0b0101));
  EXPECT_FALSE(GrassmannElem::blade_less(0b0101, 0b0011));
}
