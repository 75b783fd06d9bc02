#include <gtest/gtest.h>

#include <set>
#include <stdexcept>
#include <string>

#include "octowitt/octonion.hpp"
#include "octowitt/sampling.hpp"
#include "test_support.hpp"

namespace {

using namespace octowitt;
using octowitt::testing::e;

TEST(OctonionBasis, MatchesHandExpandedTable) {
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      EXPECT_EQ(basis_mul(i, j), octowitt::testing::hand_product(i, j)) << i << "," << j;
    }
  }
}

TEST(OctonionBasis, Examples) {
  EXPECT_EQ(basis_mul(1, 2), (BasisProduct{1, 3}));
  EXPECT_EQ(basis_mul(0, 5), (BasisProduct{1, 5}));
  EXPECT_EQ(basis_mul(2, 1), (BasisProduct{-1, 3}));
  EXPECT_EQ(basis_mul(3, 3), (BasisProduct{-1, 0}));
}

TEST(OctonionBasis, IndexIsXor) {
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) EXPECT_EQ(basis_mul(i, j).index, i ^ j);
  }
}

TEST(OctonionBasis, OutOfRangeThrows) {
  EXPECT_THROW(basis_mul(8, 0), std::out_of_range);
  EXPECT_THROW(basis_mul(0, -1), std::out_of_range);
  EXPECT_THROW(Octonion::basis(8), std::out_of_range);
}

TEST(FanoPlane, EveryPairOfPointsOnExactlyOneLine) {
  for (int a = 1; a < 8; ++a) {
    for (int b = a + 1; b < 8; ++b) {
      int lines = 0;
      for (const auto& t : kFanoTriples) {
        const std::set<int> pts{t.a, t.b, t.c};
        lines += (pts.count(a) != 0U && pts.count(b) != 0U) ? 1 : 0;
      }
      EXPECT_EQ(lines, 1) << a << "," << b;
    }
  }
}

TEST(Octonion, ProductExamples) {
  EXPECT_EQ(e(1) * e(4), e(5));
  EXPECT_EQ((e(1) * e(2)) * e(4), e(7));
  EXPECT_EQ(e(1) * (e(2) * e(4)), e(7, -1));
}

TEST(Octonion, UnitAndScalars) {
  RationalSampler rng(11);
  for (int s = 0; s < 20; ++s) {
    const Octonion a = rng.octonion();
    EXPECT_EQ(a * e(0), a);
    EXPECT_EQ(e(0) * a, a);
  }
  EXPECT_EQ(e(1) + e(1), e(1, 2));
  EXPECT_EQ(Rational(1, 3) * e(2, 3), e(2));
}

TEST(Octonion, Conjugation) {
  EXPECT_EQ(conj(e(0)), e(0));
  EXPECT_EQ(conj(e(3)), e(3, -1));
  EXPECT_EQ(conj(e(1) * e(2)), e(3, -1));
  EXPECT_EQ(conj(e(2)) * conj(e(1)), e(3, -1));
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) EXPECT_EQ(conj(e(i) * e(j)), conj(e(j)) * conj(e(i)));
  }
}

TEST(Octonion, InnerProduct) {
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) EXPECT_EQ(inner(e(i), e(j)), Rational(i == j ? 1 : 0));
  }
  EXPECT_EQ(inner(e(1) + e(2), e(1) - e(2)), Rational(0));
  RationalSampler rng(12);
  for (int s = 0; s < 20; ++s) {
    const Octonion p = rng.octonion();
    const Octonion q = rng.octonion();
    EXPECT_EQ(inner(p, p), norm2(p));
    EXPECT_EQ(inner(p, q), (conj(p) * q).coeffs()[0]);
  }
}

TEST(Octonion, NormAndInverse) {
  const Octonion a = e(0, 1) + e(3, 2) - e(6, 2);
  EXPECT_EQ(norm2(a), Rational(9));
  EXPECT_EQ(a * inverse(a), e(0));
  EXPECT_EQ(inverse(a) * a, e(0));
  EXPECT_THROW(inverse(Octonion{}), std::domain_error);
}

TEST(Octonion, AlternativeButNotAssociative) {
  RationalSampler rng(13);
  for (int s = 0; s < 200; ++s) {
    const Octonion a = rng.octonion();
    const Octonion b = rng.octonion();
    EXPECT_EQ((a * a) * b, a * (a * b));
    EXPECT_EQ((a * b) * b, a * (b * b));
    EXPECT_EQ((a * b) * a, a * (b * a));
  }
  EXPECT_NE((e(1) * e(2)) * e(4), e(1) * (e(2) * e(4)));
}

TEST(Octonion, CompositionLaw) {
  RationalSampler rng(14);
  for (int s = 0; s < 200; ++s) {
    const Octonion a = rng.octonion();
    const Octonion b = rng.octonion();
    EXPECT_EQ(norm2(a * b), norm2(a) * norm2(b));
  }
}

TEST(Octonion, ImaginaryUnitsAnticommute) {
  for (int i = 1; i < 8; ++i) {
    for (int j = 1; j < 8; ++j) {
      EXPECT_EQ(e(i) * e(j) + e(j) * e(i), e(0, i == j ? -2 : 0));
    }
  }
}

TEST(Octonion, Predicates) {
  EXPECT_TRUE(Octonion{}.is_zero());
  EXPECT_TRUE(e(0, 5).is_real());
  EXPECT_FALSE(e(4).is_real());
}

}  // namespace
