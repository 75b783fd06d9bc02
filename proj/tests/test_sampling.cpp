#include <gtest/gtest.h>

#include "octowitt/sampling.hpp"

namespace {

using namespace octowitt;

TEST(Sampler, SameSeedSameStream) {
  RationalSampler a(99);
  RationalSampler b(99);
  for (int s = 0; s < 50; ++s) EXPECT_EQ(a.rational(), b.rational());
  RationalSampler c(99, 3);
  RationalSampler d(99, 3);
  EXPECT_EQ(c.sparse_tensor(16, 5), d.sparse_tensor(16, 5));
}

TEST(Sampler, StreamsDiffer) {
  RationalSampler a(99, 1);
  RationalSampler b(99, 2);
  EXPECT_NE(a.vector(16), b.vector(16));
}

TEST(Sampler, RationalBounds) {
  RationalSampler rng(100);
  for (int s = 0; s < 2000; ++s) {
    const Rational r = rng.rational();
    EXPECT_LE(r, Rational(100));
    EXPECT_GE(r, Rational(-100));
    EXPECT_LE(r.raw().get_den(), 100);
  }
}

TEST(Sampler, ShapesRespectDimension) {
  RationalSampler rng(101);
  for (int s = 0; s < 100; ++s) {
    EXPECT_LE(rng.blade(8).span_end(), 8);
    EXPECT_LE(rng.blade(8).grade(), 4);
    const TensorElement t = rng.sparse_tensor(8, 3, true);
    for (const auto& [b, c] : t.terms()) EXPECT_TRUE(c.is_real());
    const int u = rng.uniform(2, 5);
    EXPECT_GE(u, 2);
    EXPECT_LE(u, 5);
  }
  const Polynomial p = rng.scalar_polynomial(8, 3, 4);
  EXPECT_LE(p.degree(), 3);
  for (const auto& [ex, c] : p.terms()) {
    EXPECT_EQ(c.terms().size(), 1U);
    EXPECT_EQ(c.terms().begin()->first, Blade());
    EXPECT_TRUE(c.terms().begin()->second.is_real());
  }
}

}  // namespace
