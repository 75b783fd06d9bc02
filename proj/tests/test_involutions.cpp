#include <gtest/gtest.h>

#include <bit>
#include <stdexcept>

#include "octowitt/involutions.hpp"
#include "octowitt/sampling.hpp"
#include "octowitt/witt_recipes.hpp"
#include "test_support.hpp"

namespace {

using namespace octowitt;
using octowitt::testing::e;
using octowitt::testing::et;

// J_j flips e_1, e_2, e_4 according to the binary digits of j; every other
// unit is a product of those, so its sign is the parity of the shared bits.
int hand_sign(int j, int i) { return std::popcount(static_cast<unsigned>(i & j)) % 2 == 0 ? 1 : -1; }

TEST(InvolutionIndex, RangeAndDigits) {
  EXPECT_THROW(InvolutionIndex(8), std::out_of_range);
  EXPECT_THROW(InvolutionIndex(-1), std::out_of_range);
  const InvolutionIndex j(5);
  EXPECT_EQ(j.digit(1), 1);
  EXPECT_EQ(j.digit(2), 0);
  EXPECT_EQ(j.digit(3), 1);
}

TEST(JSigns, MatchMultiplicativeExtension) {
  for (int j = 0; j < 8; ++j) {
    EXPECT_TRUE(j_signs_path_independent(j));
    for (int i = 0; i < 8; ++i) EXPECT_EQ(j_sign(j, i), hand_sign(j, i)) << j << "," << i;
  }
}

TEST(JApply, Examples) {
  RationalSampler rng(41);
  const Octonion x = rng.octonion();
  EXPECT_EQ(j_apply(0, x), x);
  EXPECT_EQ(j_apply(1, e(3)), e(3, -1));
  EXPECT_EQ(j_apply(5, e(5)), e(5));
  EXPECT_THROW(j_apply(8, x), std::out_of_range);
}

TEST(JApply, AutomorphismOnAllBasisPairs) {
  for (int j = 0; j < 8; ++j) {
    for (int a = 0; a < 8; ++a) {
      for (int b = 0; b < 8; ++b) EXPECT_EQ(j_apply(j, e(a) * e(b)), j_apply(j, e(a)) * j_apply(j, e(b)));
    }
  }
}

TEST(JApply, AutomorphismOnRandomOctonions) {
  RationalSampler rng(42);
  for (int s = 0; s < 50; ++s) {
    const Octonion x = rng.octonion();
    const Octonion y = rng.octonion();
    const int j = rng.uniform(0, 7);
    EXPECT_EQ(j_apply(j, x * y), j_apply(j, x) * j_apply(j, y));
    EXPECT_EQ(j_apply(j, j_apply(j, x)), x);
  }
}

TEST(JApplyTensor, FixesRealCoefficientsAndIsMultiplicative) {
  RationalSampler rng(43);
  const Multivector u = rng.sparse_multivector(8, 5);
  for (int j = 0; j < 8; ++j) {
    EXPECT_EQ(j_apply_tensor(j, TensorElement::from_multivector(u)), TensorElement::from_multivector(u));
    const TensorElement s = rng.sparse_tensor(8, 3);
    const TensorElement t = rng.sparse_tensor(8, 3);
    EXPECT_EQ(j_apply_tensor(j, s * t), j_apply_tensor(j, s) * j_apply_tensor(j, t));
  }
}

TEST(JApplyTensor, OmegaImages) {
  // J_1(Omega) flips the sign of the odd-index terms of Omega.
  const TensorElement om = omega(0, 1);
  TensorElement want(8);
  for (int i = 0; i < 8; ++i) want += oct_left_mul(j_apply(1, conj(e(i))), TensorElement::from_multivector(Multivector::generator(8, i)));
  EXPECT_EQ(j_apply_tensor(1, om), want);
  EXPECT_EQ(j_apply_tensor(1, om).coeff(Blade{1}), e(1));
  EXPECT_EQ(j_apply_tensor(1, om).coeff(Blade{2}), e(2, -1));
}

TEST(JApplyTensor, MultiSlotwise) {
  const MultiTensorElement t =
      MultiTensorElement::term(16, Blade{9}, MultiOctonion(std::vector<Octonion>{e(3), e(6)}));
  const MultiTensorElement want =
      MultiTensorElement::term(16, Blade{9}, MultiOctonion(std::vector<Octonion>{e(3, -1), e(6)}));
  EXPECT_EQ(j_apply_tensor(1, t), want);
}

TEST(Sigma, Table) {
  for (int j = 0; j < 8; ++j) {
    EXPECT_EQ(sigma(j, 0), 0);
    for (int i = 1; i < 8; ++i) {
      // J_j(conj e_i) = -hand_sign(j,i) e_i, and sigma records a minus sign.
      EXPECT_EQ(sigma(j, i), hand_sign(j, i) > 0 ? 1 : 0) << j << "," << i;
    }
  }
  for (int i = 1; i < 8; ++i) EXPECT_EQ(sigma(0, i), 1);
  EXPECT_EQ(sigma(1, 1), 0);
}

TEST(GroupCompose, IsXorAndMatchesMapComposition) {
  EXPECT_EQ(group_compose(InvolutionIndex(0), InvolutionIndex(6)), InvolutionIndex(6));
  EXPECT_EQ(group_compose(InvolutionIndex(3), InvolutionIndex(3)), InvolutionIndex(0));
  EXPECT_EQ(group_compose(InvolutionIndex(1), InvolutionIndex(2)), InvolutionIndex(3));
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const int k = group_compose(InvolutionIndex(i), InvolutionIndex(j)).value();
      for (int b = 0; b < 8; ++b) EXPECT_EQ(j_apply(i, j_apply(j, e(b))), j_apply(k, e(b)));
    }
  }
}

TEST(PhiInvariance, AllEightMaps) {
  for (int j = 0; j < 8; ++j) EXPECT_TRUE(phi_invariance(j)) << j;
}

TEST(Projection, OctonionExamples) {
  EXPECT_EQ(project_coefficient(3, e(3)), Rational(1));
  EXPECT_EQ(project_coefficient(5, e(3)), Rational(0));
  RationalSampler rng(44);
  for (int s = 0; s < 100; ++s) {
    const Octonion x = rng.octonion();
    Octonion avg;
    for (int j = 0; j < 8; ++j) avg += j_apply(j, x);
    EXPECT_EQ(Octonion::real(project_coefficient(0, x)), Rational(1, 8) * avg);
    for (int i = 0; i < 8; ++i) EXPECT_EQ(project_coefficient(i, x), x[static_cast<std::size_t>(i)]);
  }
}

TEST(Projection, TensorCoefficients) {
  RationalSampler rng(45);
  const Multivector u = rng.sparse_multivector(8, 4);
  const TensorElement p = TensorElement::from_multivector(u);
  EXPECT_EQ(project_tensor_coefficient(0, p), u);
  for (int i = 1; i < 8; ++i) EXPECT_TRUE(project_tensor_coefficient(i, p).is_zero());
  // Omega = g0 - sum_{i>=1} e_i g_i, so its e_i-coefficient is -g_i for i >= 1.
  const TensorElement om = omega(0, 1);
  EXPECT_EQ(project_tensor_coefficient(0, om), Multivector::generator(8, 0));
  for (int i = 1; i < 8; ++i) EXPECT_EQ(project_tensor_coefficient(i, om), Multivector::generator(8, i, Rational(-1)));
}

TEST(Projection, TensorSpanningSetAndRandom) {
  for (int b = 0; b < 8; ++b) {
    for (std::uint64_t mask = 0; mask < 256; mask += 17) {
      const TensorElement p = et(8, b, Blade(mask));
      for (int i = 0; i < 8; ++i) EXPECT_EQ(project_tensor_coefficient(i, p), octonion_component(p, i));
    }
  }
  RationalSampler rng(46);
  for (int s = 0; s < 30; ++s) {
    const TensorElement p = rng.sparse_tensor(16, 4);
    for (int i = 0; i < 8; ++i) EXPECT_EQ(project_tensor_coefficient(i, p), octonion_component(p, i));
  }
}

}  // namespace
