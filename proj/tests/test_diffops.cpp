#include <gtest/gtest.h>

#include <stdexcept>

#include "octowitt/diffops.hpp"
#include "octowitt/involutions.hpp"
#include "octowitt/sampling.hpp"
#include "test_support.hpp"

namespace {

using namespace octowitt;
using octowitt::testing::e;
using octowitt::testing::e0g;
using octowitt::testing::hand_product;

TensorElement one(int dim) { return TensorElement::constant(dim, e(0)); }

Polynomial sum_of_squares(int nvars) {
  Polynomial p(nvars, nvars);
  for (int k = 0; k < nvars; ++k) {
    Exponents ex(static_cast<std::size_t>(nvars), 0);
    ex[static_cast<std::size_t>(k)] = 2;
    p.add_term(ex, one(nvars));
  }
  return p;
}

TEST(Dirac, Coefficients) {
  const FirstOrderOperator d = dirac(8);
  EXPECT_EQ(d.nvars(), 8);
  for (int k = 0; k < 8; ++k) EXPECT_EQ(d.coeff(k), e0g(8, k));
  EXPECT_THROW(dirac(12), std::invalid_argument);
  EXPECT_THROW(dirac(0), std::invalid_argument);
}

TEST(Dirac, SquareIsMinusTwoLaplacian) {
  for (int n : {1, 2}) {
    const SecondOrderOperator ac = op_anticommutator(dirac(8 * n), dirac(8 * n));
    EXPECT_EQ(ac, Rational(-2) * laplacian(8 * n));
    EXPECT_TRUE(op_equal(ac, Rational(-2) * laplacian(8 * n)));
    EXPECT_TRUE(op_equal(Rational(-1, 2) * ac, laplacian(8 * n)));
    EXPECT_EQ(laplacian(8 * n).coeff(3, 3), one(8 * n));
    EXPECT_TRUE(laplacian(8 * n).coeff(3, 4).is_zero());
  }
}

TEST(OpApply, Examples) {
  const Polynomial x0 = Polynomial::variable(8, 0, one(8));
  EXPECT_EQ(op_apply(dirac(8), x0), Polynomial::constant(8, e0g(8, 0)));
  EXPECT_TRUE(op_apply(dirac(8), Polynomial::constant(8, one(8))).is_zero());
  for (int n : {1, 2}) {
    const SecondOrderOperator ac = op_anticommutator(dirac(8 * n), dirac(8 * n));
    EXPECT_EQ(op_apply(ac, sum_of_squares(8 * n)), Polynomial::constant(8 * n, Rational(-32 * n) * one(8 * n)));
  }
  EXPECT_THROW(op_apply(dirac(8), Polynomial(16, 16)), std::invalid_argument);
}

TEST(TwistorDerivative, ZeroIsBlockDirac) {
  EXPECT_EQ(twistor_derivative(0, 0, 1), dirac(8));
  EXPECT_EQ(twistor_derivative(0, 1, 2), block_dirac(1, 2));
  FirstOrderOperator whole = block_dirac(0, 2) + block_dirac(1, 2);
  EXPECT_EQ(whole, dirac(16));
}

TEST(TwistorDerivative, CoefficientsFollowTwistorRows) {
  // d/dX_i has coefficient sign * g_l on d/dx_k where X_i carries sign * x_k g_l.
  for (int i = 0; i < 8; ++i) {
    const FirstOrderOperator d = twistor_derivative(i, 0, 1);
    for (int l = 0; l < 8; ++l) {
      const int k = l ^ i;
      const int sign = hand_product(k, i).sign * (i == 0 ? 1 : -1);
      EXPECT_EQ(d.coeff(k), e0g(8, l, Rational(sign))) << i << "," << l;
    }
  }
}

TEST(TwistorDerivative, CliffordRelations) {
  for (int n : {1, 2}) {
    for (int k = 0; k < n; ++k) {
      const SecondOrderOperator diag = Rational(-2) * block_laplacian(k, n);
      for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
          const SecondOrderOperator ac = op_anticommutator(twistor_derivative(i, k, n), twistor_derivative(j, k, n));
          EXPECT_TRUE(op_equal(ac, i == j ? diag : SecondOrderOperator(8 * n, 8 * n))) << n << k << i << j;
        }
      }
    }
  }
}

TEST(TwistorDerivative, Distinct) {
  EXPECT_FALSE(op_equal(twistor_derivative(1, 0, 1), twistor_derivative(2, 0, 1)));
  EXPECT_TRUE(op_anticommutator(dirac(8), FirstOrderOperator(8, 8)).is_zero());
  EXPECT_THROW(twistor_derivative(8, 0, 1), std::out_of_range);
  EXPECT_THROW(twistor_derivative(0, 1, 1), std::out_of_range);
}

TEST(HermitianDerivative, RoutesAgreeAndAverageToDirac) {
  for (int n : {1, 2}) {
    for (int k = 0; k < n; ++k) {
      FirstOrderOperator sum(8 * n, 8 * n);
      for (int i = 0; i < 8; ++i) {
        EXPECT_TRUE(op_equal(hermitian_derivative_direct(i, k, n), hermitian_derivative_via_twistor(i, k, n)));
        sum = sum + hermitian_derivative(i, k, n);
      }
      EXPECT_EQ(Rational(1, 8) * sum, block_dirac(k, n));
    }
  }
}

TEST(HermitianDerivative, ZeroIsSumOverTwistorDerivatives) {
  FirstOrderOperator want(8, 8);
  for (int j = 0; j < 8; ++j) want = want + left_mul(TensorElement::constant(8, e(j)), twistor_derivative(j, 0, 1));
  EXPECT_EQ(hermitian_derivative(0, 0, 1), want);
  FirstOrderOperator want3(8, 8);
  for (int j = 0; j < 8; ++j) {
    want3 = want3 + left_mul(TensorElement::constant(8, j_apply(3, e(j))), twistor_derivative(j, 0, 1));
  }
  EXPECT_EQ(hermitian_derivative(3, 0, 1), want3);
}

TEST(ActionConsistency, ScalarPolynomials) {
  RationalSampler rng(71);
  std::vector<FirstOrderOperator> ops{dirac(8)};
  for (int i = 0; i < 8; ++i) {
    ops.push_back(twistor_derivative(i, 0, 1));
    ops.push_back(hermitian_derivative(i, 0, 1));
  }
  for (int s = 0; s < 20; ++s) {
    const Polynomial p = rng.scalar_polynomial(8, 3, 4);
    const auto& a = ops[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(ops.size()) - 1))];
    const auto& b = ops[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(ops.size()) - 1))];
    EXPECT_EQ(op_apply(op_anticommutator(a, b), p), op_apply(a, op_apply(b, p)) + op_apply(b, op_apply(a, p)));
  }
}

TEST(ActionConsistency, CliffordCoefficientPolynomials) {
  RationalSampler rng(72);
  for (int s = 0; s < 20; ++s) {
    const Polynomial p = rng.clifford_polynomial(8, 3, 3);
    const auto a = twistor_derivative(rng.uniform(0, 7), 0, 1);
    const auto b = twistor_derivative(rng.uniform(0, 7), 0, 1);
    EXPECT_EQ(op_apply(op_anticommutator(a, b), p), op_apply(a, op_apply(b, p)) + op_apply(b, op_apply(a, p)));
  }
}

TEST(Operators, LinearityOfApplication) {
  RationalSampler rng(73);
  const FirstOrderOperator d = hermitian_derivative(5, 0, 1);
  for (int s = 0; s < 10; ++s) {
    const Polynomial p = rng.scalar_polynomial(8, 3, 4);
    const Polynomial q = rng.scalar_polynomial(8, 3, 4);
    const Rational c = rng.rational();
    EXPECT_EQ(op_apply(d, p + c * q), op_apply(d, p) + c * op_apply(d, q));
  }
}

TEST(Operators, ShapeErrors) {
  EXPECT_THROW(dirac(8) + dirac(16), std::invalid_argument);
  EXPECT_THROW(op_anticommutator(dirac(8), dirac(16)), std::invalid_argument);
  SecondOrderOperator s(8, 8);
  EXPECT_THROW(s.add_term(8, 0, one(8)), std::out_of_range);
  EXPECT_THROW(s.add_term(0, 0, one(16)), std::invalid_argument);
}

TEST(ScalarMonomials, Count) {
  // Monomials of degree <= 2 in 3 variables: C(5, 2) = 10.
  EXPECT_EQ(scalar_monomials(3, 2).size(), 10U);
}

}  // namespace
