#pragma once

#include <array>
#include <span>
#include <vector>

#include "octowitt/clifford.hpp"
#include "octowitt/polynomial.hpp"
#include "octowitt/tensor.hpp"
#include "octowitt/witt_recipes.hpp"

namespace octowitt {

/// Omega-hat_k = sum_i conj(e_i^k) (x) g_{8k+i} in O^n (x) Cl_{8n}.
MultiTensorElement omega_multi(int block, int n);

/// f[k][i] = J_i(Omega_k).
struct WittBasis {
  int n = 1;
  std::vector<std::array<TensorElement, 8>> f;

  [[nodiscard]] const TensorElement& at(int block, int i) const {
    return f.at(static_cast<std::size_t>(block)).at(static_cast<std::size_t>(i));
  }
};

struct MultiWittBasis {
  int n = 1;
  std::vector<std::array<MultiTensorElement, 8>> f;

  [[nodiscard]] const MultiTensorElement& at(int block, int i) const {
    return f.at(static_cast<std::size_t>(block)).at(static_cast<std::size_t>(i));
  }
};

WittBasis witt_basis(int n);
MultiWittBasis witt_basis_multi(int n);

/// Eight twistor vectors of block `block`, in block-local coordinates:
/// vectors[i][l] is the coefficient of g_{8*block+l} in X_i.
struct TwistorFrame {
  int block = 0;
  int n = 1;
  std::array<std::vector<Rational>, 8> vectors;

  /// X_i as e0 (x) (grade-1) in O (x) Cl_{8n}.
  [[nodiscard]] TensorElement embedded(int i) const;
  /// X_i as a grade-1 multivector in Cl_{8n}.
  [[nodiscard]] Multivector multivector(int i) const;
  friend bool operator==(const TwistorFrame&, const TwistorFrame&) = default;
};

struct HermitianFrame {
  int block = 0;
  int n = 1;
  std::array<TensorElement, 8> z;
  friend bool operator==(const HermitianFrame&, const HermitianFrame&) = default;
};

/// X in R^8 (n = 1).
TwistorFrame twistor_vectors(std::span<const Rational> x);
/// Block `block` of X in R^{8n}; only x[8*block .. 8*block+7] are read.
TwistorFrame twistor_vectors(std::span<const Rational> x, int block, int n);

/// Both J_i(Omega Phi(X)) and f_i J_i(Phi(X)) are formed; a disagreement
/// throws std::logic_error.
HermitianFrame hermitian_variables(std::span<const Rational> x);
HermitianFrame hermitian_variables(std::span<const Rational> x, int block, int n);

/// Throws std::logic_error if a recovered X_i leaves e0 (x) span(block).
TwistorFrame twistor_from_hermitian(const HermitianFrame& frame);
HermitianFrame hermitian_from_twistor(const TwistorFrame& frame);

/// Evaluation of (1/8) m sum_j (-1)^sigma(j,i) f_j^k against e0 (x) g_{8k+i},
/// where m is the left multiplier.
struct GeneratorExpression {
  int i = 0;
  int block = 0;
  TensorElement evaluated;
  TensorElement expected;
  bool holds = false;
};

/// Left multiplier e_i, as the identity is usually stated.
GeneratorExpression express_generator(int i, int block, const WittBasis& basis);
/// Left multiplier conj(e_i). Omega_k carries conj(e_i) in front of g_{8k+i},
/// so this is the form the averaging projection yields for every i.
GeneratorExpression express_generator_conjugate(int i, int block, const WittBasis& basis);

struct WittDecomposition {
  int n = 1;
  std::vector<TwistorFrame> twistors;
  std::vector<HermitianFrame> hermitians;
  TensorElement target;          // embed_vector(X)
  TensorElement reconstruction;  // (1/8) sum_j sum_i Z_i^j
  bool exact = false;
};

/// Throws std::invalid_argument unless x.size() == 8n.
WittDecomposition witt_decompose(std::span<const Rational> x, int n);

/// The O^n (x) Cl_{8n} variant: Z_i^j = f_i^j J_i(Phi_j(X^j)) with Phi_j
/// placing block j in slot j. The target is sum_j e0^j (x) X^j.
struct MultiWittDecomposition {
  int n = 1;
  std::vector<std::array<MultiTensorElement, 8>> hermitians;
  MultiTensorElement target;
  MultiTensorElement reconstruction;
  bool exact = false;
};

MultiWittDecomposition witt_decompose_multi(std::span<const Rational> x, int n);

struct AnticommutationCheck {
  Rational norm2;
  /// anticommutators[i][j] = X_i X_j + X_j X_i in Cl_{8n}.
  std::array<std::array<Multivector, 8>, 8> anticommutators;
  /// gram[i][j] = (X_i, X_j).
  std::array<std::array<Rational, 8>, 8> gram;
  bool anticommutation_holds = false;
  bool gram_holds = false;
};

AnticommutationCheck twistor_anticommutation(std::span<const Rational> x);
AnticommutationCheck twistor_anticommutation(std::span<const Rational> x, int block, int n);

/// X_i^a X_j^b + X_j^b X_i^a = 0 for all i, j and blocks a != b.
bool cross_block_anticommutation(std::span<const Rational> x, int n);

/// Formal coordinates: everything as polynomials in x_0..x_{8n-1}.
std::array<Polynomial, 8> formal_twistor_vectors(int block, int n);
/// Both constructions are formed and compared; throws std::logic_error on
/// disagreement.
std::array<Polynomial, 8> formal_hermitian_variables(int block, int n);
std::array<Polynomial, 8> formal_twistor_from_hermitian(const std::array<Polynomial, 8>& z);
std::array<Polynomial, 8> formal_hermitian_from_twistor(const std::array<Polynomial, 8>& xs);

/// X_i X_j + X_j X_i == -2 (sum_k x_k^2) delta_ij over the block's variables.
bool formal_twistor_anticommutation(int block, int n);

/// Signed index form of a formal twistor vector: entries[l] = {sign, k}
/// meaning the coefficient of g_{8*block+l} is sign * x_{8*block+k}.
struct SignedVariable {
  int sign = 0;
  int var = -1;
  friend bool operator==(const SignedVariable&, const SignedVariable&) = default;
};
std::array<SignedVariable, 8> signed_pattern(const Polynomial& twistor, int block);

/// The e_j-component of p as a polynomial with e0 (x) Cl coefficients.
Polynomial polynomial_component(const Polynomial& p, int j);

/// signs[j] = s when the e_j-component of z equals s * X_j, 0 otherwise.
std::array<int, 8> hermitian_sign_pattern(const Polynomial& z, const std::array<Polynomial, 8>& xs);

}  // namespace octowitt
