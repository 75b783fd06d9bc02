#pragma once

#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "octowitt/polynomial.hpp"
#include "octowitt/tensor.hpp"
#include "octowitt/witt_recipes.hpp"

namespace octowitt {

/// D = sum_k c_k d/dx_k with constant coefficients c_k in O (x) Cl_dim.
class FirstOrderOperator {
 public:
  FirstOrderOperator() = default;
  FirstOrderOperator(int nvars, int dim);
  explicit FirstOrderOperator(std::vector<TensorElement> coeffs);

  [[nodiscard]] int nvars() const { return static_cast<int>(coeffs_.size()); }
  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] const std::vector<TensorElement>& coeffs() const { return coeffs_; }
  [[nodiscard]] const TensorElement& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  [[nodiscard]] bool is_zero() const;

  template <typename F>
  [[nodiscard]] FirstOrderOperator map_coefficients(F&& f) const {
    std::vector<TensorElement> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    FirstOrderOperator r(std::move(out));
    r.dim_ = dim_;
    return r;
  }

  friend FirstOrderOperator operator+(const FirstOrderOperator& a, const FirstOrderOperator& b);
  friend FirstOrderOperator operator*(const Rational& s, const FirstOrderOperator& d);
  friend bool operator==(const FirstOrderOperator&, const FirstOrderOperator&) = default;

 private:
  int dim_ = 0;
  std::vector<TensorElement> coeffs_;
};

FirstOrderOperator left_mul(const TensorElement& a, const FirstOrderOperator& d);
FirstOrderOperator right_mul(const FirstOrderOperator& d, const TensorElement& a);

/// sum over k <= l of c_kl d^2/dx_k dx_l. Zero coefficients are not stored.
class SecondOrderOperator {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, TensorElement>;

  SecondOrderOperator() = default;
  SecondOrderOperator(int nvars, int dim);

  [[nodiscard]] int nvars() const { return nvars_; }
  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] TensorElement coeff(int k, int l) const;

  /// Accumulates onto the unordered pair {k, l}.
  void add_term(int k, int l, const TensorElement& c);

  friend SecondOrderOperator operator*(const Rational& s, const SecondOrderOperator& d);
  friend bool operator==(const SecondOrderOperator&, const SecondOrderOperator&) = default;

 private:
  int nvars_ = 0;
  int dim_ = 0;
  Terms terms_;
};

/// d_X = sum_k (e0 (x) g_k) d/dx_k on R^nvars; nvars must be a multiple of 8.
FirstOrderOperator dirac(int nvars);
/// Dirac operator of block k only, inside R^{8n}.
FirstOrderOperator block_dirac(int block, int n);

/// d_{X_i} = Phi^{-1}(Phi(d_X) conj(e_i)) on block k.
FirstOrderOperator twistor_derivative(int i, int block, int n);

/// d_{Z_i} = f_i J_i(Phi(d_X)).
FirstOrderOperator hermitian_derivative_direct(int i, int block, int n);
/// d_{Z_i} = sum_j J_i(e_j) d_{X_j}.
FirstOrderOperator hermitian_derivative_via_twistor(int i, int block, int n);
/// Forms both and throws std::logic_error if they differ.
FirstOrderOperator hermitian_derivative(int i, int block, int n);

/// Delta = sum_k d^2/dx_k^2 (coefficient e0 (x) 1) over all variables.
SecondOrderOperator laplacian(int nvars);
/// Laplacian over block k's variables only.
SecondOrderOperator block_laplacian(int block, int n);

/// sum_k c_k * dp/dx_k, each c_k multiplying on the left.
Polynomial op_apply(const FirstOrderOperator& d, const Polynomial& p);
Polynomial op_apply(const SecondOrderOperator& d, const Polynomial& p);

/// D1 D2 + D2 D1 as a second-order operator: pair coefficient
/// c_k d_l + d_k c_l accumulated on {k, l}.
SecondOrderOperator op_anticommutator(const FirstOrderOperator& a, const FirstOrderOperator& b);

/// Structural equality, cross-checked by applying both operators to every
/// scalar monomial of degree <= 2.
bool op_equal(const FirstOrderOperator& a, const FirstOrderOperator& b);
bool op_equal(const SecondOrderOperator& a, const SecondOrderOperator& b);

/// Scalar monomials x^e with e of total degree <= max_degree, coefficient e0 (x) 1.
std::vector<Polynomial> scalar_monomials(int nvars, int max_degree);

std::ostream& operator<<(std::ostream& os, const FirstOrderOperator& d);

}  // namespace octowitt
