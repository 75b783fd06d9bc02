#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "octowitt/rational.hpp"
#include "octowitt/tensor.hpp"

namespace octowitt {

using Exponents = std::vector<int>;

/// Polynomial in x_0..x_{nvars-1} with coefficients in O (x) Cl_dim.
/// Coefficient products use the tensor product with the left factor's
/// coefficient on the left.
class Polynomial {
 public:
  using Terms = std::map<Exponents, TensorElement>;

  Polynomial() = default;
  Polynomial(int nvars, int dim);

  static Polynomial constant(int nvars, const TensorElement& c);
  /// c * x_k.
  static Polynomial variable(int nvars, int k, const TensorElement& c);
  static Polynomial monomial(const Exponents& exps, const TensorElement& c);
  /// Formal vector sum_k x_k (e0 (x) g_k) on variables [first, first + count).
  static Polynomial formal_vector(int nvars, int first, int count);

  [[nodiscard]] int nvars() const { return nvars_; }
  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] int degree() const;
  [[nodiscard]] TensorElement coeff(const Exponents& exps) const;
  /// Coefficient of the degree-one monomial x_k.
  [[nodiscard]] TensorElement linear_coeff(int k) const;

  void add_term(const Exponents& exps, const TensorElement& c);

  template <typename F>
  [[nodiscard]] Polynomial map_coefficients(F&& f) const {
    Polynomial r(nvars_, dim_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

  [[nodiscard]] Polynomial derivative(int k) const;
  [[nodiscard]] TensorElement evaluate(std::span<const Rational> point) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const;
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void check_shape(const Polynomial& other) const;

  int nvars_ = 0;
  int dim_ = 0;
  Terms terms_;
};

Polynomial left_mul(const TensorElement& a, const Polynomial& p);
Polynomial right_mul(const Polynomial& p, const TensorElement& a);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace octowitt
