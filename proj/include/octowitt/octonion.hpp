#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>

#include "octowitt/rational.hpp"

namespace octowitt {

/// Oriented line of the Fano plane: e_a * e_b = e_c.
struct FanoTriple {
  int a;
  int b;
  int c;
  friend bool operator==(const FanoTriple&, const FanoTriple&) = default;
};

/// The seven oriented triples read off the terms of the associative 3-form
/// e^123 + e^145 + e^176 + e^257 + e^246 + e^347 + e^365.
inline constexpr std::array<FanoTriple, 7> kFanoTriples{{
    {1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 5, 7}, {2, 4, 6}, {3, 4, 7}, {3, 6, 5},
}};

struct BasisProduct {
  int sign;   // +1 or -1
  int index;  // 0..7
  friend bool operator==(const BasisProduct&, const BasisProduct&) = default;
};

/// e_i * e_j = sign * e_k.
BasisProduct basis_mul(int i, int j);

class Octonion {
 public:
  static constexpr std::size_t kDim = 8;

  Octonion() = default;
  explicit Octonion(std::array<Rational, kDim> coeffs) : coeffs_(std::move(coeffs)) {}

  static Octonion basis(int i, const Rational& scale = Rational(1));
  static Octonion real(const Rational& value) { return basis(0, value); }

  [[nodiscard]] const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  [[nodiscard]] const std::array<Rational, kDim>& coeffs() const { return coeffs_; }

  [[nodiscard]] bool is_zero() const;
  /// True when only the e0 slot may be nonzero.
  [[nodiscard]] bool is_real() const;

  Octonion& operator+=(const Octonion& rhs);
  Octonion& operator-=(const Octonion& rhs);
  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  Octonion operator-() const;
  friend Octonion operator*(const Rational& s, const Octonion& a);
  friend Octonion operator*(const Octonion& a, const Octonion& b);
  friend bool operator==(const Octonion&, const Octonion&) = default;

 private:
  std::array<Rational, kDim> coeffs_{};
};

Octonion conj(const Octonion& a);
/// (p, q) = Re(conj(p) q) = sum_i p_i q_i.
Rational inner(const Octonion& p, const Octonion& q);
Rational norm2(const Octonion& a);
/// conj(a) / norm2(a); throws std::domain_error for zero.
Octonion inverse(const Octonion& a);

std::ostream& operator<<(std::ostream& os, const Octonion& a);

}  // namespace octowitt
