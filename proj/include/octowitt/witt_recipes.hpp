#pragma once

// The Witt constructions are linear recipes built from three moves: the
// block isometry Phi (and its inverse), multiplication by constant tensor
// elements, and the involutions J_i applied to coefficients. Writing them
// once over any "tensor carrier" lets the same code run on concrete vectors
// (TensorElement), formal coordinates (Polynomial) and constant-coefficient
// operators (FirstOrderOperator), where d/dx_k plays the role of x_k.

#include <array>
#include <concepts>
#include <utility>

#include "octowitt/involutions.hpp"
#include "octowitt/tensor.hpp"

namespace octowitt {

inline TensorElement left_mul(const TensorElement& a, const TensorElement& t) { return a * t; }
inline TensorElement right_mul(const TensorElement& t, const TensorElement& a) { return t * a; }

/// Applies f to every TensorElement a carrier is built from. A bare
/// TensorElement is its own single coefficient.
template <typename C, typename F>
C carrier_map(const C& c, F&& f) {
  return c.map_coefficients(std::forward<F>(f));
}

template <typename F>
TensorElement carrier_map(const TensorElement& t, F&& f) {
  return f(t);
}

template <typename C>
concept TensorCarrier = requires(const C& c, const TensorElement& t, const Rational& r) {
  { c.dim() } -> std::convertible_to<int>;
  { carrier_map(c, [](const TensorElement& x) { return x; }) } -> std::same_as<C>;
  { left_mul(t, c) } -> std::same_as<C>;
  { right_mul(c, t) } -> std::same_as<C>;
  { c + c } -> std::same_as<C>;
  { r * c } -> std::same_as<C>;
};

/// Phi on block k: e0 (x) sum_i x_i g_{8k+i}  ->  (sum_i x_i e_i) (x) 1.
/// Throws std::domain_error for anything outside e0 (x) span(g_{8k..8k+7}).
TensorElement phi_block(const TensorElement& v, int block);
/// Phi^{-1} on block k: c (x) 1  ->  e0 (x) sum_i c_i g_{8k+i}.
/// Throws std::domain_error when a non-scalar blade is present.
TensorElement phi_block_inverse(const TensorElement& t, int block);

/// Omega_k = sum_i conj(e_i) (x) g_{8k+i} in O (x) Cl_{8n}.
TensorElement omega(int block, int n);

/// c (x) 1 in O (x) Cl_dim.
inline TensorElement octonion_constant(int dim, const Octonion& c) { return TensorElement::constant(dim, c); }

namespace recipe {

template <TensorCarrier C>
C phi(const C& x, int block) {
  return carrier_map(x, [block](const TensorElement& v) { return phi_block(v, block); });
}

template <TensorCarrier C>
C phi_inverse(const C& x, int block) {
  return carrier_map(x, [block](const TensorElement& t) { return phi_block_inverse(t, block); });
}

template <TensorCarrier C>
C involution(const C& x, int j) {
  return carrier_map(x, [j](const TensorElement& t) { return j_apply_tensor(j, t); });
}

/// X_i = Phi^{-1}(Phi(X) conj(e_i)).
template <TensorCarrier C>
C twistor(const C& x, int i, int block) {
  const TensorElement ebar = octonion_constant(x.dim(), conj(Octonion::basis(i)));
  return phi_inverse(right_mul(phi(x, block), ebar), block);
}

/// Z_i = J_i(Omega_k Phi(X)).
template <TensorCarrier C>
C hermitian_via_omega(const C& x, int i, int block, int n) {
  return involution(left_mul(omega(block, n), phi(x, block)), i);
}

/// Z_i = f_i^k J_i(Phi(X)) with f_i^k = J_i(Omega_k).
template <TensorCarrier C>
C hermitian_via_witt(const C& x, int i, int block, int n) {
  return left_mul(j_apply_tensor(i, omega(block, n)), involution(phi(x, block), i));
}

/// X_i = (1/8) e_i sum_j (-1)^sigma(j,i) Z_j.
template <TensorCarrier C>
C twistor_from_hermitian(const std::array<C, 8>& z, int i) {
  C sum = Rational(0) * z[0];
  for (int j = 0; j < 8; ++j) {
    sum = sum + Rational(sigma(j, i) == 0 ? 1 : -1) * z[static_cast<std::size_t>(j)];
  }
  return Rational(1, 8) * left_mul(octonion_constant(sum.dim(), Octonion::basis(i)), sum);
}

/// Z_i = sum_j J_i(e_j) X_j.
template <TensorCarrier C>
C hermitian_from_twistor(const std::array<C, 8>& xs, int i) {
  C sum = Rational(0) * xs[0];
  for (int j = 0; j < 8; ++j) {
    const Octonion coeff = j_apply(i, Octonion::basis(j));
    sum = sum + left_mul(octonion_constant(sum.dim(), coeff), xs[static_cast<std::size_t>(j)]);
  }
  return sum;
}

}  // namespace recipe

}  // namespace octowitt
