#pragma once

#include <array>

#include "octowitt/clifford.hpp"
#include "octowitt/octonion.hpp"
#include "octowitt/tensor.hpp"

namespace octowitt {

/// Index j in 0..7 of the involution J_j, read in binary as j = 4*j3 + 2*j2 + j1.
/// J_j flips e1 iff j1 = 1, e2 iff j2 = 1, e4 iff j3 = 1.
class InvolutionIndex {
 public:
  constexpr InvolutionIndex() = default;
  explicit InvolutionIndex(int j);

  [[nodiscard]] constexpr int value() const { return j_; }
  /// Binary digit d in {1, 2, 3} (d = 1 is the units bit).
  [[nodiscard]] constexpr int digit(int d) const { return (j_ >> (d - 1)) & 1; }

  friend constexpr bool operator==(InvolutionIndex, InvolutionIndex) = default;

 private:
  int j_ = 0;
};

/// sign[j][i] = +1 or -1 with J_j(e_i) = sign * e_i. Built once: the
/// generators e1, e2, e4 take their sign from the binary digits of j and every
/// other basis element is reached through basis products.
const std::array<std::array<int, 8>, 8>& j_sign_table();
int j_sign(int j, int i);

/// Every product e_a e_b = +-e_c (a, b >= 1, a != b) satisfies
/// sign(c) = sign(a) sign(b) for J_j, so the derived signs do not depend on
/// which product was used to reach e_c.
bool j_signs_path_independent(int j);

Octonion j_apply(int j, const Octonion& x);
TensorElement j_apply_tensor(int j, const TensorElement& t);
MultiTensorElement j_apply_tensor(int j, const MultiTensorElement& t);

/// sigma(j, i) in {0, 1} with J_j(conj(e_i)) = (-1)^sigma e_i, computed from
/// j_apply at first use.
const std::array<std::array<int, 8>, 8>& sigma_table();
int sigma(int j, int i);

/// x_i via (1/8) e_i sum_j (-1)^sigma(j,i) J_j(x); throws std::logic_error if
/// the averaged octonion is not real.
Rational project_coefficient(int i, const Octonion& x);
/// The whole averaged octonion (1/8) e_i sum_j (-1)^sigma(j,i) J_j(x).
Octonion projection(int i, const Octonion& x);

/// p_i for p = sum e_i p_i via the same averaging lifted to O (x) Cl_m.
Multivector project_tensor_coefficient(int i, const TensorElement& p);
TensorElement tensor_projection(int i, const TensorElement& p);

/// Index of J_i o J_j.
InvolutionIndex group_compose(InvolutionIndex i, InvolutionIndex j);

/// J_j pulls each oriented triple of the 3-form back to itself with
/// coefficient +1.
bool phi_invariance(int j);

}  // namespace octowitt
