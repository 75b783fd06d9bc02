#include "octowitt/involutions.hpp"

#include <stdexcept>

namespace octowitt {

namespace {

void check_index(int j, const char* what) {
  if (j < 0 || j > 7) throw std::out_of_range(std::string(what) + ": index outside 0..7");
}

std::array<int, 8> derive_signs(int j) {
  std::array<int, 8> sign{};
  const InvolutionIndex idx(j);
  sign[0] = 1;
  sign[1] = idx.digit(1) ? -1 : 1;
  sign[2] = idx.digit(2) ? -1 : 1;
  sign[4] = idx.digit(3) ? -1 : 1;
  // Close under basis products until all seven imaginary units are reached.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 1; a < 8; ++a) {
      for (int b = 1; b < 8; ++b) {
        if (a == b || sign[a] == 0 || sign[b] == 0) continue;
        const int c = basis_mul(a, b).index;
        if (sign[c] == 0) {
          sign[c] = sign[a] * sign[b];
          changed = true;
        }
      }
    }
  }
  return sign;
}

}  // namespace

InvolutionIndex::InvolutionIndex(int j) : j_(j) { check_index(j, "InvolutionIndex"); }

const std::array<std::array<int, 8>, 8>& j_sign_table() {
  static const auto table = [] {
    std::array<std::array<int, 8>, 8> t{};
    for (int j = 0; j < 8; ++j) t[j] = derive_signs(j);
    return t;
  }();
  return table;
}

int j_sign(int j, int i) {
  check_index(j, "j_sign");
  check_index(i, "j_sign");
  return j_sign_table()[j][i];
}

bool j_signs_path_independent(int j) {
  check_index(j, "j_signs_path_independent");
  const auto& s = j_sign_table()[j];
  for (int a = 1; a < 8; ++a) {
    for (int b = 1; b < 8; ++b) {
      if (a == b) continue;
      if (s[basis_mul(a, b).index] != s[a] * s[b]) return false;
    }
  }
  return true;
}

Octonion j_apply(int j, const Octonion& x) {
  check_index(j, "j_apply");
  const auto& s = j_sign_table()[j];
  auto c = x.coeffs();
  for (int i = 0; i < 8; ++i) {
    if (s[i] < 0) c[i] = -c[i];
  }
  return Octonion(std::move(c));
}

TensorElement j_apply_tensor(int j, const TensorElement& t) {
  return t.map_coefficients([j](const Octonion& c) { return j_apply(j, c); });
}

MultiTensorElement j_apply_tensor(int j, const MultiTensorElement& t) {
  return t.map_coefficients([j](const MultiOctonion& c) {
    std::vector<Octonion> slots;
    slots.reserve(c.size());
    for (const auto& s : c.slots()) slots.push_back(j_apply(j, s));
    return MultiOctonion(std::move(slots));
  });
}

const std::array<std::array<int, 8>, 8>& sigma_table() {
  static const auto table = [] {
    std::array<std::array<int, 8>, 8> t{};
    for (int j = 0; j < 8; ++j) {
      for (int i = 0; i < 8; ++i) {
        const Octonion image = j_apply(j, conj(Octonion::basis(i)));
        const Rational& c = image[static_cast<std::size_t>(i)];
        if (c == Rational(1)) {
          t[j][i] = 0;
        } else if (c == Rational(-1)) {
          t[j][i] = 1;
        } else {
          throw std::logic_error("sigma: J_j(conj(e_i)) is not +-e_i");
        }
      }
    }
    return t;
  }();
  return table;
}

int sigma(int j, int i) {
  check_index(j, "sigma");
  check_index(i, "sigma");
  return sigma_table()[j][i];
}

Octonion projection(int i, const Octonion& x) {
  check_index(i, "projection");
  Octonion sum;
  for (int j = 0; j < 8; ++j) {
    const Octonion image = j_apply(j, x);
    if (sigma(j, i) == 0) {
      sum += image;
    } else {
      sum -= image;
    }
  }
  return Rational(1, 8) * (Octonion::basis(i) * sum);
}

Rational project_coefficient(int i, const Octonion& x) {
  const Octonion p = projection(i, x);
  if (!p.is_real()) throw std::logic_error("project_coefficient: averaged value is not real");
  return p[0];
}

TensorElement tensor_projection(int i, const TensorElement& p) {
  check_index(i, "tensor_projection");
  TensorElement sum(p.dim());
  for (int j = 0; j < 8; ++j) {
    const TensorElement image = j_apply_tensor(j, p);
    if (sigma(j, i) == 0) {
      sum += image;
    } else {
      sum -= image;
    }
  }
  return Rational(1, 8) * oct_left_mul(Octonion::basis(i), sum);
}

Multivector project_tensor_coefficient(int i, const TensorElement& p) {
  const TensorElement t = tensor_projection(i, p);
  if (!is_clifford(t)) {
    throw std::logic_error("project_tensor_coefficient: averaged value leaves e0 (x) Cl");
  }
  return to_multivector(t);
}

InvolutionIndex group_compose(InvolutionIndex i, InvolutionIndex j) {
  return InvolutionIndex(i.value() ^ j.value());
}

bool phi_invariance(int j) {
  check_index(j, "phi_invariance");
  const auto& s = j_sign_table()[j];
  for (const auto& [a, b, c] : kFanoTriples) {
    if (s[a] * s[b] * s[c] != 1) return false;
  }
  return s[0] == 1;
}

}  // namespace octowitt
