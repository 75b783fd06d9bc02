#include "octowitt/octonion.hpp"

#include <ostream>
#include <stdexcept>

namespace octowitt {

namespace {

struct MulTable {
  std::array<std::array<BasisProduct, 8>, 8> cells{};

  MulTable() {
    for (int i = 0; i < 8; ++i) {
      cells[0][i] = {1, i};
      cells[i][0] = {1, i};
    }
    for (int i = 1; i < 8; ++i) cells[i][i] = {-1, 0};
    for (const auto& [a, b, c] : kFanoTriples) {
      // Each oriented line is a quaternionic triple: cyclic products are +.
      const std::array<std::array<int, 3>, 3> rotations{{{a, b, c}, {b, c, a}, {c, a, b}}};
      for (const auto& [x, y, z] : rotations) {
        cells[x][y] = {1, z};
        cells[y][x] = {-1, z};
      }
    }
  }
};

const MulTable& table() {
  static const MulTable t;
  return t;
}

}  // namespace

BasisProduct basis_mul(int i, int j) {
  if (i < 0 || i > 7 || j < 0 || j > 7) throw std::out_of_range("basis_mul: index outside 0..7");
  return table().cells[i][j];
}

Octonion Octonion::basis(int i, const Rational& scale) {
  if (i < 0 || i > 7) throw std::out_of_range("octonion basis index outside 0..7");
  Octonion o;
  o.coeffs_[i] = scale;
  return o;
}

bool Octonion::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool Octonion::is_real() const {
  for (std::size_t i = 1; i < kDim; ++i) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

Octonion& Octonion::operator+=(const Octonion& rhs) {
  for (std::size_t i = 0; i < kDim; ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Octonion& Octonion::operator-=(const Octonion& rhs) {
  for (std::size_t i = 0; i < kDim; ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Octonion Octonion::operator-() const {
  Octonion r;
  for (std::size_t i = 0; i < kDim; ++i) r.coeffs_[i] = -coeffs_[i];
  return r;
}

Octonion operator*(const Rational& s, const Octonion& a) {
  Octonion r;
  if (s.is_zero()) return r;
  for (std::size_t i = 0; i < Octonion::kDim; ++i) r.coeffs_[i] = s * a.coeffs_[i];
  return r;
}

Octonion operator*(const Octonion& a, const Octonion& b) {
  Octonion r;
  const auto& cells = table().cells;
  for (int i = 0; i < 8; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; j < 8; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      const auto [sign, k] = cells[i][j];
      const Rational term = a.coeffs_[i] * b.coeffs_[j];
      if (sign > 0) {
        r.coeffs_[k] += term;
      } else {
        r.coeffs_[k] -= term;
      }
    }
  }
  return r;
}

Octonion conj(const Octonion& a) {
  auto c = a.coeffs();
  for (std::size_t i = 1; i < Octonion::kDim; ++i) c[i] = -c[i];
  return Octonion(std::move(c));
}

Rational inner(const Octonion& p, const Octonion& q) {
  Rational sum;
  for (std::size_t i = 0; i < Octonion::kDim; ++i) sum += p[i] * q[i];
  return sum;
}

Rational norm2(const Octonion& a) { return inner(a, a); }

Octonion inverse(const Octonion& a) {
  const Rational n = norm2(a);
  if (n.is_zero()) throw std::domain_error("octonion: inverse of zero");
  return (Rational(1) / n) * conj(a);
}

std::ostream& operator<<(std::ostream& os, const Octonion& a) {
  bool first = true;
  for (std::size_t i = 0; i < Octonion::kDim; ++i) {
    if (a[i].is_zero()) continue;
    if (!first) os << " + ";
    os << a[i] << "*e" << i;
    first = false;
  }
  if (first) os << "0";
  return os;
}

}  // namespace octowitt
