#include "octowitt/tensor.hpp"

#include <ostream>

namespace octowitt {

MultiOctonion MultiOctonion::basis(std::size_t n, std::size_t slot, int i, const Rational& scale) {
  if (slot >= n) throw std::out_of_range("multi-octonion slot out of range");
  MultiOctonion m(n);
  m.slots_[slot] = Octonion::basis(i, scale);
  return m;
}

MultiOctonion MultiOctonion::unit(std::size_t n) {
  return MultiOctonion(std::vector<Octonion>(n, Octonion::real(Rational(1))));
}

bool MultiOctonion::is_zero() const {
  for (const auto& s : slots_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

void MultiOctonion::check_size(const MultiOctonion& other) const {
  if (slots_.size() != other.slots_.size()) {
    throw std::invalid_argument("multi-octonion: slot count mismatch");
  }
}

MultiOctonion& MultiOctonion::operator+=(const MultiOctonion& rhs) {
  check_size(rhs);
  for (std::size_t k = 0; k < slots_.size(); ++k) slots_[k] += rhs.slots_[k];
  return *this;
}

MultiOctonion& MultiOctonion::operator-=(const MultiOctonion& rhs) {
  check_size(rhs);
  for (std::size_t k = 0; k < slots_.size(); ++k) slots_[k] -= rhs.slots_[k];
  return *this;
}

MultiOctonion MultiOctonion::operator-() const {
  MultiOctonion r(slots_.size());
  for (std::size_t k = 0; k < slots_.size(); ++k) r.slots_[k] = -slots_[k];
  return r;
}

MultiOctonion operator*(const Rational& s, const MultiOctonion& a) {
  MultiOctonion r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r.slots_[k] = s * a.slots_[k];
  return r;
}

MultiOctonion operator*(const MultiOctonion& a, const MultiOctonion& b) {
  a.check_size(b);
  MultiOctonion r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r.slots_[k] = a.slots_[k] * b.slots_[k];
  return r;
}

TensorElement embed_vector(std::span<const Rational> coords) {
  return TensorElement::from_multivector(Multivector::from_vector(coords));
}

MultiTensorElement multi_embed(std::span<const Rational> coords, std::size_t n) {
  if (coords.size() != 8 * n) throw std::invalid_argument("multi_embed: expected 8n coordinates");
  return MultiTensorElement::from_multivector(Multivector::from_vector(coords), n);
}

TensorElement oct_left_mul(const Octonion& a, const TensorElement& t) {
  return t.map_coefficients([&a](const Octonion& c) { return a * c; });
}

MultiTensorElement multi_oct_left_mul(const MultiOctonion& a, const MultiTensorElement& t) {
  if (a.size() != t.width()) throw std::invalid_argument("multi_oct_left_mul: slot count mismatch");
  return t.map_coefficients([&a](const MultiOctonion& c) { return a * c; });
}

TensorElement oct_right_mul(const TensorElement& t, const Octonion& a) {
  return t.map_coefficients([&a](const Octonion& c) { return c * a; });
}

Multivector octonion_component(const TensorElement& p, int i) {
  if (i < 0 || i > 7) throw std::out_of_range("octonion_component: index outside 0..7");
  Multivector u(p.dim());
  for (const auto& [b, c] : p.terms()) u.add_term(b, c[static_cast<std::size_t>(i)]);
  return u;
}

bool is_clifford(const TensorElement& p) {
  for (const auto& [b, c] : p.terms()) {
    if (!c.is_real()) return false;
  }
  return true;
}

Multivector to_multivector(const TensorElement& p) {
  if (!is_clifford(p)) throw std::domain_error("to_multivector: element has non-real octonion coefficients");
  return octonion_component(p, 0);
}

namespace {

void print_blade(std::ostream& os, Blade b) {
  if (b.grade() == 0) {
    os << "1";
    return;
  }
  bool first = true;
  for (int i : b.indices()) {
    if (!first) os << "*";
    first = false;
    os << "g" << i;
  }
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const TensorElement& t) {
  if (t.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [b, c] : t.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")(x)";
    print_blade(os, b);
  }
  return os;
}

std::ostream& operator<<(std::ostream& os, const MultiTensorElement& t) {
  if (t.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [b, c] : t.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "[";
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "; " : "") << c[k];
    os << "](x)";
    print_blade(os, b);
  }
  return os;
}

}  // namespace octowitt
