#include "octowitt/clifford.hpp"

#include <bit>
#include <ostream>
#include <stdexcept>
#include <string>

namespace octowitt {

Blade::Blade(std::initializer_list<int> indices) {
  for (int i : indices) {
    if (i < 0 || i >= kMaxGenerators) throw std::out_of_range("blade index out of range");
    const std::uint64_t bit = std::uint64_t{1} << i;
    if ((mask_ & bit) != 0) throw std::invalid_argument("blade: repeated index");
    mask_ |= bit;
  }
}

Blade Blade::generator(int i) {
  if (i < 0 || i >= kMaxGenerators) throw std::out_of_range("blade index out of range");
  return Blade(std::uint64_t{1} << i);
}

int Blade::grade() const { return std::popcount(mask_); }

std::vector<int> Blade::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(grade()));
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

int Blade::span_end() const { return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_); }

bool BladeOrder::operator()(Blade a, Blade b) const {
  const int ga = a.grade();
  const int gb = b.grade();
  if (ga != gb) return ga < gb;
  // Equal-size sorted index lists differ first at the smallest element of the
  // symmetric difference; the list holding it sorts first.
  const std::uint64_t diff = a.mask() ^ b.mask();
  if (diff == 0) return false;
  const std::uint64_t lowest = diff & (~diff + 1);
  return (a.mask() & lowest) != 0;
}

SignedBlade blade_product(Blade a, Blade b) {
  // Moving each generator of B leftwards past the larger generators of A.
  int swaps = 0;
  for (std::uint64_t m = b.mask(); m != 0; m &= m - 1) {
    const int idx = std::countr_zero(m);
    const std::uint64_t above = idx == 63 ? 0 : (a.mask() >> (idx + 1));
    swaps += std::popcount(above);
  }
  swaps += std::popcount(a.mask() & b.mask());
  return {(swaps % 2 == 0) ? 1 : -1, Blade(a.mask() ^ b.mask())};
}

Multivector::Multivector(int dim) : dim_(dim) {
  if (dim < 0 || dim > kMaxGenerators) throw std::out_of_range("multivector: dim out of range");
}

Multivector Multivector::scalar(int dim, const Rational& value) {
  Multivector u(dim);
  u.add_term(Blade(), value);
  return u;
}

Multivector Multivector::generator(int dim, int i, const Rational& coeff) {
  Multivector u(dim);
  u.add_term(Blade::generator(i), coeff);
  return u;
}

Multivector Multivector::from_vector(std::span<const Rational> coords) {
  Multivector u(static_cast<int>(coords.size()));
  for (std::size_t k = 0; k < coords.size(); ++k) {
    u.add_term(Blade::generator(static_cast<int>(k)), coords[k]);
  }
  return u;
}

Rational Multivector::coeff(Blade b) const {
  const auto it = terms_.find(b);
  return it == terms_.end() ? Rational() : it->second;
}

void Multivector::check_blade(Blade b) const {
  if (b.span_end() > dim_) {
    throw std::out_of_range("multivector: blade uses generator beyond dim " + std::to_string(dim_));
  }
}

void Multivector::check_dim(const Multivector& other) const {
  if (dim_ != other.dim_) {
    throw std::invalid_argument("multivector: dim mismatch " + std::to_string(dim_) + " vs " +
                                std::to_string(other.dim_));
  }
}

void Multivector::add_term(Blade b, const Rational& c) {
  check_blade(b);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  check_dim(rhs);
  for (const auto& [b, c] : rhs.terms_) add_term(b, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  check_dim(rhs);
  for (const auto& [b, c] : rhs.terms_) add_term(b, -c);
  return *this;
}

Multivector Multivector::operator-() const {
  Multivector r(dim_);
  for (const auto& [b, c] : terms_) r.terms_.emplace(b, -c);
  return r;
}

Multivector operator*(const Rational& s, const Multivector& u) {
  Multivector r(u.dim_);
  if (s.is_zero()) return r;
  for (const auto& [b, c] : u.terms_) r.terms_.emplace(b, s * c);
  return r;
}

Multivector operator*(const Multivector& u, const Multivector& v) {
  u.check_dim(v);
  Multivector r(u.dim_);
  for (const auto& [ba, ca] : u.terms_) {
    for (const auto& [bb, cb] : v.terms_) {
      const auto [sign, blade] = blade_product(ba, bb);
      const Rational c = ca * cb;
      r.add_term(blade, sign > 0 ? c : -c);
    }
  }
  return r;
}

Multivector grade(const Multivector& u, int k) {
  if (k < 0 || k > u.dim()) throw std::out_of_range("grade: k outside 0..dim");
  Multivector r(u.dim());
  for (const auto& [b, c] : u.terms()) {
    if (b.grade() == k) r.add_term(b, c);
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const Multivector& u) {
  if (u.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [b, c] : u.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c;
    for (int i : b.indices()) os << "*g" << i;
  }
  return os;
}

}  // namespace octowitt
