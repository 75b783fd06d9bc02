#include "octowitt/polynomial.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace octowitt {

Polynomial::Polynomial(int nvars, int dim) : nvars_(nvars), dim_(dim) {
  if (nvars < 0) throw std::invalid_argument("polynomial: negative variable count");
  if (dim < 0 || dim > kMaxGenerators) throw std::out_of_range("polynomial: dim out of range");
}

Polynomial Polynomial::constant(int nvars, const TensorElement& c) {
  Polynomial p(nvars, c.dim());
  p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int k, const TensorElement& c) {
  if (k < 0 || k >= nvars) throw std::out_of_range("polynomial: variable index out of range");
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(k)] = 1;
  Polynomial p(nvars, c.dim());
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::monomial(const Exponents& exps, const TensorElement& c) {
  Polynomial p(static_cast<int>(exps.size()), c.dim());
  p.add_term(exps, c);
  return p;
}

Polynomial Polynomial::formal_vector(int nvars, int first, int count) {
  if (first < 0 || first + count > nvars) throw std::out_of_range("formal_vector: range out of bounds");
  Polynomial p(nvars, nvars);
  for (int k = first; k < first + count; ++k) {
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(k)] = 1;
    p.add_term(e, TensorElement::from_multivector(Multivector::generator(nvars, k)));
  }
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

TensorElement Polynomial::coeff(const Exponents& exps) const {
  const auto it = terms_.find(exps);
  return it == terms_.end() ? TensorElement(dim_) : it->second;
}

TensorElement Polynomial::linear_coeff(int k) const {
  if (k < 0 || k >= nvars_) throw std::out_of_range("polynomial: variable index out of range");
  Exponents e(static_cast<std::size_t>(nvars_), 0);
  e[static_cast<std::size_t>(k)] = 1;
  return coeff(e);
}

void Polynomial::add_term(const Exponents& exps, const TensorElement& c) {
  if (static_cast<int>(exps.size()) != nvars_) {
    throw std::invalid_argument("polynomial: exponent vector length " + std::to_string(exps.size()) +
                                " != nvars " + std::to_string(nvars_));
  }
  for (int x : exps) {
    if (x < 0) throw std::invalid_argument("polynomial: negative exponent");
  }
  if (c.dim() != dim_) throw std::invalid_argument("polynomial: coefficient dim mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial Polynomial::derivative(int k) const {
  if (k < 0 || k >= nvars_) throw std::out_of_range("polynomial: variable index out of range");
  Polynomial r(nvars_, dim_);
  const auto uk = static_cast<std::size_t>(k);
  for (const auto& [e, c] : terms_) {
    if (e[uk] == 0) continue;
    Exponents d = e;
    d[uk] -= 1;
    r.add_term(d, Rational(e[uk]) * c);
  }
  return r;
}

TensorElement Polynomial::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("polynomial: point dimension mismatch");
  TensorElement sum(dim_);
  for (const auto& [e, c] : terms_) {
    Rational m(1);
    for (std::size_t k = 0; k < e.size(); ++k) {
      for (int p = 0; p < e[k]; ++p) m *= point[k];
    }
    sum += m * c;
  }
  return sum;
}

void Polynomial::check_shape(const Polynomial& other) const {
  if (nvars_ != other.nvars_ || dim_ != other.dim_) {
    throw std::invalid_argument("polynomial: shape mismatch");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_shape(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_shape(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial Polynomial::operator-() const {
  return map_coefficients([](const TensorElement& c) { return -c; });
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  return p.map_coefficients([&s](const TensorElement& c) { return s * c; });
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  p.check_shape(q);
  Polynomial r(p.nvars_, p.dim_);
  for (const auto& [ea, ca] : p.terms_) {
    for (const auto& [eb, cb] : q.terms_) {
      Exponents e = ea;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial left_mul(const TensorElement& a, const Polynomial& p) {
  return p.map_coefficients([&a](const TensorElement& c) { return a * c; });
}

Polynomial right_mul(const Polynomial& p, const TensorElement& a) {
  return p.map_coefficients([&a](const TensorElement& c) { return c * a; });
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "[" << c << "]";
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      os << "*x" << k;
      if (e[k] > 1) os << "^" << e[k];
    }
  }
  return os;
}

}  // namespace octowitt
