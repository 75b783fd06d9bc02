#include "octowitt/diffops.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace octowitt {

namespace {

void check_n(int n) {
  if (n < 1) throw std::invalid_argument("block count must be >= 1");
}

TensorElement unit(int dim) { return TensorElement::from_multivector(Multivector::scalar(dim, Rational(1))); }

void enumerate_exponents(int nvars, int remaining, std::size_t pos, Exponents& cur,
                         std::vector<Exponents>& out) {
  if (pos == cur.size()) {
    out.push_back(cur);
    return;
  }
  for (int d = 0; d <= remaining; ++d) {
    cur[pos] = d;
    enumerate_exponents(nvars, remaining - d, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

FirstOrderOperator::FirstOrderOperator(int nvars, int dim)
    : dim_(dim), coeffs_(static_cast<std::size_t>(nvars), TensorElement(dim)) {}

FirstOrderOperator::FirstOrderOperator(std::vector<TensorElement> coeffs) : coeffs_(std::move(coeffs)) {
  if (!coeffs_.empty()) dim_ = coeffs_.front().dim();
  for (const auto& c : coeffs_) {
    if (c.dim() != dim_) throw std::invalid_argument("operator: coefficient dim mismatch");
  }
}

bool FirstOrderOperator::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

FirstOrderOperator operator+(const FirstOrderOperator& a, const FirstOrderOperator& b) {
  if (a.nvars() != b.nvars() || a.dim_ != b.dim_) throw std::invalid_argument("operator: shape mismatch");
  FirstOrderOperator r = a;
  for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] += b.coeffs_[k];
  return r;
}

FirstOrderOperator operator*(const Rational& s, const FirstOrderOperator& d) {
  return d.map_coefficients([&s](const TensorElement& c) { return s * c; });
}

FirstOrderOperator left_mul(const TensorElement& a, const FirstOrderOperator& d) {
  return d.map_coefficients([&a](const TensorElement& c) { return a * c; });
}

FirstOrderOperator right_mul(const FirstOrderOperator& d, const TensorElement& a) {
  return d.map_coefficients([&a](const TensorElement& c) { return c * a; });
}

SecondOrderOperator::SecondOrderOperator(int nvars, int dim) : nvars_(nvars), dim_(dim) {}

TensorElement SecondOrderOperator::coeff(int k, int l) const {
  const auto it = terms_.find(k <= l ? Key{k, l} : Key{l, k});
  return it == terms_.end() ? TensorElement(dim_) : it->second;
}

void SecondOrderOperator::add_term(int k, int l, const TensorElement& c) {
  if (k < 0 || l < 0 || k >= nvars_ || l >= nvars_) throw std::out_of_range("operator: variable index out of range");
  if (c.dim() != dim_) throw std::invalid_argument("operator: coefficient dim mismatch");
  if (c.is_zero()) return;
  const Key key = k <= l ? Key{k, l} : Key{l, k};
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SecondOrderOperator operator*(const Rational& s, const SecondOrderOperator& d) {
  SecondOrderOperator r(d.nvars_, d.dim_);
  for (const auto& [key, c] : d.terms_) r.add_term(key.first, key.second, s * c);
  return r;
}

FirstOrderOperator dirac(int nvars) {
  if (nvars <= 0 || nvars % 8 != 0) {
    throw std::invalid_argument("dirac: variable count " + std::to_string(nvars) + " is not a positive multiple of 8");
  }
  std::vector<TensorElement> coeffs;
  for (int k = 0; k < nvars; ++k) {
    coeffs.push_back(TensorElement::from_multivector(Multivector::generator(nvars, k)));
  }
  return FirstOrderOperator(std::move(coeffs));
}

FirstOrderOperator block_dirac(int block, int n) {
  check_n(n);
  if (block < 0 || block >= n) throw std::out_of_range("block_dirac: block out of range");
  const int nv = 8 * n;
  std::vector<TensorElement> coeffs(static_cast<std::size_t>(nv), TensorElement(nv));
  for (int i = 0; i < 8; ++i) {
    coeffs[static_cast<std::size_t>(8 * block + i)] =
        TensorElement::from_multivector(Multivector::generator(nv, 8 * block + i));
  }
  return FirstOrderOperator(std::move(coeffs));
}

FirstOrderOperator twistor_derivative(int i, int block, int n) {
  return recipe::twistor(block_dirac(block, n), i, block);
}

FirstOrderOperator hermitian_derivative_direct(int i, int block, int n) {
  return recipe::hermitian_via_witt(block_dirac(block, n), i, block, n);
}

FirstOrderOperator hermitian_derivative_via_twistor(int i, int block, int n) {
  std::array<FirstOrderOperator, 8> partials;
  for (int j = 0; j < 8; ++j) partials[static_cast<std::size_t>(j)] = twistor_derivative(j, block, n);
  return recipe::hermitian_from_twistor(partials, i);
}

FirstOrderOperator hermitian_derivative(int i, int block, int n) {
  FirstOrderOperator direct = hermitian_derivative_direct(i, block, n);
  if (direct != hermitian_derivative_via_twistor(i, block, n)) {
    throw std::logic_error("hermitian_derivative: construction routes disagree for i = " + std::to_string(i));
  }
  return direct;
}

SecondOrderOperator laplacian(int nvars) {
  SecondOrderOperator d(nvars, nvars);
  for (int k = 0; k < nvars; ++k) d.add_term(k, k, unit(nvars));
  return d;
}

SecondOrderOperator block_laplacian(int block, int n) {
  check_n(n);
  if (block < 0 || block >= n) throw std::out_of_range("block_laplacian: block out of range");
  SecondOrderOperator d(8 * n, 8 * n);
  for (int i = 0; i < 8; ++i) d.add_term(8 * block + i, 8 * block + i, unit(8 * n));
  return d;
}

Polynomial op_apply(const FirstOrderOperator& d, const Polynomial& p) {
  if (d.nvars() != p.nvars()) throw std::invalid_argument("op_apply: nvars mismatch");
  if (d.dim() != p.dim()) throw std::invalid_argument("op_apply: coefficient dim mismatch");
  Polynomial out(p.nvars(), p.dim());
  for (int k = 0; k < d.nvars(); ++k) {
    if (d.coeff(k).is_zero()) continue;
    out += left_mul(d.coeff(k), p.derivative(k));
  }
  return out;
}

Polynomial op_apply(const SecondOrderOperator& d, const Polynomial& p) {
  if (d.nvars() != p.nvars()) throw std::invalid_argument("op_apply: nvars mismatch");
  if (d.dim() != p.dim()) throw std::invalid_argument("op_apply: coefficient dim mismatch");
  Polynomial out(p.nvars(), p.dim());
  for (const auto& [key, c] : d.terms()) out += left_mul(c, p.derivative(key.second).derivative(key.first));
  return out;
}

SecondOrderOperator op_anticommutator(const FirstOrderOperator& a, const FirstOrderOperator& b) {
  if (a.nvars() != b.nvars() || a.dim() != b.dim()) throw std::invalid_argument("op_anticommutator: shape mismatch");
  SecondOrderOperator out(a.nvars(), a.dim());
  for (int k = 0; k < a.nvars(); ++k) {
    if (a.coeff(k).is_zero() && b.coeff(k).is_zero()) continue;
    for (int l = 0; l < a.nvars(); ++l) {
      out.add_term(k, l, a.coeff(k) * b.coeff(l) + b.coeff(k) * a.coeff(l));
    }
  }
  return out;
}

std::vector<Polynomial> scalar_monomials(int nvars, int max_degree) {
  std::vector<Exponents> exps;
  Exponents cur(static_cast<std::size_t>(nvars), 0);
  enumerate_exponents(nvars, max_degree, 0, cur, exps);
  std::vector<Polynomial> out;
  out.reserve(exps.size());
  for (const auto& e : exps) out.push_back(Polynomial::monomial(e, unit(nvars)));
  return out;
}

namespace {

template <typename Op>
bool applied_equal(const Op& a, const Op& b) {
  for (const auto& m : scalar_monomials(a.nvars(), 2)) {
    if (m.dim() != a.dim()) continue;
    if (op_apply(a, m) != op_apply(b, m)) return false;
  }
  return true;
}

}  // namespace

bool op_equal(const FirstOrderOperator& a, const FirstOrderOperator& b) {
  if (a.nvars() != b.nvars() || a.dim() != b.dim()) return false;
  const bool structural = a == b;
  if (structural != applied_equal(a, b)) {
    throw std::logic_error("op_equal: structural and applied comparisons disagree");
  }
  return structural;
}

bool op_equal(const SecondOrderOperator& a, const SecondOrderOperator& b) {
  if (a.nvars() != b.nvars() || a.dim() != b.dim()) return false;
  const bool structural = a == b;
  if (structural != applied_equal(a, b)) {
    throw std::logic_error("op_equal: structural and applied comparisons disagree");
  }
  return structural;
}

std::ostream& operator<<(std::ostream& os, const FirstOrderOperator& d) {
  bool first = true;
  for (int k = 0; k < d.nvars(); ++k) {
    if (d.coeff(k).is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "[" << d.coeff(k) << "]*d/dx" << k;
  }
  if (first) os << "0";
  return os;
}

}  // namespace octowitt
