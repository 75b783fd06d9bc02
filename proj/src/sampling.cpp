#include "octowitt/sampling.hpp"

#include <algorithm>
#include <bit>

namespace octowitt {

RationalSampler::RationalSampler(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

int RationalSampler::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

Rational RationalSampler::rational() { return Rational(uniform(-100, 100), uniform(1, 100)); }

std::vector<Rational> RationalSampler::vector(std::size_t len) {
  std::vector<Rational> v;
  v.reserve(len);
  for (std::size_t i = 0; i < len; ++i) v.push_back(rational());
  return v;
}

Octonion RationalSampler::octonion() {
  std::array<Rational, 8> c;
  for (auto& x : c) x = rational();
  return Octonion(std::move(c));
}

Blade RationalSampler::blade(int dim) {
  const int grade = uniform(0, std::min(dim, 4));
  std::uint64_t mask = 0;
  while (std::popcount(mask) < grade) mask |= std::uint64_t{1} << uniform(0, dim - 1);
  return Blade(mask);
}

Multivector RationalSampler::sparse_multivector(int dim, int max_terms) {
  Multivector u(dim);
  const int terms = uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) u.add_term(blade(dim), rational());
  return u;
}

TensorElement RationalSampler::sparse_tensor(int dim, int max_terms, bool real_only) {
  TensorElement t(dim);
  const int terms = uniform(1, max_terms);
  for (int k = 0; k < terms; ++k) t.add_term(blade(dim), real_only ? Octonion::real(rational()) : octonion());
  return t;
}

Exponents RationalSampler::exponents(int nvars, int max_degree) {
  Exponents e(static_cast<std::size_t>(nvars), 0);
  const int degree = uniform(0, max_degree);
  for (int d = 0; d < degree; ++d) e[static_cast<std::size_t>(uniform(0, nvars - 1))] += 1;
  return e;
}

Polynomial RationalSampler::scalar_polynomial(int nvars, int max_degree, int max_terms) {
  Polynomial p(nvars, nvars);
  const int terms = uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    p.add_term(exponents(nvars, max_degree),
               TensorElement::from_multivector(Multivector::scalar(nvars, rational())));
  }
  return p;
}

Polynomial RationalSampler::clifford_polynomial(int nvars, int max_degree, int max_terms) {
  Polynomial p(nvars, nvars);
  const int terms = uniform(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    p.add_term(exponents(nvars, max_degree), TensorElement::from_multivector(sparse_multivector(nvars, 3)));
  }
  return p;
}

}  // namespace octowitt
