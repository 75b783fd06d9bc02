#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "octowitt/clifford.hpp"
#include "octowitt/octonion.hpp"
#include "octowitt/polynomial.hpp"
#include "octowitt/rational.hpp"
#include "octowitt/tensor.hpp"

namespace octowitt {

/// Seeded generator of random exact values. Numerators lie in [-100, 100]
/// and denominators in [1, 100].
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}
  RationalSampler(std::uint64_t seed, std::uint64_t stream);

  Rational rational();
  std::vector<Rational> vector(std::size_t len);
  Octonion octonion();
  Blade blade(int dim);
  Multivector sparse_multivector(int dim, int max_terms);
  /// real_only keeps every coefficient in R e0.
  TensorElement sparse_tensor(int dim, int max_terms, bool real_only = false);
  /// Polynomial in nvars variables with scalar coefficients (e0 (x) 1 multiples).
  Polynomial scalar_polynomial(int nvars, int max_degree, int max_terms);
  /// Polynomial with e0 (x) Cl_dim coefficients.
  Polynomial clifford_polynomial(int nvars, int max_degree, int max_terms);
  int uniform(int lo, int hi);

 private:
  Exponents exponents(int nvars, int max_degree);
  std::mt19937_64 engine_;
};

}  // namespace octowitt
