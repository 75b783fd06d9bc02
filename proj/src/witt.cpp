#include "octowitt/witt.hpp"

#include <stdexcept>
#include <string>

namespace octowitt {

namespace {

void check_block(int block, int n) {
  if (n < 1) throw std::invalid_argument("block count must be >= 1");
  if (block < 0 || block >= n) {
    throw std::out_of_range("block " + std::to_string(block) + " outside 0.." + std::to_string(n - 1));
  }
}

int dim_of(int n) { return 8 * n; }

TensorElement block_vector(std::span<const Rational> x, int block, int n) {
  check_block(block, n);
  if (x.size() != static_cast<std::size_t>(dim_of(n)) && x.size() != 8) {
    throw std::invalid_argument("expected 8 or 8n coordinates");
  }
  const std::size_t offset = x.size() == 8 ? 0 : static_cast<std::size_t>(8 * block);
  TensorElement v(dim_of(n));
  for (int l = 0; l < 8; ++l) {
    v.add_term(Blade::generator(8 * block + l), Octonion::real(x[offset + static_cast<std::size_t>(l)]));
  }
  return v;
}

std::vector<Rational> block_coords(const TensorElement& v, int block) {
  std::vector<Rational> out(8);
  for (const auto& [b, c] : v.terms()) {
    const int idx = b.grade() == 1 ? b.indices().front() - 8 * block : -1;
    if (idx < 0 || idx > 7 || !c.is_real()) {
      throw std::logic_error("value leaves e0 (x) span of block " + std::to_string(block));
    }
    out[static_cast<std::size_t>(idx)] = c[0];
  }
  return out;
}

Rational block_norm2(std::span<const Rational> x, int block) {
  const std::size_t offset = x.size() == 8 ? 0 : static_cast<std::size_t>(8 * block);
  Rational s;
  for (std::size_t l = 0; l < 8; ++l) s += x[offset + l] * x[offset + l];
  return s;
}

}  // namespace

TensorElement phi_block(const TensorElement& v, int block) {
  TensorElement out(v.dim());
  for (const auto& [b, c] : v.terms()) {
    const int idx = b.grade() == 1 ? b.indices().front() - 8 * block : -1;
    if (idx < 0 || idx > 7 || !c.is_real()) {
      throw std::domain_error("phi: argument is not a vector of block " + std::to_string(block));
    }
    out.add_term(Blade(), Octonion::basis(idx, c[0]));
  }
  return out;
}

TensorElement phi_block_inverse(const TensorElement& t, int block) {
  TensorElement out(t.dim());
  for (const auto& [b, c] : t.terms()) {
    if (b.grade() != 0) throw std::domain_error("phi inverse: argument is not a pure octonion");
    for (int i = 0; i < 8; ++i) {
      out.add_term(Blade::generator(8 * block + i), Octonion::real(c[static_cast<std::size_t>(i)]));
    }
  }
  return out;
}

TensorElement omega(int block, int n) {
  check_block(block, n);
  TensorElement w(dim_of(n));
  for (int i = 0; i < 8; ++i) w.add_term(Blade::generator(8 * block + i), conj(Octonion::basis(i)));
  return w;
}

MultiTensorElement omega_multi(int block, int n) {
  check_block(block, n);
  const auto un = static_cast<std::size_t>(n);
  MultiTensorElement w(dim_of(n), un);
  for (int i = 0; i < 8; ++i) {
    const MultiOctonion e = MultiOctonion::basis(un, static_cast<std::size_t>(block), i);
    w.add_term(Blade::generator(8 * block + i), i == 0 ? e : -e);
  }
  return w;
}

WittBasis witt_basis(int n) {
  if (n < 1) throw std::invalid_argument("witt_basis: n must be >= 1");
  WittBasis basis{n, {}};
  for (int k = 0; k < n; ++k) {
    const TensorElement w = omega(k, n);
    std::array<TensorElement, 8> row;
    for (int i = 0; i < 8; ++i) row[static_cast<std::size_t>(i)] = j_apply_tensor(i, w);
    basis.f.push_back(std::move(row));
  }
  return basis;
}

MultiWittBasis witt_basis_multi(int n) {
  if (n < 1) throw std::invalid_argument("witt_basis_multi: n must be >= 1");
  MultiWittBasis basis{n, {}};
  for (int k = 0; k < n; ++k) {
    const MultiTensorElement w = omega_multi(k, n);
    std::array<MultiTensorElement, 8> row;
    for (int i = 0; i < 8; ++i) row[static_cast<std::size_t>(i)] = j_apply_tensor(i, w);
    basis.f.push_back(std::move(row));
  }
  return basis;
}

TensorElement TwistorFrame::embedded(int i) const {
  TensorElement v(dim_of(n));
  const auto& vec = vectors.at(static_cast<std::size_t>(i));
  for (int l = 0; l < 8; ++l) {
    v.add_term(Blade::generator(8 * block + l), Octonion::real(vec[static_cast<std::size_t>(l)]));
  }
  return v;
}

Multivector TwistorFrame::multivector(int i) const { return to_multivector(embedded(i)); }

TwistorFrame twistor_vectors(std::span<const Rational> x) { return twistor_vectors(x, 0, 1); }

TwistorFrame twistor_vectors(std::span<const Rational> x, int block, int n) {
  const TensorElement v = block_vector(x, block, n);
  TwistorFrame frame{block, n, {}};
  for (int i = 0; i < 8; ++i) {
    frame.vectors[static_cast<std::size_t>(i)] = block_coords(recipe::twistor(v, i, block), block);
  }
  return frame;
}

HermitianFrame hermitian_variables(std::span<const Rational> x) { return hermitian_variables(x, 0, 1); }

HermitianFrame hermitian_variables(std::span<const Rational> x, int block, int n) {
  const TensorElement v = block_vector(x, block, n);
  HermitianFrame frame{block, n, {}};
  for (int i = 0; i < 8; ++i) {
    TensorElement via_omega = recipe::hermitian_via_omega(v, i, block, n);
    if (via_omega != recipe::hermitian_via_witt(v, i, block, n)) {
      throw std::logic_error("hermitian_variables: J_i(Omega Phi(X)) != f_i J_i(Phi(X)) for i = " +
                             std::to_string(i));
    }
    frame.z[static_cast<std::size_t>(i)] = std::move(via_omega);
  }
  return frame;
}

TwistorFrame twistor_from_hermitian(const HermitianFrame& frame) {
  TwistorFrame out{frame.block, frame.n, {}};
  for (int i = 0; i < 8; ++i) {
    out.vectors[static_cast<std::size_t>(i)] =
        block_coords(recipe::twistor_from_hermitian(frame.z, i), frame.block);
  }
  return out;
}

HermitianFrame hermitian_from_twistor(const TwistorFrame& frame) {
  std::array<TensorElement, 8> xs;
  for (int i = 0; i < 8; ++i) xs[static_cast<std::size_t>(i)] = frame.embedded(i);
  HermitianFrame out{frame.block, frame.n, {}};
  for (int i = 0; i < 8; ++i) out.z[static_cast<std::size_t>(i)] = recipe::hermitian_from_twistor(xs, i);
  return out;
}

namespace {

GeneratorExpression express_with(const Octonion& multiplier, int i, int block, const WittBasis& basis) {
  check_block(block, basis.n);
  const int dim = dim_of(basis.n);
  TensorElement sum(dim);
  for (int j = 0; j < 8; ++j) {
    if (sigma(j, i) == 0) {
      sum += basis.at(block, j);
    } else {
      sum -= basis.at(block, j);
    }
  }
  GeneratorExpression rec;
  rec.i = i;
  rec.block = block;
  rec.evaluated = Rational(1, 8) * oct_left_mul(multiplier, sum);
  rec.expected = TensorElement::from_multivector(Multivector::generator(dim, 8 * block + i));
  rec.holds = rec.evaluated == rec.expected;
  return rec;
}

}  // namespace

GeneratorExpression express_generator(int i, int block, const WittBasis& basis) {
  return express_with(Octonion::basis(i), i, block, basis);
}

GeneratorExpression express_generator_conjugate(int i, int block, const WittBasis& basis) {
  return express_with(conj(Octonion::basis(i)), i, block, basis);
}

WittDecomposition witt_decompose(std::span<const Rational> x, int n) {
  if (n < 1) throw std::invalid_argument("witt_decompose: n must be >= 1");
  if (x.size() != static_cast<std::size_t>(dim_of(n))) {
    throw std::invalid_argument("witt_decompose: expected " + std::to_string(dim_of(n)) + " coordinates, got " +
                                std::to_string(x.size()));
  }
  WittDecomposition out;
  out.n = n;
  out.target = embed_vector(x);
  out.reconstruction = TensorElement(dim_of(n));
  for (int j = 0; j < n; ++j) {
    out.twistors.push_back(twistor_vectors(x, j, n));
    out.hermitians.push_back(hermitian_variables(x, j, n));
    TensorElement sum(dim_of(n));
    for (const auto& z : out.hermitians.back().z) sum += z;
    out.reconstruction += Rational(1, 8) * sum;
  }
  out.exact = out.reconstruction == out.target;
  return out;
}

MultiWittDecomposition witt_decompose_multi(std::span<const Rational> x, int n) {
  if (n < 1) throw std::invalid_argument("witt_decompose_multi: n must be >= 1");
  if (x.size() != static_cast<std::size_t>(dim_of(n))) {
    throw std::invalid_argument("witt_decompose_multi: expected " + std::to_string(dim_of(n)) + " coordinates");
  }
  const auto un = static_cast<std::size_t>(n);
  const MultiWittBasis basis = witt_basis_multi(n);
  MultiWittDecomposition out;
  out.n = n;
  out.target = MultiTensorElement(dim_of(n), un);
  out.reconstruction = MultiTensorElement(dim_of(n), un);
  for (int j = 0; j < n; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    MultiOctonion phi_j(un);
    for (int l = 0; l < 8; ++l) {
      const Rational& c = x[8 * uj + static_cast<std::size_t>(l)];
      phi_j += MultiOctonion::basis(un, uj, l, c);
      out.target.add_term(Blade::generator(8 * j + l), MultiOctonion::basis(un, uj, 0, c));
    }
    const MultiTensorElement phi_term = MultiTensorElement::constant(dim_of(n), phi_j);
    std::array<MultiTensorElement, 8> zs;
    MultiTensorElement sum(dim_of(n), un);
    for (int i = 0; i < 8; ++i) {
      auto& z = zs[static_cast<std::size_t>(i)];
      z = basis.at(j, i) * j_apply_tensor(i, phi_term);
      sum += z;
    }
    out.hermitians.push_back(std::move(zs));
    out.reconstruction += Rational(1, 8) * sum;
  }
  out.exact = out.reconstruction == out.target;
  return out;
}

AnticommutationCheck twistor_anticommutation(std::span<const Rational> x) {
  return twistor_anticommutation(x, 0, 1);
}

AnticommutationCheck twistor_anticommutation(std::span<const Rational> x, int block, int n) {
  const TwistorFrame frame = twistor_vectors(x, block, n);
  AnticommutationCheck out;
  out.norm2 = block_norm2(x, block);
  std::array<Multivector, 8> xs;
  for (int i = 0; i < 8; ++i) xs[static_cast<std::size_t>(i)] = frame.multivector(i);
  out.anticommutation_holds = true;
  out.gram_holds = true;
  const Multivector diagonal = Multivector::scalar(dim_of(n), Rational(-2) * out.norm2);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      out.anticommutators[i][j] = xs[i] * xs[j] + xs[j] * xs[i];
      const Multivector expected = i == j ? diagonal : Multivector(dim_of(n));
      if (out.anticommutators[i][j] != expected) out.anticommutation_holds = false;
      Rational g;
      for (std::size_t l = 0; l < 8; ++l) g += frame.vectors[i][l] * frame.vectors[j][l];
      out.gram[i][j] = g;
      if (g != (i == j ? out.norm2 : Rational(0))) out.gram_holds = false;
    }
  }
  return out;
}

bool cross_block_anticommutation(std::span<const Rational> x, int n) {
  std::vector<TwistorFrame> frames;
  for (int k = 0; k < n; ++k) frames.push_back(twistor_vectors(x, k, n));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
          const Multivector u = frames[static_cast<std::size_t>(a)].multivector(i);
          const Multivector v = frames[static_cast<std::size_t>(b)].multivector(j);
          if (!(u * v + v * u).is_zero()) return false;
        }
      }
    }
  }
  return true;
}

std::array<Polynomial, 8> formal_twistor_vectors(int block, int n) {
  check_block(block, n);
  const Polynomial x = Polynomial::formal_vector(dim_of(n), 8 * block, 8);
  std::array<Polynomial, 8> out;
  for (int i = 0; i < 8; ++i) out[static_cast<std::size_t>(i)] = recipe::twistor(x, i, block);
  return out;
}

std::array<Polynomial, 8> formal_hermitian_variables(int block, int n) {
  check_block(block, n);
  const Polynomial x = Polynomial::formal_vector(dim_of(n), 8 * block, 8);
  std::array<Polynomial, 8> out;
  for (int i = 0; i < 8; ++i) {
    Polynomial via_omega = recipe::hermitian_via_omega(x, i, block, n);
    if (via_omega != recipe::hermitian_via_witt(x, i, block, n)) {
      throw std::logic_error("formal_hermitian_variables: constructions disagree for i = " + std::to_string(i));
    }
    out[static_cast<std::size_t>(i)] = std::move(via_omega);
  }
  return out;
}

std::array<Polynomial, 8> formal_twistor_from_hermitian(const std::array<Polynomial, 8>& z) {
  std::array<Polynomial, 8> out;
  for (int i = 0; i < 8; ++i) out[static_cast<std::size_t>(i)] = recipe::twistor_from_hermitian(z, i);
  return out;
}

std::array<Polynomial, 8> formal_hermitian_from_twistor(const std::array<Polynomial, 8>& xs) {
  std::array<Polynomial, 8> out;
  for (int i = 0; i < 8; ++i) out[static_cast<std::size_t>(i)] = recipe::hermitian_from_twistor(xs, i);
  return out;
}

bool formal_twistor_anticommutation(int block, int n) {
  const auto xs = formal_twistor_vectors(block, n);
  const int nv = dim_of(n);
  Polynomial norm2(nv, nv);
  const TensorElement one = TensorElement::from_multivector(Multivector::scalar(nv, Rational(1)));
  for (int l = 0; l < 8; ++l) {
    Exponents e(static_cast<std::size_t>(nv), 0);
    e[static_cast<std::size_t>(8 * block + l)] = 2;
    norm2.add_term(e, one);
  }
  const Polynomial diagonal = Rational(-2) * norm2;
  const Polynomial zero(nv, nv);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      const Polynomial ac = xs[i] * xs[j] + xs[j] * xs[i];
      if (ac != (i == j ? diagonal : zero)) return false;
    }
  }
  return true;
}

std::array<SignedVariable, 8> signed_pattern(const Polynomial& twistor, int block) {
  std::array<SignedVariable, 8> out{};
  for (const auto& [e, c] : twistor.terms()) {
    int var = -1;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (e[k] != 1 || var >= 0) throw std::logic_error("signed_pattern: polynomial is not linear");
      var = static_cast<int>(k);
    }
    if (var < 0) throw std::logic_error("signed_pattern: constant term present");
    for (const auto& [b, o] : c.terms()) {
      const int l = b.grade() == 1 ? b.indices().front() - 8 * block : -1;
      if (l < 0 || l > 7 || !o.is_real() || (o[0] != Rational(1) && o[0] != Rational(-1))) {
        throw std::logic_error("signed_pattern: coefficient is not +-e0 (x) g of the block");
      }
      auto& slot = out[static_cast<std::size_t>(l)];
      if (slot.var >= 0) throw std::logic_error("signed_pattern: generator appears twice");
      slot = {o[0].sign(), var - 8 * block};
    }
  }
  return out;
}

Polynomial polynomial_component(const Polynomial& p, int j) {
  return p.map_coefficients(
      [j](const TensorElement& c) { return TensorElement::from_multivector(octonion_component(c, j)); });
}

std::array<int, 8> hermitian_sign_pattern(const Polynomial& z, const std::array<Polynomial, 8>& xs) {
  std::array<int, 8> signs{};
  for (int j = 0; j < 8; ++j) {
    const Polynomial comp = polynomial_component(z, j);
    const Polynomial& x = xs[static_cast<std::size_t>(j)];
    if (comp == x) {
      signs[static_cast<std::size_t>(j)] = 1;
    } else if (comp == -x) {
      signs[static_cast<std::size_t>(j)] = -1;
    }
  }
  return signs;
}

}  // namespace octowitt
