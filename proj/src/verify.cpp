#include "octowitt/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "octowitt/diffops.hpp"
#include "octowitt/involutions.hpp"
#include "octowitt/reference_tables.hpp"
#include "octowitt/sampling.hpp"
#include "octowitt/witt.hpp"

namespace octowitt {

namespace {

template <typename T>
std::string show(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string show_vector(const std::vector<Rational>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
  return out + "]";
}

class Recorder {
 public:
  explicit Recorder(SuiteResult& result) : result_(result) {}

  template <typename Detail>
  void check(bool ok, Detail&& detail) {
    ++result_.checks_run;
    if (!ok) result_.failures.push_back(detail());
  }

 private:
  SuiteResult& result_;
};

TensorElement e0_scalar(int dim, const Rational& r) {
  return TensorElement::from_multivector(Multivector::scalar(dim, r));
}

// Independent oracle for the blade sign: concatenate the index lists,
// bubble-sort counting swaps, then cancel equal neighbours (each g_k^2 = -1).
SignedBlade blade_oracle(Blade a, Blade b) {
  std::vector<int> seq = a.indices();
  for (int i : b.indices()) seq.push_back(i);
  int sign = 1;
  for (std::size_t pass = 0; pass < seq.size(); ++pass) {
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
      if (seq[k] > seq[k + 1]) {
        std::swap(seq[k], seq[k + 1]);
        sign = -sign;
      }
    }
  }
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < seq.size();) {
    if (k + 1 < seq.size() && seq[k] == seq[k + 1]) {
      sign = -sign;
      k += 2;
    } else {
      mask |= std::uint64_t{1} << seq[k];
      k += 1;
    }
  }
  return {sign, Blade(mask)};
}

int sample_count(const VerifyConfig& cfg, int floor) { return std::max(cfg.samples, floor); }

// --- octonion ---------------------------------------------------------------

void octonion_basis(Recorder& r, const VerifyConfig&, RationalSampler&) {
  for (int i = 1; i < 8; ++i) {
    for (int j = 1; j < 8; ++j) {
      const Octonion ei = Octonion::basis(i);
      const Octonion ej = Octonion::basis(j);
      const Octonion lhs = ei * ej + ej * ei;
      const Octonion rhs = Octonion::real(Rational(i == j ? -2 : 0));
      r.check(lhs == rhs, [&] {
        return CheckFailure{"anticommute/" + std::to_string(i) + "," + std::to_string(j), "", show(rhs), show(lhs)};
      });
    }
  }
  std::array<int, 8> uses{};
  for (const auto& t : kFanoTriples) {
    ++uses[t.a];
    ++uses[t.b];
    ++uses[t.c];
    const auto p = basis_mul(t.a, t.b);
    r.check(p == BasisProduct{1, t.c}, [&] {
      return CheckFailure{"triple/" + std::to_string(t.a) + std::to_string(t.b) + std::to_string(t.c), "",
                          "+e" + std::to_string(t.c), show(p.sign) + "e" + std::to_string(p.index)};
    });
  }
  for (int i = 1; i < 8; ++i) {
    r.check(uses[i] == 3, [&] {
      return CheckFailure{"incidence/point" + std::to_string(i), "", "3", std::to_string(uses[i])};
    });
  }
  for (std::size_t a = 0; a < kFanoTriples.size(); ++a) {
    for (std::size_t b = a + 1; b < kFanoTriples.size(); ++b) {
      const auto& s = kFanoTriples[a];
      const auto& t = kFanoTriples[b];
      int common = 0;
      for (int x : {s.a, s.b, s.c}) {
        for (int y : {t.a, t.b, t.c}) common += x == y ? 1 : 0;
      }
      r.check(common == 1, [&] {
        return CheckFailure{"incidence/lines" + std::to_string(a) + "," + std::to_string(b), "", "1",
                            std::to_string(common)};
      });
    }
  }
}

void octonion_alternativity(Recorder& r, const VerifyConfig& cfg, RationalSampler& rng) {
  const int count = sample_count(cfg, 1000);
  for (int s = 0; s < count; ++s) {
    const Octonion a = rng.octonion();
    const Octonion b = rng.octonion();
    const Octonion left = (a * a) * b;
    const Octonion left2 = a * (a * b);
    r.check(left == left2, [&] {
      return CheckFailure{"left/" + std::to_string(s), show(a) + " ; " + show(b), show(left2), show(left)};
    });
    const Octonion right = (a * b) * b;
    const Octonion right2 = a * (b * b);
    r.check(right == right2, [&] {
      return CheckFailure{"right/" + std::to_string(s), show(a) + " ; " + show(b), show(right2), show(right)};
    });
  }
}

void octonion_composition(Recorder& r, const VerifyConfig& cfg, RationalSampler& rng) {
  const int count = sample_count(cfg, 1000);
  for (int s = 0; s < count; ++s) {
    const Octonion a = rng.octonion();
    const Octonion b = rng.octonion();
    const Rational lhs = norm2(a * b);
    const Rational rhs = norm2(a) * norm2(b);
    r.check(lhs == rhs, [&] {
      return CheckFailure{"norm/" + std::to_string(s), show(a) + " ; " + show(b), rhs.str(), lhs.str()};
    });
    const Octonion c1 = conj(a * b);
    const Octonion c2 = conj(b) * conj(a);
    r.check(c1 == c2, [&] {
      return CheckFailure{"conj/" + std::to_string(s), show(a) + " ; " + show(b), show(c2), show(c1)};
    });
  }
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const Octonion a = Octonion::basis(i);
      const Octonion b = Octonion::basis(j);
      r.check(conj(a * b) == conj(b) * conj(a), [&] {
        return CheckFailure{"conj-basis/" + std::to_string(i) + "," + std::to_string(j), "", show(conj(b) * conj(a)),
                            show(conj(a * b))};
      });
      r.check(inner(a, b) == Rational(i == j ? 1 : 0), [&] {
        return CheckFailure{"inner-basis/" + std::to_string(i) + "," + std::to_string(j), "", i == j ? "1" : "0",
                            inner(a, b).str()};
      });
    }
  }
}

// --- clifford ---------------------------------------------------------------

int clifford_n_max(const VerifyConfig& cfg) { return std::max(cfg.n_max, 3); }

void clifford_anticommutation(Recorder& r, const VerifyConfig& cfg, RationalSampler&) {
  for (int n = 1; n <= clifford_n_max(cfg); ++n) {
    const int m = 8 * n;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        const Multivector gi = Multivector::generator(m, i);
        const Multivector gj = Multivector::generator(m, j);
        const Multivector lhs = gi * gj + gj * gi;
        const Multivector rhs = i == j ? Multivector::scalar(m, Rational(-2)) : Multivector(m);
        r.check(lhs == rhs, [&] {
          return CheckFailure{"m" + std::to_string(m) + "/" + std::to_string(i) + "," + std::to_string(j), "",
                              show(rhs), show(lhs)};
        });
      }
    }
  }
}

void clifford_associativity(Recorder& r, const VerifyConfig& cfg, RationalSampler& rng) {
  const int count = sample_count(cfg, 200);
  for (int n = 1; n <= clifford_n_max(cfg); ++n) {
    const int m = 8 * n;
    for (int s = 0; s < count; ++s) {
      const Multivector u = rng.sparse_multivector(m, 4);
      const Multivector v = rng.sparse_multivector(m, 4);
      const Multivector w = rng.sparse_multivector(m, 4);
      const Multivector lhs = (u * v) * w;
      const Multivector rhs = u * (v * w);
      r.check(lhs == rhs, [&] {
        return CheckFailure{"m" + std::to_string(m) + "/" + std::to_string(s),
                            show(u) + " ; " + show(v) + " ; " + show(w), show(rhs), show(lhs)};
      });
    }
  }
}

void clifford_blade_sign(Recorder& r, const VerifyConfig& cfg, RationalSampler& rng) {
  for (int a = 0; a < 256; ++a) {
    for (int b = 0; b < 256; ++b) {
      const Blade ba(static_cast<std::uint64_t>(a));
      const Blade bb(static_cast<std::uint64_t>(b));
      const SignedBlade got = blade_product(ba, bb);
      const SignedBlade want = blade_oracle(ba, bb);
      r.check(got == want, [&] {
        return CheckFailure{"m8/" + std::to_string(a) + "," + std::to_string(b), "", show(want.sign),
                            show(got.sign)};
      });
    }
  }
  const int count = sample_count(cfg, 200);
  for (int s = 0; s < count; ++s) {
    const Blade ba = rng.blade(64);
    const Blade bb = rng.blade(64);
    const SignedBlade got = blade_product(ba, bb);
    const SignedBlade want = blade_oracle(ba, bb);
    r.check(got == want, [&] {
      return CheckFailure{"m64/" + std::to_string(s), "", show(want.sign), show(got.sign)};
    });
  }
}

// --- tensor -----------------------------------------------------------------

void tensor_laws(Recorder& r, const VerifyConfig& cfg, RationalSampler& rng) {
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const TensorElement a = TensorElement::constant(8, Octonion::basis(i));
      const TensorElement b = TensorElement::constant(8, Octonion::basis(j));
      const TensorElement want = TensorElement::constant(8, Octonion::basis(i) * Octonion::basis(j));
      r.check(a * b == want, [&] {
        return CheckFailure{"oct-restriction/" + std::to_string(i) + "," + std::to_string(j), "", show(want),
                            show(a * b)};
      });
    }
  }
  const int count = cfg.samples;
  for (int n = 1; n <= cfg.n_max; ++n) {
    const int m = 8 * n;
    for (int s = 0; s < count; ++s) {
      const TensorElement a = rng.sparse_tensor(m, 3);
      const TensorElement b = rng.sparse_tensor(m, 3);
      const TensorElement c = rng.sparse_tensor(m, 3);
      const Rational q = rng.rational();
      const std::string tag = "m" + std::to_string(m) + "/" + std::to_string(s);
      r.check(a * (b + c) == a * b + a * c, [&] {
        return CheckFailure{"left-distributive/" + tag, show(a), show(a * b + a * c), show(a * (b + c))};
      });
      r.check((a + b) * c == a * c + b * c, [&] {
        return CheckFailure{"right-distributive/" + tag, show(c), show(a * c + b * c), show((a + b) * c)};
      });
      r.check((q * a) * b == q * (a * b) && a * (q * b) == q * (a * b), [&] {
        return CheckFailure{"scalar-bilinear/" + tag, q.str(), show(q * (a * b)), show((q * a) * b)};
      });
      const TensorElement ra = rng.sparse_tensor(m, 3, true);
      const TensorElement rb = rng.sparse_tensor(m, 3, true);
      const TensorElement rc = rng.sparse_tensor(m, 3, true);
      r.check((ra * rb) * rc == ra * (rb * rc), [&] {
        return CheckFailure{"real-associative/" + tag, show(ra), show(ra * (rb * rc)), show((ra * rb) * rc)};
      });
    }
  }
}

// --- involutions --------------------------------------------------------------

void involution_automorphism(Recorder& r, const VerifyConfig&, RationalSampler& rng) {
  for (int j = 0; j < 8; ++j) {
    r.check(j_signs_path_independent(j), [&] {
      return CheckFailure{"path-independent/J" + std::to_string(j), "", "true", "false"};
    });
    for (int a = 0; a < 8; ++a) {
      for (int b = 0; b < 8; ++b) {
        const Octonion x = Octonion::basis(a);
        const Octonion y = Octonion::basis(b);
        const Octonion lhs = j_apply(j, x * y);
        const Octonion rhs = j_apply(j, x) * j_apply(j, y);
        r.check(lhs == rhs, [&] {
          return CheckFailure{"J" + std::to_string(j) + "/" + std::to_string(a) + "," + std::to_string(b), "",
                              show(rhs), show(lhs)};
        });
      }
    }
    const TensorElement s = rng.sparse_tensor(8, 3);
    const TensorElement t = rng.sparse_tensor(8, 3);
    r.check(j_apply_tensor(j, s * t) == j_apply_tensor(j, s) * j_apply_tensor(j, t), [&] {
      return CheckFailure{"tensor/J" + std::to_string(j), show(s) + " ; " + show(t), "", ""};
    });
  }
}

void involution_group(Recorder& r, const VerifyConfig&, RationalSampler&) {
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const int k = group_compose(InvolutionIndex(i), InvolutionIndex(j)).value();
      for (int b = 0; b < 8; ++b) {
        const Octonion e = Octonion::basis(b);
        const Octonion lhs = j_apply(i, j_apply(j, e));
        const Octonion rhs = j_apply(k, e);
        r.check(lhs == rhs, [&] {
          return CheckFailure{"compose/" + std::to_string(i) + "," + std::to_string(j) + "/e" + std::to_string(b), "",
                              show(rhs), show(lhs)};
        });
      }
    }
  }
  for (int b = 0; b < 8; ++b) {
    const Octonion e = Octonion::basis(b);
    r.check(j_apply(0, e) == e, [&] { return CheckFailure{"identity/e" + std::to_string(b), "", show(e), show(j_apply(0, e))}; });
  }
  for (int j = 0; j < 8; ++j) {
    r.check(j_apply(j, Octonion::basis(0)) == Octonion::basis(0), [&] {
      return CheckFailure{"unit/J" + std::to_string(j), "", "1*e0", show(j_apply(j, Octonion::basis(0)))};
    });
  }
}

void involution_phi(Recorder& r, const VerifyConfig&, RationalSampler&) {
  for (int j = 0; j < 8; ++j) {
    r.check(phi_invariance(j), [&] { return CheckFailure{"J" + std::to_string(j), "", "true", "false"}; });
  }
}

void involution_projection(Recorder& r, const VerifyConfig& cfg, RationalSampler& rng) {
  for (int b = 0; b < 8; ++b) {
    for (int i = 0; i < 8; ++i) {
      const Octonion x = Octonion::basis(b);
      const Octonion got = projection(i, x);
      const Octonion want = Octonion::real(x[static_cast<std::size_t>(i)]);
      r.check(got == want, [&] {
        return CheckFailure{"octonion-basis/e" + std::to_string(b) + "/i" + std::to_string(i), "", show(want), show(got)};
      });
    }
  }
  for (int s = 0; s < cfg.samples; ++s) {
    const Octonion x = rng.octonion();
    for (int i = 0; i < 8; ++i) {
      const Octonion got = projection(i, x);
      const Octonion want = Octonion::real(x[static_cast<std::size_t>(i)]);
      r.check(got == want, [&] {
        return CheckFailure{"octonion-random/" + std::to_string(s) + "/i" + std::to_string(i), show(x), show(want),
                            show(got)};
      });
    }
  }
  // Spanning set of O (x) Cl_8: e_b (x) g_A for all 8 x 256 pairs.
  for (int b = 0; b < 8; ++b) {
    for (std::uint64_t mask = 0; mask < 256; ++mask) {
      const TensorElement p = TensorElement::term(8, Blade(mask), Octonion::basis(b));
      for (int i = 0; i < 8; ++i) {
        const TensorElement got = tensor_projection(i, p);
        const TensorElement want = TensorElement::from_multivector(octonion_component(p, i));
        r.check(got == want, [&] {
          return CheckFailure{"tensor-basis/e" + std::to_string(b) + "/A" + std::to_string(mask) + "/i" + std::to_string(i),
                              "", show(want), show(got)};
        });
      }
    }
  }
  for (int s = 0; s < cfg.samples; ++s) {
    const TensorElement p = rng.sparse_tensor(8, 4);
    for (int i = 0; i < 8; ++i) {
      const TensorElement got = tensor_projection(i, p);
      const TensorElement want = TensorElement::from_multivector(octonion_component(p, i));
      r.check(got == want, [&] {
        return CheckFailure{"tensor-random/" + std::to_string(s) + "/i" + std::to_string(i), show(p), show(want), show(got)};
      });
    }
  }
}

// --- witt -------------------------------------------------------------------

void witt_table(Recorder& r, const VerifyConfig& cfg, RationalSampler&) {
  const WittBasis basis = witt_basis(1);
  for (int j = 0; j < 8; ++j) {
    for (int i = 0; i < 8; ++i) {
      const int want = reference::kWittSigns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      const Octonion c = basis.at(0, j).coeff(Blade::generator(i));
      const Octonion expected = Octonion::basis(i, Rational(want));
      r.check(c == expected, [&] {
        return CheckFailure{"f" + std::to_string(j) + "/g" + std::to_string(i), "", show(expected), show(c)};
      });
    }
  }
  for (int n = 1; n <= cfg.n_max; ++n) {
    const WittBasis b = witt_basis(n);
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < 8; ++i) {
        const TensorElement& f = b.at(k, i);
        bool shape = f.terms().size() == 8 && f == j_apply_tensor(i, omega(k, n));
        for (const auto& [blade, c] : f.terms()) {
          const int l = blade.grade() == 1 ? blade.indices().front() - 8 * k : -1;
          shape = shape && l >= 0 && l < 8 && norm2(c) == Rational(1) && c == Octonion::basis(l, c[static_cast<std::size_t>(l)]);
        }
        r.check(shape, [&] {
          return CheckFailure{"shape/n" + std::to_string(n) + "/k" + std::to_string(k) + "/f" + std::to_string(i), "",
                              "8 single-generator terms with +-e_l coefficients", show(f)};
        });
      }
    }
  }
}

std::string show_entry(int sign, int var, int g) {
  return std::string(sign < 0 ? "-" : "+") + "x" + std::to_string(var) + " g" + std::to_string(g);
}

void twistor_table(Recorder& r, const VerifyConfig&, RationalSampler&) {
  const auto xs = formal_twistor_vectors(0, 1);
  for (int i = 0; i < 8; ++i) {
    const auto pattern = signed_pattern(xs[static_cast<std::size_t>(i)], 0);
    for (int l = 0; l < 8; ++l) {
      const auto& want = reference::kTwistor[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
      const auto& got = pattern[static_cast<std::size_t>(l)];
      r.check(got.sign == want.sign && got.var == want.var, [&] {
        return CheckFailure{"X" + std::to_string(i) + "/g" + std::to_string(l), "formal x0..x7",
                            show_entry(want.sign, want.var, l), show_entry(got.sign, got.var, l)};
      });
    }
  }
}

void hermitian_table(Recorder& r, const VerifyConfig&, RationalSampler&) {
  const auto xs = formal_twistor_vectors(0, 1);
  const auto zs = formal_hermitian_variables(0, 1);
  for (int i = 0; i < 8; ++i) {
    const auto signs = hermitian_sign_pattern(zs[static_cast<std::size_t>(i)], xs);
    for (int j = 0; j < 8; ++j) {
      const int want = reference::kHermitianSigns[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const int got = signs[static_cast<std::size_t>(j)];
      r.check(got == want, [&] {
        return CheckFailure{"Z" + std::to_string(i) + "/e" + std::to_string(j) + "X" + std::to_string(j), "formal x0..x7",
                            std::to_string(want), std::to_string(got)};
      });
    }
  }
  // Z0 = Omega Phi(X) = sum_j e_j X_j, compared as polynomials.
  Polynomial sum(8, 8);
  for (int j = 0; j < 8; ++j) {
    sum += left_mul(octonion_constant(8, Octonion::basis(j)), xs[static_cast<std::size_t>(j)]);
  }
  r.check(zs[0] == sum, [&] { return CheckFailure{"Z0-structural", "formal x0..x7", show(sum), show(zs[0])}; });
}

void witt_round_trip(Recorder& r, const VerifyConfig& cfg, RationalSampler& rng) {
  for (int n = 1; n <= cfg.n_max; ++n) {
    for (int k = 0; k < n; ++k) {
      const auto xs = formal_twistor_vectors(k, n);
      const auto zs = formal_hermitian_variables(k, n);
      const std::string tag = "formal/n" + std::to_string(n) + "/k" + std::to_string(k);
      r.check(formal_twistor_from_hermitian(zs) == xs, [&] { return CheckFailure{tag + "/Z->X", "", "", ""}; });
      r.check(formal_hermitian_from_twistor(xs) == zs, [&] { return CheckFailure{tag + "/X->Z", "", "", ""}; });
    }
    for (int s = 0; s < cfg.samples; ++s) {
      const auto x = rng.vector(static_cast<std::size_t>(8 * n));
      for (int k = 0; k < n; ++k) {
        const TwistorFrame tw = twistor_vectors(x, k, n);
        const HermitianFrame hz = hermitian_variables(x, k, n);
        const std::string tag = "random/n" + std::to_string(n) + "/" + std::to_string(s) + "/k" + std::to_string(k);
        r.check(twistor_from_hermitian(hz) == tw, [&] { return CheckFailure{tag + "/Z->X", show_vector(x), "", ""}; });
        r.check(hermitian_from_twistor(tw) == hz, [&] { return CheckFailure{tag + "/X->Z", show_vector(x), "", ""}; });
        r.check(twistor_from_hermitian(hermitian_from_twistor(tw)) == tw,
                [&] { return CheckFailure{tag + "/X->Z->X", show_vector(x), "", ""}; });
      }
    }
  }
}

void witt_anticommutation(Recorder& r, const VerifyConfig& cfg, RationalSampler& rng) {
  for (int n = 1; n <= cfg.n_max; ++n) {
    for (int k = 0; k < n; ++k) {
      r.check(formal_twistor_anticommutation(k, n), [&] {
        return CheckFailure{"formal/n" + std::to_string(n) + "/k" + std::to_string(k), "formal", "-2|X|^2 delta_ij",
                            "mismatch"};
      });
    }
    for (int s = 0; s < cfg.samples; ++s) {
      const auto x = rng.vector(static_cast<std::size_t>(8 * n));
      for (int k = 0; k < n; ++k) {
        const auto rec = twistor_anticommutation(x, k, n);
        const std::string tag = "random/n" + std::to_string(n) + "/" + std::to_string(s) + "/k" + std::to_string(k);
        r.check(rec.anticommutation_holds, [&] { return CheckFailure{tag + "/anticommutator", show_vector(x), "", ""}; });
        r.check(rec.gram_holds, [&] { return CheckFailure{tag + "/gram", show_vector(x), "", ""}; });
      }
      if (n > 1) {
        r.check(cross_block_anticommutation(x, n), [&] {
          return CheckFailure{"cross-block/n" + std::to_string(n) + "/" + std::to_string(s), show_vector(x), "0", "nonzero"};
        });
      }
    }
  }
}

void witt_decomposition(Recorder& r, const VerifyConfig& cfg, RationalSampler& rng) {
  for (int n = 1; n <= cfg.n_max; ++n) {
    for (int s = 0; s < cfg.samples; ++s) {
      const auto x = rng.vector(static_cast<std::size_t>(8 * n));
      const auto dec = witt_decompose(x, n);
      r.check(dec.exact, [&] {
        return CheckFailure{"n" + std::to_string(n) + "/" + std::to_string(s), show_vector(x), show(dec.target),
                            show(dec.reconstruction)};
      });
      const auto multi = witt_decompose_multi(x, n);
      r.check(multi.exact, [&] {
        return CheckFailure{"multi/n" + std::to_string(n) + "/" + std::to_string(s), show_vector(x), show(multi.target),
                            show(multi.reconstruction)};
      });
    }
  }
}

void express_suite(Recorder& r, const VerifyConfig& cfg, bool conjugate) {
  for (int n = 1; n <= cfg.n_max; ++n) {
    const WittBasis basis = witt_basis(n);
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < 8; ++i) {
        const auto rec = conjugate ? express_generator_conjugate(i, k, basis) : express_generator(i, k, basis);
        r.check(rec.holds, [&] {
          return CheckFailure{"n" + std::to_string(n) + "/k" + std::to_string(k) + "/g" + std::to_string(8 * k + i), "",
                              show(rec.expected), show(rec.evaluated)};
        });
      }
    }
  }
}

void witt_express(Recorder& r, const VerifyConfig& cfg, RationalSampler&) { express_suite(r, cfg, false); }
void witt_express_conjugate(Recorder& r, const VerifyConfig& cfg, RationalSampler&) { express_suite(r, cfg, true); }

// --- diffops ----------------------------------------------------------------

void diffops_dirac(Recorder& r, const VerifyConfig& cfg, RationalSampler&) {
  for (int n = 1; n <= cfg.n_max; ++n) {
    const FirstOrderOperator d = dirac(8 * n);
    const SecondOrderOperator ac = op_anticommutator(d, d);
    const SecondOrderOperator want = Rational(-2) * laplacian(8 * n);
    r.check(op_equal(ac, want), [&] { return CheckFailure{"n" + std::to_string(n), "", "-2 Laplacian", "mismatch"}; });
    Polynomial sq(8 * n, 8 * n);
    for (int k = 0; k < 8 * n; ++k) {
      Exponents e(static_cast<std::size_t>(8 * n), 0);
      e[static_cast<std::size_t>(k)] = 2;
      sq.add_term(e, e0_scalar(8 * n, Rational(1)));
    }
    const Polynomial got = op_apply(ac, sq);
    const Polynomial expect = Polynomial::constant(8 * n, e0_scalar(8 * n, Rational(-32 * n)));
    r.check(got == expect, [&] {
      return CheckFailure{"apply-norm2/n" + std::to_string(n), "sum x_k^2", show(expect), show(got)};
    });
  }
}

void diffops_clifford(Recorder& r, const VerifyConfig& cfg, RationalSampler&) {
  for (int n = 1; n <= cfg.n_max; ++n) {
    for (int k = 0; k < n; ++k) {
      std::array<FirstOrderOperator, 8> d;
      for (int i = 0; i < 8; ++i) d[static_cast<std::size_t>(i)] = twistor_derivative(i, k, n);
      const SecondOrderOperator diag = Rational(-2) * block_laplacian(k, n);
      const SecondOrderOperator zero(8 * n, 8 * n);
      for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
          const SecondOrderOperator ac = op_anticommutator(d[i], d[j]);
          r.check(op_equal(ac, i == j ? diag : zero), [&] {
            return CheckFailure{"n" + std::to_string(n) + "/k" + std::to_string(k) + "/" + std::to_string(i) + "," +
                                    std::to_string(j),
                                "", i == j ? "-2 Laplacian" : "0", "mismatch"};
          });
        }
      }
    }
  }
}

void diffops_hermitian_routes(Recorder& r, const VerifyConfig& cfg, RationalSampler&) {
  for (int n = 1; n <= cfg.n_max; ++n) {
    for (int k = 0; k < n; ++k) {
      FirstOrderOperator sum(8 * n, 8 * n);
      for (int i = 0; i < 8; ++i) {
        const FirstOrderOperator direct = hermitian_derivative_direct(i, k, n);
        const FirstOrderOperator via = hermitian_derivative_via_twistor(i, k, n);
        r.check(op_equal(direct, via), [&] {
          return CheckFailure{"n" + std::to_string(n) + "/k" + std::to_string(k) + "/Z" + std::to_string(i), "",
                              show(via), show(direct)};
        });
        sum = sum + direct;
      }
      const FirstOrderOperator avg = Rational(1, 8) * sum;
      r.check(op_equal(avg, block_dirac(k, n)), [&] {
        return CheckFailure{"average/n" + std::to_string(n) + "/k" + std::to_string(k), "", show(block_dirac(k, n)),
                            show(avg)};
      });
    }
  }
}

void diffops_action(Recorder& r, const VerifyConfig& cfg, RationalSampler& rng) {
  const int count = std::max(20, cfg.samples / 5);
  std::vector<std::pair<std::string, FirstOrderOperator>> ops;
  ops.emplace_back("dirac", dirac(8));
  for (int i = 0; i < 8; ++i) {
    ops.emplace_back("twistor:" + std::to_string(i), twistor_derivative(i, 0, 1));
    ops.emplace_back("hermitian:" + std::to_string(i), hermitian_derivative(i, 0, 1));
  }
  for (int s = 0; s < count; ++s) {
    const Polynomial p = rng.scalar_polynomial(8, 3, 4);
    const auto& [na, a] = ops[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(ops.size()) - 1))];
    const auto& [nb, b] = ops[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(ops.size()) - 1))];
    const Polynomial lhs = op_apply(op_anticommutator(a, b), p);
    const Polynomial rhs = op_apply(a, op_apply(b, p)) + op_apply(b, op_apply(a, p));
    r.check(lhs == rhs, [&] {
      return CheckFailure{"scalar/" + std::to_string(s), na + " , " + nb + " on " + show(p), show(rhs), show(lhs)};
    });
    // Leibniz for scalar polynomials: d/dx_k (pq) = p' q + p q'.
    const Polynomial q = rng.scalar_polynomial(8, 2, 3);
    const int k = rng.uniform(0, 7);
    r.check((p * q).derivative(k) == p.derivative(k) * q + p * q.derivative(k), [&] {
      return CheckFailure{"leibniz/" + std::to_string(s), show(p) + " ; " + show(q), "", ""};
    });
  }
  // e0 (x) Cl coefficients stay associative under Dirac and twistor operators.
  std::vector<std::pair<std::string, FirstOrderOperator>> clifford_ops;
  for (const auto& op : ops) {
    if (op.first.rfind("hermitian", 0) != 0) clifford_ops.push_back(op);
  }
  const int last = static_cast<int>(clifford_ops.size()) - 1;
  for (int s = 0; s < count; ++s) {
    const Polynomial p = rng.clifford_polynomial(8, 3, 3);
    const auto& [na, a] = clifford_ops[static_cast<std::size_t>(rng.uniform(0, last))];
    const auto& [nb, b] = clifford_ops[static_cast<std::size_t>(rng.uniform(0, last))];
    const Polynomial lhs = op_apply(op_anticommutator(a, b), p);
    const Polynomial rhs = op_apply(a, op_apply(b, p)) + op_apply(b, op_apply(a, p));
    r.check(lhs == rhs, [&] {
      return CheckFailure{"clifford/" + std::to_string(s), na + " , " + nb + " on " + show(p), show(rhs), show(lhs)};
    });
  }
}

using SuiteFn = std::function<void(Recorder&, const VerifyConfig&, RationalSampler&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> all{
      {"octonion.basis_relations", octonion_basis},
      {"octonion.alternativity", octonion_alternativity},
      {"octonion.composition", octonion_composition},
      {"clifford.anticommutation", clifford_anticommutation},
      {"clifford.associativity", clifford_associativity},
      {"clifford.blade_sign_oracle", clifford_blade_sign},
      {"tensor.laws", tensor_laws},
      {"involutions.automorphism", involution_automorphism},
      {"involutions.group_law", involution_group},
      {"involutions.phi_invariance", involution_phi},
      {"involutions.projection", involution_projection},
      {"witt.witt_table_fidelity", witt_table},
      {"witt.twistor_table_fidelity", twistor_table},
      {"witt.hermitian_table_fidelity", hermitian_table},
      {"witt.round_trip", witt_round_trip},
      {"witt.anticommutation", witt_anticommutation},
      {"witt.decomposition", witt_decomposition},
      {"witt.express_generator", witt_express},
      {"witt.express_generator_conjugate", witt_express_conjugate},
      {"diffops.dirac", diffops_dirac},
      {"diffops.operator_clifford", diffops_clifford},
      {"diffops.hermitian_routes", diffops_hermitian_routes},
      {"diffops.action_consistency", diffops_action},
  };
  return all;
}

}  // namespace

std::size_t VerificationReport::total_checks() const {
  std::size_t n = 0;
  for (const auto& s : suites) n += s.checks_run;
  return n;
}

std::size_t VerificationReport::total_failures() const {
  std::size_t n = 0;
  for (const auto& s : suites) n += s.failures.size();
  return n;
}

const SuiteResult* VerificationReport::find(const std::string& name) const {
  for (const auto& s : suites) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

VerificationReport run_verification(const VerifyConfig& config) {
  if (config.n_max < 1) throw std::invalid_argument("verify: n_max must be >= 1");
  if (config.samples < 0) throw std::invalid_argument("verify: samples must be >= 0");
  VerificationReport report;
  report.config = config;
  std::uint64_t stream = 0;
  for (const auto& [name, fn] : suites()) {
    SuiteResult result;
    result.name = name;
    RationalSampler rng(config.seed, ++stream);
    Recorder recorder(result);
    const auto start = std::chrono::steady_clock::now();
    fn(recorder, config, rng);
    result.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::stable_sort(result.failures.begin(), result.failures.end(),
                     [](const CheckFailure& a, const CheckFailure& b) { return a.id < b.id; });
    report.suites.push_back(std::move(result));
  }
  return report;
}

Json report_to_json(const VerificationReport& report, bool include_timings) {
  Json suites = Json::array();
  for (const auto& s : report.suites) {
    Json failures = Json::array();
    for (const auto& f : s.failures) {
      failures.push_back(Json{{"id", f.id}, {"inputs", f.inputs}, {"expected", f.expected}, {"actual", f.actual}});
    }
    Json entry{{"name", s.name}, {"checks_run", s.checks_run}, {"failures", failures}};
    if (include_timings) entry["wall_time_ms"] = s.wall_ms;
    suites.push_back(std::move(entry));
  }
  return Json{{"config", {{"n_max", report.config.n_max}, {"samples", report.config.samples}, {"seed", report.config.seed}}},
              {"suites", suites},
              {"total_checks", report.total_checks()},
              {"total_failures", report.total_failures()},
              {"passed", report.passed()}};
}

}  // namespace octowitt
