#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "octowitt/clifford.hpp"
#include "octowitt/octonion.hpp"

namespace octowitt {

/// Element of O^n: n octonion slots. Products act slot by slot.
class MultiOctonion {
 public:
  MultiOctonion() = default;
  explicit MultiOctonion(std::size_t n) : slots_(n) {}
  explicit MultiOctonion(std::vector<Octonion> slots) : slots_(std::move(slots)) {}

  /// e_i^k: e_i in slot k, zero elsewhere.
  static MultiOctonion basis(std::size_t n, std::size_t slot, int i, const Rational& scale = Rational(1));
  /// (e0, ..., e0), the slotwise unit.
  static MultiOctonion unit(std::size_t n);

  [[nodiscard]] std::size_t size() const { return slots_.size(); }
  [[nodiscard]] const Octonion& operator[](std::size_t k) const { return slots_.at(k); }
  [[nodiscard]] const std::vector<Octonion>& slots() const { return slots_; }
  [[nodiscard]] bool is_zero() const;

  MultiOctonion& operator+=(const MultiOctonion& rhs);
  MultiOctonion& operator-=(const MultiOctonion& rhs);
  friend MultiOctonion operator+(MultiOctonion a, const MultiOctonion& b) { return a += b; }
  friend MultiOctonion operator-(MultiOctonion a, const MultiOctonion& b) { return a -= b; }
  MultiOctonion operator-() const;
  friend MultiOctonion operator*(const Rational& s, const MultiOctonion& a);
  friend MultiOctonion operator*(const MultiOctonion& a, const MultiOctonion& b);
  friend bool operator==(const MultiOctonion&, const MultiOctonion&) = default;

 private:
  void check_size(const MultiOctonion& other) const;
  std::vector<Octonion> slots_;
};

namespace detail {

template <typename C>
struct CoeffTraits;

template <>
struct CoeffTraits<Octonion> {
  static Octonion zero(std::size_t /*width*/) { return {}; }
  static Octonion unit(std::size_t /*width*/) { return Octonion::real(Rational(1)); }
  static std::size_t width(const Octonion& /*c*/) { return 1; }
};

template <>
struct CoeffTraits<MultiOctonion> {
  static MultiOctonion zero(std::size_t width) { return MultiOctonion(width); }
  static MultiOctonion unit(std::size_t width) { return MultiOctonion::unit(width); }
  static std::size_t width(const MultiOctonion& c) { return c.size(); }
};

}  // namespace detail

/// Sparse element of C (x) Cl_dim, where C is O or O^n, multiplied factorwise:
/// (a (x) g_A)(b (x) g_B) = (ab) (x) (g_A g_B). Zero coefficients are never
/// stored, so equality is map equality.
template <typename Coeff>
class BasicTensor {
 public:
  using Terms = std::map<Blade, Coeff, BladeOrder>;
  using Traits = detail::CoeffTraits<Coeff>;

  BasicTensor() = default;
  /// width is the number of octonion slots per coefficient (1 for O).
  explicit BasicTensor(int dim, std::size_t width = 1) : dim_(dim), width_(width) {
    if (dim < 0 || dim > kMaxGenerators) throw std::out_of_range("tensor: dim out of range");
  }

  /// c (x) 1.
  static BasicTensor constant(int dim, const Coeff& c) {
    BasicTensor t(dim, Traits::width(c));
    t.add_term(Blade(), c);
    return t;
  }
  static BasicTensor term(int dim, Blade b, const Coeff& c) {
    BasicTensor t(dim, Traits::width(c));
    t.add_term(b, c);
    return t;
  }
  /// e0 (x) u (slotwise unit times u in the O^n case).
  static BasicTensor from_multivector(const Multivector& u, std::size_t width = 1) {
    BasicTensor t(u.dim(), width);
    const Coeff unit = Traits::unit(width);
    for (const auto& [b, c] : u.terms()) t.add_term(b, c * unit);
    return t;
  }

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] std::size_t width() const { return width_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Coeff coeff(Blade b) const {
    const auto it = terms_.find(b);
    return it == terms_.end() ? Traits::zero(width_) : it->second;
  }

  void add_term(Blade b, const Coeff& c) {
    if (b.span_end() > dim_) {
      throw std::out_of_range("tensor: blade uses generator beyond dim " + std::to_string(dim_));
    }
    if (Traits::width(c) != width_) throw std::invalid_argument("tensor: coefficient width mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  /// Applies f to every coefficient, pruning zeros.
  template <typename F>
  [[nodiscard]] BasicTensor map_coefficients(F&& f) const {
    BasicTensor r(dim_, width_);
    for (const auto& [b, c] : terms_) r.add_term(b, f(c));
    return r;
  }

  BasicTensor& operator+=(const BasicTensor& rhs) {
    check_shape(rhs);
    for (const auto& [b, c] : rhs.terms_) add_term(b, c);
    return *this;
  }
  BasicTensor& operator-=(const BasicTensor& rhs) {
    check_shape(rhs);
    for (const auto& [b, c] : rhs.terms_) add_term(b, -c);
    return *this;
  }
  friend BasicTensor operator+(BasicTensor a, const BasicTensor& b) { return a += b; }
  friend BasicTensor operator-(BasicTensor a, const BasicTensor& b) { return a -= b; }
  BasicTensor operator-() const {
    return map_coefficients([](const Coeff& c) { return -c; });
  }
  friend BasicTensor operator*(const Rational& s, const BasicTensor& t) {
    if (s.is_zero()) return BasicTensor(t.dim_, t.width_);
    return t.map_coefficients([&s](const Coeff& c) { return s * c; });
  }
  /// Factorwise product; not associative in general because of the
  /// octonion factor.
  friend BasicTensor operator*(const BasicTensor& s, const BasicTensor& t) {
    s.check_shape(t);
    BasicTensor r(s.dim_, s.width_);
    for (const auto& [ba, ca] : s.terms_) {
      for (const auto& [bb, cb] : t.terms_) {
        const auto [sign, blade] = blade_product(ba, bb);
        Coeff c = ca * cb;
        r.add_term(blade, sign > 0 ? c : -c);
      }
    }
    return r;
  }
  friend bool operator==(const BasicTensor&, const BasicTensor&) = default;

  void check_shape(const BasicTensor& other) const {
    if (dim_ != other.dim_) {
      throw std::invalid_argument("tensor: dim mismatch " + std::to_string(dim_) + " vs " +
                                  std::to_string(other.dim_));
    }
    if (width_ != other.width_) throw std::invalid_argument("tensor: slot count mismatch");
  }

 private:
  int dim_ = 0;
  std::size_t width_ = 1;
  Terms terms_;
};

using TensorElement = BasicTensor<Octonion>;
using MultiTensorElement = BasicTensor<MultiOctonion>;

/// sum_k coords[k] (e0 (x) g_k), dim = coords.size().
TensorElement embed_vector(std::span<const Rational> coords);
/// sum_k coords[k] ((e0,...,e0) (x) g_k) in O^n (x) Cl_{8n}.
MultiTensorElement multi_embed(std::span<const Rational> coords, std::size_t n);

/// Left-multiplies every coefficient by a.
TensorElement oct_left_mul(const Octonion& a, const TensorElement& t);
MultiTensorElement multi_oct_left_mul(const MultiOctonion& a, const MultiTensorElement& t);
/// Right-multiplies every coefficient by a.
TensorElement oct_right_mul(const TensorElement& t, const Octonion& a);

/// The Clifford part p_i of p = sum_i e_i p_i, read directly off the slots.
Multivector octonion_component(const TensorElement& p, int i);
/// True when every coefficient lies in R e0, i.e. p is in e0 (x) Cl_m.
bool is_clifford(const TensorElement& p);
/// Drops the octonion factor of an element of e0 (x) Cl_m; throws if p has
/// non-real coefficients.
Multivector to_multivector(const TensorElement& p);

std::ostream& operator<<(std::ostream& os, const TensorElement& t);
std::ostream& operator<<(std::ostream& os, const MultiTensorElement& t);

}  // namespace octowitt
