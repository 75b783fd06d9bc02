#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "octowitt/rational.hpp"

namespace octowitt {

/// Maximum number of Clifford generators a Blade can address.
inline constexpr int kMaxGenerators = 64;

/// Product g_{i1} g_{i2} ... of distinct generators with i1 < i2 < ...,
/// stored as a bitmask. The empty set is the scalar blade.
class Blade {
 public:
  constexpr Blade() = default;
  constexpr explicit Blade(std::uint64_t mask) : mask_(mask) {}
  Blade(std::initializer_list<int> indices);

  static Blade generator(int i);

  [[nodiscard]] constexpr std::uint64_t mask() const { return mask_; }
  [[nodiscard]] int grade() const;
  [[nodiscard]] std::vector<int> indices() const;
  [[nodiscard]] bool contains(int i) const { return ((mask_ >> i) & 1U) != 0; }
  /// One past the largest index, 0 for the scalar blade.
  [[nodiscard]] int span_end() const;

  friend constexpr bool operator==(Blade, Blade) = default;

 private:
  std::uint64_t mask_ = 0;
};

/// Canonical term order: ascending grade, then lexicographic index list.
struct BladeOrder {
  bool operator()(Blade a, Blade b) const;
};

struct SignedBlade {
  int sign;
  Blade blade;
  friend bool operator==(const SignedBlade&, const SignedBlade&) = default;
};

/// g_A g_B = sign * g_C with C the symmetric difference, all g_k^2 = -1.
SignedBlade blade_product(Blade a, Blade b);

class Multivector {
 public:
  using Terms = std::map<Blade, Rational, BladeOrder>;

  Multivector() = default;
  explicit Multivector(int dim);

  static Multivector scalar(int dim, const Rational& value);
  static Multivector generator(int dim, int i, const Rational& coeff = Rational(1));
  /// Grade-1 element sum_k coords[k] g_k with dim = coords.size().
  static Multivector from_vector(std::span<const Rational> coords);

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Rational coeff(Blade b) const;

  /// Adds c * g_b; drops the entry if it cancels.
  void add_term(Blade b, const Rational& c);

  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  Multivector operator-() const;
  friend Multivector operator*(const Rational& s, const Multivector& u);
  friend Multivector operator*(const Multivector& u, const Multivector& v);
  friend bool operator==(const Multivector&, const Multivector&) = default;

 private:
  void check_blade(Blade b) const;
  void check_dim(const Multivector& other) const;

  int dim_ = 0;
  Terms terms_;
};

/// Keeps exactly the blades of cardinality k.
Multivector grade(const Multivector& u, int k);

std::ostream& operator<<(std::ostream& os, const Multivector& u);

}  // namespace octowitt
