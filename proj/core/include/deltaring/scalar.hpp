#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>

namespace deltaring {

/// A coefficient value. Over ℤ/m only `num` is used (0 <= num < m, den == 1);
/// over ℚ the pair is kept reduced with den > 0.
struct Scalar {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(Scalar const&, Scalar const&) = default;
  friend auto operator<=>(Scalar const&, Scalar const&) = default;
};

std::ostream& operator<<(std::ostream& os, Scalar const& s);

/// Prime factorisation of a positive integer, used for orders of finite
/// groups (prime -> exponent).
using Order = std::map<std::int64_t, int>;

Order factorize(std::int64_t n);
Order& operator*=(Order& a, Order const& b);
Order operator*(Order a, Order const& b);
/// Number of prime factors counted with multiplicity.
int big_omega(Order const& o);
std::string to_string(Order const& o);

/// Coefficient ring ℤ/m (m >= 2) or ℚ (m == 0).
///
/// Besides field-style arithmetic the class exposes the handful of
/// principal-ideal-ring primitives needed for Howell normal forms:
/// a unimodular gcd step, canonical associates and annihilators.
class Coeffs {
 public:
  Coeffs() = default;
  explicit Coeffs(std::int64_t modulus);

  [[nodiscard]] std::int64_t modulus() const noexcept { return m_; }
  [[nodiscard]] bool rational() const noexcept { return m_ == 0; }
  [[nodiscard]] bool finite() const noexcept { return m_ != 0; }
  [[nodiscard]] bool is_field() const noexcept { return field_; }

  [[nodiscard]] Scalar zero() const noexcept { return {0, 1}; }
  [[nodiscard]] Scalar one() const noexcept { return {m_ == 1 ? 0 : 1, 1}; }
  [[nodiscard]] Scalar from_int(std::int64_t v) const;
  [[nodiscard]] Scalar from_fraction(std::int64_t num, std::int64_t den) const;

  [[nodiscard]] Scalar add(Scalar a, Scalar b) const;
  [[nodiscard]] Scalar sub(Scalar a, Scalar b) const;
  [[nodiscard]] Scalar neg(Scalar a) const;
  [[nodiscard]] Scalar mul(Scalar a, Scalar b) const;
  [[nodiscard]] bool is_zero(Scalar a) const noexcept { return a.num == 0; }
  [[nodiscard]] bool is_unit(Scalar a) const;
  [[nodiscard]] Scalar inv(Scalar a) const;
  [[nodiscard]] Scalar pow(Scalar a, std::int64_t e) const;

  /// Unimodular step: returns (s, t, x, y) with s*a + t*b = g, x*a + y*b = 0
  /// and [[s, t], [x, y]] invertible. Requires a or b nonzero.
  struct GcdStep {
    Scalar s, t, x, y;
  };
  [[nodiscard]] GcdStep gcd_step(Scalar a, Scalar b) const;
  /// A unit u such that u*a is the canonical associate of a.
  [[nodiscard]] Scalar canonical_unit(Scalar a) const;
  /// Generator of ann(g) for a canonical associate g.
  [[nodiscard]] Scalar annihilator(Scalar g) const;
  /// Quotient q such that b - q*g is the canonical remainder modulo g.
  [[nodiscard]] Scalar quotient(Scalar b, Scalar g) const;
  /// Composition length of the cyclic submodule generated by g.
  [[nodiscard]] int quotient_length(Scalar g) const;
  /// Order of the cyclic group generated by a (finite case).
  [[nodiscard]] std::int64_t additive_order(Scalar a) const;

  friend bool operator==(Coeffs const& a, Coeffs const& b) {
    return a.m_ == b.m_;
  }

 private:
  std::int64_t m_ = 0;
  bool field_ = true;
};

std::int64_t mod_floor(std::int64_t a, std::int64_t m);
bool is_prime(std::int64_t n);

}  // namespace deltaring
