#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "deltaring/linalg.hpp"
#include "deltaring/scalar.hpp"

namespace deltaring {

struct BasisElement {
  std::string name;
  int degree = 0;

  friend bool operator==(BasisElement const&, BasisElement const&) = default;
};

/// A central invertible homogeneous element v of degree `degree`; every
/// homogeneous element is a basis combination times a power of v.
struct Periodicity {
  std::string unit;
  int degree = 0;

  friend bool operator==(Periodicity const&, Periodicity const&) = default;
};

/// b_basis * v^vpow
struct Monomial {
  int basis = 0;
  int vpow = 0;

  friend auto operator<=>(Monomial const&, Monomial const&) = default;
};

struct Term {
  Scalar coeff;
  int basis = 0;
  int vpow = 0;

  friend bool operator==(Term const&, Term const&) = default;
};

/// Finite linear combination of monomials with nonzero coefficients.
struct RingElement {
  std::map<Monomial, Scalar> terms;

  [[nodiscard]] bool is_zero() const noexcept { return terms.empty(); }
  friend bool operator==(RingElement const&, RingElement const&) = default;
};

/// Raw, unvalidated description of a graded commutative ring.
struct RingSpec {
  std::int64_t characteristic = 0;
  std::vector<BasisElement> basis;
  std::optional<Periodicity> periodicity;
  struct Product {
    int left = 0;
    int right = 0;
    std::vector<Term> terms;
  };
  std::vector<Product> products;
  /// Empty means "find the basis element that acts as the identity".
  std::vector<Term> unit;
};

/// A graded commutative ring presented by a homogeneous basis and structure
/// constants over ℤ/m or ℚ. Values are immutable after validation.
class GradedRing {
 public:
  /// Checks every ring axiom exhaustively over basis tuples.
  static GradedRing validate(RingSpec const& spec);

  [[nodiscard]] Coeffs const& coeffs() const noexcept { return k_; }
  [[nodiscard]] std::int64_t characteristic_modulus() const noexcept {
    return k_.modulus();
  }
  [[nodiscard]] std::size_t rank() const noexcept { return basis_.size(); }
  [[nodiscard]] std::vector<BasisElement> const& basis() const noexcept {
    return basis_;
  }
  [[nodiscard]] std::optional<Periodicity> const& periodicity()
      const noexcept {
    return period_;
  }
  [[nodiscard]] bool periodic() const noexcept { return period_.has_value(); }
  /// True when every basis element sits in degree 0 and there is no
  /// periodicity unit.
  [[nodiscard]] bool ungraded() const;

  [[nodiscard]] int degree(Monomial m) const;
  /// Monomials of total degree d, ordered by basis index.
  [[nodiscard]] std::vector<Monomial> slice(int d) const;
  /// Degrees that represent every slice exactly once: the distinct basis
  /// degrees, or 0..period-1 for periodic rings.
  [[nodiscard]] std::vector<int> degree_window() const;
  /// Representative of d inside degree_window() together with the v-power
  /// that carries it there.
  [[nodiscard]] std::pair<int, int> fold_degree(int d) const;

  [[nodiscard]] RingElement zero() const { return {}; }
  [[nodiscard]] RingElement one() const { return one_; }
  [[nodiscard]] RingElement monomial(Monomial m, Scalar c) const;
  [[nodiscard]] RingElement basis_element(int i) const {
    return monomial({i, 0}, k_.one());
  }
  [[nodiscard]] RingElement add(RingElement const& a,
                                RingElement const& b) const;
  [[nodiscard]] RingElement sub(RingElement const& a,
                                RingElement const& b) const;
  [[nodiscard]] RingElement neg(RingElement const& a) const;
  [[nodiscard]] RingElement scale(Scalar c, RingElement const& a) const;
  [[nodiscard]] RingElement multiply(RingElement const& a,
                                     RingElement const& b) const;
  [[nodiscard]] RingElement power(RingElement const& a, int e) const;
  /// Multiply by v^t.
  [[nodiscard]] RingElement shift_v(RingElement const& a, int t) const;

  /// Degree of a homogeneous element; nullopt for 0 or inhomogeneous input.
  [[nodiscard]] std::optional<int> degree_of(RingElement const& x) const;
  [[nodiscard]] bool is_homogeneous(RingElement const& x) const;

  [[nodiscard]] Vec coords(RingElement const& x, int d) const;
  [[nodiscard]] RingElement from_coords(std::span<Scalar const> v,
                                        int d) const;
  /// Matrix of y -> x*y from slice d to slice d+|x|.
  [[nodiscard]] Matrix mult_matrix(RingElement const& x, int d) const;
  /// Matrix of y -> x*y for an element of known degree (zero allowed).
  [[nodiscard]] Matrix mult_matrix(RingElement const& x, int xdeg,
                                   int d) const;

  [[nodiscard]] RingElement const& product(int i, int j) const {
    return table_[static_cast<std::size_t>(i) * basis_.size() +
                  static_cast<std::size_t>(j)];
  }

  [[nodiscard]] std::string to_string(RingElement const& x) const;
  [[nodiscard]] RingSpec spec() const;
  [[nodiscard]] std::optional<int> find_basis(std::string const& name) const;

  friend bool operator==(GradedRing const& a, GradedRing const& b);

 private:
  GradedRing() = default;

  Coeffs k_;
  std::vector<BasisElement> basis_;
  std::optional<Periodicity> period_;
  std::vector<RingElement> table_;
  RingElement one_;
};

}  // namespace deltaring
