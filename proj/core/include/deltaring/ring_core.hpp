#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "deltaring/graded_ring.hpp"
#include "deltaring/linalg.hpp"

namespace deltaring {

/// Caps on brute-force enumeration. Enumerations that would exceed the cap
/// switch to linear-algebra routes (or report SizeCapExceeded).
struct EnumerationLimits {
  std::uint64_t max_elements = std::uint64_t{1} << 16;
};

/// Homogeneous ideal, stored slice-wise over the ring's degree window.
struct Ideal {
  std::vector<RingElement> generators;
  std::map<int, Span> slices;

  [[nodiscard]] bool is_zero() const;
  friend bool operator==(Ideal const& a, Ideal const& b) {
    return a.slices == b.slices;
  }
};

Ideal ideal_from_generators(GradedRing const& r,
                            std::vector<RingElement> const& gens);
Ideal principal_ideal(GradedRing const& r, RingElement const& x);
/// Elements of the slice spans, one per Howell row.
std::vector<RingElement> span_elements(GradedRing const& r, Ideal const& i);
bool ideal_contains(GradedRing const& r, Ideal const& i, RingElement const& x);

/// {y : x y = 0}
Ideal annihilator(GradedRing const& r, RingElement const& x);
/// {y : g y = 0 for every element g of the ideal}
Ideal annihilator(GradedRing const& r, Ideal const& i);

/// Every homogeneous element of degree d, or (above the cap) the slice
/// monomials together with their pairwise sums.
std::vector<RingElement> homogeneous_elements(GradedRing const& r, int d,
                                              EnumerationLimits lim = {});

bool is_unit(GradedRing const& r, RingElement const& x);
std::optional<RingElement> inverse(GradedRing const& r, RingElement const& x);
bool is_nilpotent(GradedRing const& r, RingElement const& x);

/// Additive order of 1 (0 for ℚ-algebras).
std::int64_t characteristic(GradedRing const& r);

/// All degree-0 idempotents.
std::vector<RingElement> idempotents(GradedRing const& r,
                                     EnumerationLimits lim = {});
/// A complete set of primitive orthogonal idempotents.
std::vector<RingElement> primitive_idempotents(GradedRing const& r,
                                               EnumerationLimits lim = {});

struct ProductFactor {
  GradedRing ring;
  RingElement idempotent;
  /// Image in R of each basis element of the factor.
  std::vector<RingElement> embedding;
};

/// Local factors e_i R for a complete set of primitive orthogonal
/// idempotents, each revalidated as a ring in its own right.
std::vector<ProductFactor> decompose_product_with_idempotents(
    GradedRing const& r, EnumerationLimits lim = {});
std::vector<GradedRing> decompose_product(GradedRing const& r,
                                          EnumerationLimits lim = {});

bool is_local(GradedRing const& r, EnumerationLimits lim = {});
Ideal maximal_ideal(GradedRing const& r, EnumerationLimits lim = {});
GradedRing residue_field(GradedRing const& r, EnumerationLimits lim = {});
/// Characteristic of R/m for a local ring.
std::int64_t residue_characteristic(GradedRing const& r,
                                    EnumerationLimits lim = {});
/// Length of R_0/m_0 as a module over the coefficient ring, i.e. the degree
/// of the residue field over its prime field.
int residue_degree(GradedRing const& r, EnumerationLimits lim = {});

/// A unit of degree d, found per local factor.
std::optional<RingElement> unit_in_degree(GradedRing const& r, int d,
                                          EnumerationLimits lim = {});

struct DoubleAnnihilatorReport {
  bool holds = true;
  std::optional<RingElement> witness;
};
DoubleAnnihilatorReport double_annihilator_holds(GradedRing const& r,
                                                 EnumerationLimits lim = {});

/// ann(m) for a local ring.
Ideal socle(GradedRing const& r, EnumerationLimits lim = {});
/// Length of the socle divided by that of a simple module; 1 means simple.
int socle_dimension(GradedRing const& r, EnumerationLimits lim = {});
bool is_quasi_frobenius(GradedRing const& r, EnumerationLimits lim = {});

/// Composition length of the ideal summed over the degree window.
int ideal_length(Ideal const& i);

}  // namespace deltaring
