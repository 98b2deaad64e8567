#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "deltaring/graded_ring.hpp"

namespace deltaring::rings {

/// ℤ/m (or ℚ for m == 0), basis {one}.
GradedRing cyclic(std::int64_t m);

/// (ℤ/m)[x]/(x^n) with |x| = xdeg; basis one, x, x2, ...
GradedRing truncated_polynomial(std::int64_t m, int n, int xdeg = 0);

/// (ℤ/m)[t]/(f) for a monic f = t^n + c_{n-1} t^{n-1} + ... + c_0, ungraded.
/// `lower` holds c_0 .. c_{n-1}.
GradedRing monic_quotient(std::int64_t m, std::vector<std::int64_t> const& lower,
                          std::string const& var = "t");

/// Commutative monomial algebra: the basis is a divisor-closed set of
/// exponent vectors; products leaving the set vanish.
GradedRing monomial_algebra(std::int64_t m,
                            std::vector<std::string> const& vars,
                            std::vector<int> const& var_degrees,
                            std::vector<std::vector<int>> const& exponents);

/// F_p[y, 1/y] with |y| = ydeg.
GradedRing laurent_field(std::int64_t p, int ydeg, std::string const& y = "y");

/// F_p[y, 1/y][x]/(x^2) with |x| = xdeg, |y| = ydeg.
GradedRing laurent_exterior(std::int64_t p, int xdeg, int ydeg);

/// Direct product A x B. Both factors must share coefficients and
/// periodicity.
GradedRing product(GradedRing const& a, GradedRing const& b);

}  // namespace deltaring::rings
