#include <doctest.h>

#include <numeric>

#include "deltaring/error.hpp"
#include "deltaring/ring_core.hpp"
#include "deltaring/standard_rings.hpp"

using namespace deltaring;

TEST_CASE("idempotents of Z/m agree with direct enumeration") {
  for (std::int64_t m : {6, 12, 30, 8}) {
    int expect = 0;
    for (std::int64_t a = 0; a < m; ++a)
      if (a * a % m == a) ++expect;
    auto r = rings::cyclic(m);
    CHECK(static_cast<int>(idempotents(r).size()) == expect);
    auto factors = decompose_product(r);
    std::int64_t prod = 1;
    for (auto const& f : factors) prod *= characteristic(f);
    CHECK(prod == m);
    CHECK(factors.size() == factorize(m).size());
  }
}

TEST_CASE("large degree-0 slices split through Fitting decomposition") {
  // F_3 x F_3[x]/(x^7) has 3^8 elements of degree 0; with a small cap the
  // enumeration route is disabled.
  EnumerationLimits lim{16};
  auto r = rings::product(rings::cyclic(3), rings::truncated_polynomial(3, 7));
  auto prims = primitive_idempotents(r, lim);
  CHECK(prims.size() == 2);
  auto factors = decompose_product(r, lim);
  REQUIRE(factors.size() == 2);
  CHECK(factors[0].rank() == 1);
  CHECK(factors[1].rank() == 7);
  CHECK(is_local(factors[1], lim));
  CHECK(ideal_length(maximal_ideal(factors[1], lim)) == 6);

  // Q[t]/(t^2 - 1) splits, Q[t]/(t^2 + 1) does not
  CHECK(primitive_idempotents(rings::monic_quotient(0, {-1, 0})).size() == 2);
  CHECK(is_local(rings::monic_quotient(0, {1, 0})));
  CHECK_THROWS_AS(maximal_ideal(rings::monic_quotient(0, {1, 0})), Error);
}

TEST_CASE("maximal ideals and socles of chain rings") {
  auto r = rings::truncated_polynomial(2, 3);
  REQUIRE(is_local(r));
  auto m = maximal_ideal(r);
  CHECK(m == principal_ideal(r, r.basis_element(1)));
  auto soc = socle(r);
  CHECK(soc == principal_ideal(r, r.basis_element(2)));
  CHECK(socle_dimension(r) == 1);
  CHECK(is_quasi_frobenius(r));
  CHECK(residue_characteristic(r) == 2);

  // Z/4[x]/(x^2 - 2): the maximal ideal is (x) and contains 2
  auto e = rings::monic_quotient(4, {2, 0}, "x");
  REQUIRE(is_local(e));
  auto me = maximal_ideal(e);
  CHECK(me == principal_ideal(e, e.basis_element(1)));
  CHECK(ideal_contains(e, me, e.scale(Coeffs(4).from_int(2), e.one())));
  CHECK(characteristic(e) == 4);
}

TEST_CASE("non-Gorenstein monomial algebra has a two-dimensional socle") {
  auto r = rings::monomial_algebra(2, {"x", "y"}, {0, 0}, {{0, 0}, {1, 0}, {0, 1}});
  CHECK(is_local(r));
  CHECK(socle_dimension(r) == 2);
  CHECK_FALSE(is_quasi_frobenius(r));
  CHECK_FALSE(double_annihilator_holds(r).holds);
}

TEST_CASE("QF rings satisfy the double annihilator condition") {
  for (auto const& r : {rings::truncated_polynomial(2, 3), rings::cyclic(8),
                        rings::monic_quotient(4, {2, 0}, "x"),
                        rings::monomial_algebra(3, {"x", "y"}, {0, 0},
                                                {{0, 0}, {1, 0}, {0, 1}, {1, 1}})}) {
    CHECK(is_quasi_frobenius(r));
    CHECK(double_annihilator_holds(r).holds);
  }
}

TEST_CASE("periodic exterior algebra") {
  auto r = rings::laurent_exterior(3, 1, 3);
  REQUIRE(is_local(r));
  auto m = maximal_ideal(r);
  CHECK(m == principal_ideal(r, r.basis_element(1)));
  CHECK(socle(r) == m);
  CHECK(socle_dimension(r) == 1);
  CHECK(is_quasi_frobenius(r));
  CHECK(unit_in_degree(r, 3).has_value());
  CHECK_FALSE(unit_in_degree(r, 1).has_value());
  auto k = residue_field(r);
  CHECK(k.rank() == 1);
  CHECK(k.periodic());
}

TEST_CASE("units and inverses") {
  auto r = rings::cyclic(9);
  Coeffs k(9);
  auto two = r.scale(k.from_int(2), r.one());
  auto inv = inverse(r, two);
  REQUIRE(inv);
  CHECK(r.multiply(two, *inv) == r.one());
  CHECK_FALSE(is_unit(r, r.scale(k.from_int(3), r.one())));
  CHECK(is_nilpotent(r, r.scale(k.from_int(3), r.one())));
  // units of a product exist exactly where every factor has one
  auto p = rings::product(rings::laurent_field(2, 2), rings::laurent_field(2, 2));
  CHECK(unit_in_degree(p, 0).has_value());
  CHECK(decompose_product(p).size() == 2);
}

TEST_CASE("residue field of a Galois ring has degree 2") {
  auto r = rings::monic_quotient(4, {1, 1});
  EnumerationLimits lim{4};
  CHECK(is_local(r));
  CHECK(residue_degree(r) == 2);
  CHECK(socle_dimension(r) == 1);
  CHECK_THROWS_AS(residue_field(r), Error);
  CHECK_THROWS_AS(maximal_ideal(r, lim), Error);
}
