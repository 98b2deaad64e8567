#include <doctest.h>

#include <random>

#include "deltaring/classify.hpp"
#include "deltaring/error.hpp"
#include "deltaring/standard_rings.hpp"

using namespace deltaring;

namespace {

GradedRing laurent_exterior_with_period(int ydeg) {
  return rings::laurent_exterior(3, 1, ydeg);
}

std::optional<Reason> single_reason(GradedRing const& r, int n) {
  auto v = classify(r, n);
  REQUIRE(v.factors.size() == 1);
  return v.factors[0].verdict.reason;
}

}  // namespace

TEST_CASE("suspension 0 table") {
  auto f2 = rings::cyclic(2);
  auto ext2 = rings::truncated_polynomial(2, 2);
  CHECK(classify(rings::cyclic(4), 0).is_delta);
  CHECK(classify(f2, 0).is_delta);
  CHECK(classify(ext2, 0).is_delta);
  CHECK(classify(std::vector<GradedRing>{f2, rings::cyclic(4)}, 0).is_delta);
  CHECK(classify(std::vector<GradedRing>{rings::cyclic(3), ext2}, 0).is_delta);
  // over Z/6, the ring Z/6[x]/(x^2) has the negative factor F3[x]/(x^2)
  auto mv = classify(rings::truncated_polynomial(6, 2), 0);
  CHECK_FALSE(mv.is_delta);
  REQUIRE(mv.factors.size() == 2);

  CHECK(single_reason(rings::cyclic(9), 0) == Reason::WrongCharacteristic);
  CHECK(single_reason(rings::cyclic(8), 0) == Reason::AnnihilatorNotPrincipalEqual);
  CHECK(single_reason(rings::truncated_polynomial(3, 2), 0) == Reason::WrongCharacteristic);
  CHECK(single_reason(rings::truncated_polynomial(5, 3), 0) ==
        Reason::AnnihilatorNotPrincipalEqual);
  CHECK(single_reason(rings::truncated_polynomial(5, 3), 1) ==
        Reason::AnnihilatorNotPrincipalEqual);
  auto xy = rings::monomial_algebra(2, {"x", "y"}, {0, 0}, {{0, 0}, {1, 0}, {0, 1}});
  CHECK(single_reason(xy, 0) == Reason::NotQuasiFrobenius);
}

TEST_CASE("verdict kinds and factor order") {
  auto v = classify(rings::product(rings::cyclic(2), rings::truncated_polynomial(2, 2)), 0);
  REQUIRE(v.factors.size() == 2);
  CHECK(v.factors[0].verdict.kind == LocalKind::GradedField);
  CHECK(v.factors[1].verdict.kind == LocalKind::ExteriorAlgebra);
  CHECK(v.factors[1].verdict.unit_degree_found == 0);
  auto z4 = classify(rings::cyclic(4), 0);
  CHECK(z4.factors[0].verdict.kind == LocalKind::TMod4);
  auto z6 = classify(rings::cyclic(6), 0);
  CHECK(z6.is_delta);
  CHECK(z6.factors.size() == 2);
}

TEST_CASE("suspension 1 with periodic exterior algebras") {
  auto good = classify(laurent_exterior_with_period(2), 1);
  CHECK(good.is_delta);
  CHECK(good.factors[0].verdict.kind == LocalKind::ExteriorAlgebra);
  CHECK(good.factors[0].verdict.x_degree == 1);
  CHECK(good.factors[0].verdict.unit_degree_found == 4);

  auto bad = classify(laurent_exterior_with_period(3), 1);
  CHECK_FALSE(bad.is_delta);
  CHECK(bad.factors[0].verdict.reason == Reason::MissingUnitDegree);
  CHECK(bad.factors[0].verdict.needed_degree == 4);
}

TEST_CASE("units by degree") {
  auto r = laurent_exterior_with_period(2);
  CHECK(has_unit_in_degree(r, 4));
  CHECK_FALSE(has_unit_in_degree(r, 3));
  CHECK(has_unit_in_degree(r, 0));
  CHECK(has_unit_in_degree(rings::cyclic(6), 0));
}

TEST_CASE("characteristic 4 cases") {
  // Galois ring GR(4, 2)
  CHECK(classify(rings::monic_quotient(4, {1, 1}), 0).is_delta);
  CHECK(single_reason(rings::cyclic(4), 1) == Reason::OddSuspensionCharacteristicClash);
  // ramified Z/4[x]/(x^2 - 2) is not of the form T/(4)
  CHECK_FALSE(classify(rings::monic_quotient(4, {2, 0}, "x"), 0).is_delta);
  // Z/4[x]/(x^2) has non-principal maximal ideal (2, x)
  CHECK(single_reason(rings::truncated_polynomial(4, 2), 0) ==
        Reason::MaximalIdealNotPrincipal);
}

TEST_CASE("suspensions outside {0,1} carry a confidence flag") {
  auto r = rings::laurent_exterior(3, 2, 2);
  auto v = classify(r, 2);
  CHECK(v.local_criteria_only);
  REQUIRE(v.parity_admissible.has_value());
  CHECK_FALSE(*v.parity_admissible);
  auto j = to_json(v);
  CHECK(j["confidence"] == "local-criteria-only");
  CHECK(classify(r, 0).local_criteria_only == false);
}

TEST_CASE("generator of an exterior verdict squares to zero and is self-annihilating") {
  for (auto const& r : {rings::truncated_polynomial(2, 2), laurent_exterior_with_period(2)}) {
    auto v = classify(r, r.periodic() ? 1 : 0);
    auto const& lv = v.factors[0].verdict;
    REQUIRE(lv.generator);
    CHECK(r.multiply(*lv.generator, *lv.generator).is_zero());
    CHECK(annihilator(r, *lv.generator) == principal_ideal(r, *lv.generator));
  }
}

TEST_CASE("classification is invariant under basis permutation and unit rescaling") {
  std::mt19937 rng(3);
  for (auto const& base : {rings::truncated_polynomial(2, 2), rings::truncated_polynomial(5, 3),
                           rings::cyclic(8), rings::truncated_polynomial(3, 2)}) {
    auto spec = base.spec();
    auto n = spec.basis.size();
    auto ref = classify(base, 0);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      Coeffs k(spec.characteristic);
      // new basis element perm[i] is old basis i scaled by a unit c_i
      std::vector<Scalar> c(n), cinv(n);
      for (std::size_t i = 0; i < n; ++i) {
        do {
          c[i] = k.from_int(static_cast<std::int64_t>(rng() % 97));
        } while (!k.is_unit(c[i]));
        cinv[i] = k.inv(c[i]);
      }
      RingSpec s;
      s.characteristic = spec.characteristic;
      s.basis.resize(n);
      for (std::size_t i = 0; i < n; ++i) s.basis[static_cast<std::size_t>(perm[i])] = spec.basis[i];
      for (auto const& p : spec.products) {
        RingSpec::Product q{perm[static_cast<std::size_t>(p.left)],
                            perm[static_cast<std::size_t>(p.right)], {}};
        auto scale = k.mul(c[static_cast<std::size_t>(p.left)], c[static_cast<std::size_t>(p.right)]);
        for (auto const& t : p.terms)
          q.terms.push_back({k.mul(k.mul(t.coeff, scale), cinv[static_cast<std::size_t>(t.basis)]),
                             perm[static_cast<std::size_t>(t.basis)], t.vpow});
        s.products.push_back(q);
      }
      for (auto const& t : spec.unit)
        s.unit.push_back({k.mul(t.coeff, cinv[static_cast<std::size_t>(t.basis)]),
                          perm[static_cast<std::size_t>(t.basis)], t.vpow});
      auto v = classify(GradedRing::validate(s), 0);
      CHECK(v.is_delta == ref.is_delta);
      REQUIRE(v.factors.size() == ref.factors.size());
      CHECK(v.factors[0].verdict.kind == ref.factors[0].verdict.kind);
      CHECK(v.factors[0].verdict.reason == ref.factors[0].verdict.reason);
    }
  }
}
