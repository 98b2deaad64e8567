#include <doctest.h>

#include <numeric>

#include "deltaring/error.hpp"
#include "deltaring/scalar.hpp"

using namespace deltaring;

TEST_CASE("gcd step is unimodular over Z/m") {
  for (std::int64_t m : {2, 4, 6, 8, 9, 12, 30}) {
    Coeffs k(m);
    for (std::int64_t a = 0; a < m; ++a)
      for (std::int64_t b = 0; b < m; ++b) {
        if (a == 0 && b == 0) continue;
        auto sa = k.from_int(a), sb = k.from_int(b);
        auto st = k.gcd_step(sa, sb);
        auto g = k.add(k.mul(st.s, sa), k.mul(st.t, sb));
        CHECK(k.is_zero(k.add(k.mul(st.x, sa), k.mul(st.y, sb))));
        auto det = k.sub(k.mul(st.s, st.y), k.mul(st.t, st.x));
        CHECK(k.is_unit(det));
        // the ideal (g) equals (a, b) = (gcd(a, b, m))
        CHECK(std::gcd(g.num, m) == std::gcd(std::gcd(a, b), m));
      }
  }
}

TEST_CASE("canonical associates divide the modulus") {
  Coeffs k(12);
  for (std::int64_t a = 1; a < 12; ++a) {
    auto u = k.canonical_unit(k.from_int(a));
    CHECK(k.is_unit(u));
    auto c = k.mul(u, k.from_int(a));
    CHECK(12 % c.num == 0);
    CHECK(c.num == std::gcd(a, std::int64_t{12}));
  }
}

TEST_CASE("annihilators and lengths") {
  Coeffs k(12);
  CHECK(k.annihilator(k.from_int(4)).num == 3);
  CHECK(k.annihilator(k.from_int(1)).num == 0);
  CHECK(k.quotient_length(k.from_int(4)) == 1);
  CHECK(k.quotient_length(k.from_int(3)) == 2);
  CHECK(k.quotient_length(k.from_int(1)) == 3);
  CHECK(k.additive_order(k.from_int(8)) == 3);
}

TEST_CASE("rational arithmetic") {
  Coeffs q(0);
  auto a = q.from_fraction(2, -6);
  CHECK(a.num == -1);
  CHECK(a.den == 3);
  CHECK(q.mul(a, q.from_int(3)) == q.from_int(-1));
  CHECK(q.inv(a) == q.from_int(-3));
  CHECK(q.add(a, q.from_fraction(1, 3)) == q.zero());
  CHECK_THROWS_AS((void)q.inv(q.zero()), Error);
}

TEST_CASE("factorisation helpers") {
  auto o = factorize(360);
  CHECK(o.at(2) == 3);
  CHECK(o.at(3) == 2);
  CHECK(o.at(5) == 1);
  CHECK(big_omega(o) == 6);
}
