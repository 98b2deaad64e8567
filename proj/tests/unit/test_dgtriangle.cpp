#include <doctest.h>

#include <random>
#include <set>

#include "deltaring/classify.hpp"
#include "deltaring/dgtriangle.hpp"
#include "deltaring/error.hpp"

using namespace deltaring;

namespace {

DgaHandle make(std::int64_t p, int i, int n, std::optional<int> delta = {}) {
  return std::make_shared<DGAlgebra const>(DGAlgebra::build(p, i, n, delta));
}

// Derivation on words of the free algebra, written out independently of the
// library: d(a) = uu, d(u) = 0, sign (-1)^{n * degree of the prefix}.
rewrite::Poly word_derivative(DGAlgebra const& alg, rewrite::Word const& w, int t) {
  auto const& k = alg.field();
  rewrite::Poly out;
  long long before = static_cast<long long>(t) * alg.unit_degree();
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    if (w[pos] == 'a') {
      long long e = static_cast<long long>(alg.suspension()) * before;
      rewrite::add_term(k, out, t, w.substr(0, pos) + "uu" + w.substr(pos + 1),
                        e % 2 == 0 ? k.one() : k.from_int(-1));
      before += alg.a_degree();
    } else {
      before += alg.u_degree();
    }
  }
  return out;
}


// Rank over F_p by plain elimination.
int oracle_rank(Matrix const& m, std::int64_t p) {
  std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = ((m(r, c).num % p) + p) % p;
  auto inv = [p](std::int64_t x) {
    std::int64_t r = 1, e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  int rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < static_cast<int>(m.rows()); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[static_cast<std::size_t>(rank)]);
    auto& row = a[static_cast<std::size_t>(rank)];
    std::int64_t iv = inv(row[c]);
    for (auto& x : row) x = x * iv % p;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == static_cast<std::size_t>(rank) || a[r][c] == 0) continue;
      std::int64_t f = a[r][c];
      for (std::size_t cc = 0; cc < m.cols(); ++cc)
        a[r][cc] = ((a[r][cc] - f * row[cc]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

Matrix product_mod(Matrix const& a, Matrix const& b, std::int64_t p) {
  Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s = (s + a(r, k).num * b(k, c).num) % p;
      out(r, c) = Scalar{s, 1};
    }
  return out;
}

// Exactness of every position of the triangle, from ranks alone.
bool oracle_exact(Triangle const& t, std::int64_t p) {
  for (int s = t.lo; s <= t.hi; ++s) {
    if (!t.f.count(s) || !t.g.count(s) || !t.h.count(s) || !t.f.count(s - t.n)) continue;
    auto const& f = t.f.at(s);
    auto const& g = t.g.at(s);
    auto const& h = t.h.at(s);
    auto const& fs = t.f.at(s - t.n);
    int d1 = t.dims[1].at(s), d2 = t.dims[2].at(s), d0 = t.dims[0].at(s - t.n);
    auto zero = [&](Matrix const& a, Matrix const& b) {
      return oracle_rank(product_mod(a, b, p), p) == 0;
    };
    if (!zero(g, f) || d1 - oracle_rank(g, p) != oracle_rank(f, p)) return false;
    if (!zero(h, g) || d2 - oracle_rank(h, p) != oracle_rank(g, p)) return false;
    if (!zero(fs, h) || d0 - oracle_rank(fs, p) != oracle_rank(h, p)) return false;
  }
  return true;
}

// dim R_s for R = k[x]/(x^2).
int ring_dim(DGAlgebra const& alg, int s) {
  auto hit = [&](int d) {
    return alg.periodic() ? (d % alg.unit_degree() == 0) : d == 0;
  };
  return (hit(s) ? 1 : 0) + (hit(s - alg.u_degree()) ? 1 : 0);
}

}  // namespace

TEST_CASE("rewriting: the relations are confluent, a toy system is not") {
  auto alg = make(3, 1, 1);
  auto rep = alg->rewriting().check_confluence(4);
  CHECK(rep.confluent);
  CHECK(rep.words_checked == 2 + 4 + 8 + 16);
  std::set<std::string> overlaps;
  for (auto const& cp : rep.critical_pairs) {
    overlaps.insert(cp.overlap);
    CHECK(cp.resolves());
  }
  CHECK(overlaps == std::set<std::string>{"aaa", "uaa"});

  Coeffs k(5);
  rewrite::RewriteSystem bad(k, {{"ab", rewrite::word("a")}, {"ba", rewrite::word("b")}});
  auto br = bad.check_confluence(3);
  CHECK_FALSE(br.confluent);
  REQUIRE(br.failing_word);
}

TEST_CASE("build: degrees and the parity obstruction") {
  auto a = make(3, 1, 1);
  CHECK(a->a_degree() == 3);
  CHECK(a->v_degree() == 4);
  CHECK(a->unit_degree() == 4);
  CHECK_NOTHROW(make(2, 0, 0));
  CHECK_FALSE(make(2, 0, 0)->periodic());
  CHECK_NOTHROW(make(2, 1, 1));
  CHECK_NOTHROW(make(5, 1, 1));
  CHECK_NOTHROW(make(3, 1, 1, 2));

  auto kind = [](auto fn) {
    try {
      fn();
    } catch (Error const& e) {
      return e.kind();
    }
    return Errc::InvalidArgument;
  };
  CHECK(kind([] { DGAlgebra::build(3, 0, 0); }) == Errc::ParityObstruction);
  CHECK(kind([] { DGAlgebra::build(5, 2, 2); }) == Errc::ParityObstruction);
  CHECK(kind([] { DGAlgebra::build(3, 1, 0); }) == Errc::ParityObstruction);
  CHECK(kind([] { DGAlgebra::build(3, 1, 1, 3); }) == Errc::InvalidArgument);
  CHECK_NOTHROW(DGAlgebra::build(2, 2, 2));
}

TEST_CASE("multiplication: u a = -a u - v and agreement with rewriting") {
  auto alg = make(3, 1, 1);
  auto ua = alg->multiply(alg->u(), alg->a());
  auto expect = alg->add(alg->monomial(0, 1, 1, -1), alg->scale(Coeffs(3).from_int(-1), alg->v()));
  CHECK(ua == expect);
  CHECK(alg->multiply(alg->a(), alg->a()).empty());

  for (auto [p, i, n] : {std::tuple{3, 1, 1}, {2, 0, 0}, {2, 1, 1}, {5, 1, 1}}) {
    auto a = make(p, i, n);
    std::mt19937_64 rng(7 + static_cast<unsigned>(p));
    for (int trial = 0; trial < 100; ++trial) {
      auto x = random_monomial(*a, rng), y = random_monomial(*a, rng);
      CHECK(a->multiply(x, y) == a->multiply_by_rewriting(x, y));
    }
  }

  CHECK_THROWS_AS((void)alg->multiply(alg->monomial(0, 0, 10), alg->monomial(0, 0, 10)), Error);
}

TEST_CASE("differential: d(a u^m) = u^{m+2}, d(u^m) = 0 and well-definedness on words") {
  for (auto [p, i, n] : {std::tuple{3, 1, 1}, {2, 0, 0}, {2, 1, 1}, {5, 1, 1}}) {
    auto alg = make(p, i, n);
    for (int m = 0; m <= 6; ++m) {
      CHECK(alg->differential(alg->monomial(0, 1, m)) == alg->monomial(0, 0, m + 2));
      CHECK(alg->differential(alg->monomial(0, 0, m)).empty());
    }
    // every word up to length 5: reduce then differentiate, versus
    // differentiate on the word then reduce
    auto const& rw = alg->rewriting();
    std::vector<std::string> words{""};
    for (int len = 1; len <= 5; ++len) {
      std::vector<std::string> next;
      for (auto const& w : words)
        if (static_cast<int>(w.size()) == len - 1) {
          next.push_back(w + "a");
          next.push_back(w + "u");
        }
      for (auto const& w : next) {
        auto lhs = alg->differential(alg->from_poly(rw.reduce(w)));
        auto rhs = alg->from_poly(rw.reduce(word_derivative(*alg, w, 0)));
        CHECK_MESSAGE(lhs == rhs, w);
      }
      words.insert(words.end(), next.begin(), next.end());
    }
  }
}

TEST_CASE("Leibniz rule and d^2 = 0 on random monomials") {
  for (auto [p, i, n] : {std::tuple{3, 1, 1}, {2, 0, 0}, {2, 1, 1}, {5, 1, 1}}) {
    auto alg = make(p, i, n);
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 200; ++trial) {
      auto x = random_monomial(*alg, rng), y = random_monomial(*alg, rng);
      CHECK(alg->leibniz_defect(x, y).empty());
      CHECK(alg->differential(alg->differential(x)).empty());
    }
  }
}

TEST_CASE("homology of A is free of rank one over k[x]/(x^2)") {
  for (auto [p, i, n] : {std::tuple{3, 1, 1}, {2, 0, 0}, {2, 1, 1}, {5, 1, 1}}) {
    auto alg = make(p, i, n);
    auto h = Homology::compute(DGModule::free(alg, {0}), -10, 10);
    int gens = 0;
    for (int s = -10; s <= 10; ++s) {
      REQUIRE(h.reliable(s));
      CHECK(h.dimension(s) == ring_dim(*alg, s));
    }
    int period = alg->periodic() ? alg->unit_degree() : 1;
    for (int s = 0; s < period; ++s) gens += h.generators_in_degree(s);
    CHECK(gens == 1);
    CHECK(h.generators_in_degree(0) == 1);
    CHECK(h.x_exact());
    CHECK(h.x_squared_zero());
  }
}

TEST_CASE("homology of A + A and of shifts") {
  auto alg = make(3, 1, 1);
  auto h1 = Homology::compute(DGModule::free(alg, {0}), -6, 6);
  auto h2 = Homology::compute(DGModule::free(alg, {0, 0}), -6, 6);
  for (int s = -6; s <= 6; ++s) CHECK(h2.dimension(s) == 2 * h1.dimension(s));

  auto m = DGModule::free(alg, {0});
  auto s0 = shift(m, 0);
  CHECK(s0.degrees == m.degrees);
  auto s1 = shift(m, alg->u_degree());
  CHECK(s1.degrees[0] == alg->u_degree());
  // (-1)^2 d = d on a module with nonzero differential
  DGMap f{shift(m, alg->u_degree()), m, {{alg->u()}}};
  auto c = cone(f);
  CHECK(shift(shift(c, 1), 1).differential == shift(c, 2).differential);
  CHECK(shift(c, 2).differential == c.differential);
  CHECK(shift(c, 1).differential[0][1] == alg->scale(Coeffs(3).from_int(-1), c.differential[0][1]));
}

TEST_CASE("cone of u reproduces D(a, b) = (da + ub, (-1)^{i+n} db)") {
  for (auto [p, i, n] : {std::tuple{3, 1, 1}, {2, 1, 1}, {5, 1, 1}, {2, 0, 0}}) {
    auto alg = make(p, i, n);
    auto const& k = alg->field();
    auto a_mod = DGModule::free(alg, {0});
    DGMap f{shift(a_mod, i), a_mod, {{alg->u()}}};
    auto c = cone(f);
    REQUIRE(c.rank() == 2);
    CHECK(c.degrees == std::vector<int>{0, i + n});
    c.validate();

    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
      auto x = random_monomial(*alg, rng), y = random_monomial(*alg, rng);
      ModuleElement el;
      for (auto const& [mono, s] : x) el[{0, mono}] = s;
      for (auto const& [mono, s] : y) el[{1, mono}] = s;
      auto got = module_differential(c, el);

      auto top = alg->add(alg->differential(x), alg->multiply_unbounded(alg->u(), y));
      int e = i + n;
      auto bottom = alg->scale(e % 2 == 0 ? k.one() : k.from_int(-1), alg->differential(y));
      ModuleElement want;
      for (auto const& [mono, s] : top) want[{0, mono}] = s;
      for (auto const& [mono, s] : bottom) want[{1, mono}] = s;
      CHECK(got == want);
    }

    auto h = Homology::compute(c, -8, 8);
    CHECK(h.x_exact());
    int period = alg->periodic() ? alg->unit_degree() : 1;
    int gens = 0, where = 0;
    for (int s = 0; s < period; ++s) {
      int g = h.generators_in_degree(s);
      gens += g;
      if (g) where = s;
    }
    CHECK(gens == 1);
    int j = 2 * i + n;
    CHECK(where == (alg->periodic() ? ((j % period) + period) % period : j));
  }
}

TEST_CASE("cone of the identity is acyclic; cone of zero splits") {
  auto alg = make(3, 1, 1);
  auto m = DGModule::free(alg, {0});
  DGMap id{m, m, {{alg->one()}}};
  auto hid = Homology::compute(cone(id), -8, 8);
  for (int s = -8; s <= 8; ++s) CHECK(hid.dimension(s) == 0);

  auto n1 = DGModule::free(alg, {1});
  DGMap z{m, n1, {{DgaElement{}}}};
  auto hz = Homology::compute(cone(z), -8, 8);
  auto hn = Homology::compute(n1, -8, 8);
  auto hm = Homology::compute(shift(m, alg->suspension()), -8, 8);
  for (int s = -8; s <= 8; ++s) CHECK(hz.dimension(s) == hn.dimension(s) + hm.dimension(s));
}

TEST_CASE("cone rejects a map that does not commute with d") {
  auto alg = make(3, 1, 1);
  auto m = DGModule::free(alg, {alg->a_degree()});
  auto n = DGModule::free(alg, {0});
  DGMap f{m, n, {{alg->a()}}};
  CHECK_FALSE(f.is_chain_map());
  try {
    (void)cone(f);
    FAIL("expected NotChainMap");
  } catch (Error const& e) {
    CHECK(e.kind() == Errc::NotChainMap);
  }
}

TEST_CASE("homology refuses windows the weight bound cannot reach") {
  auto alg = std::make_shared<DGAlgebra const>(DGAlgebra::build(3, -1, 3));
  CHECK_FALSE(alg->periodic());
  auto m = DGModule::free(alg, {0});
  try {
    (void)Homology::compute(m, -30, 30);
    FAIL("expected WindowTooWideForWeightBound");
  } catch (Error const& e) {
    CHECK(e.kind() == Errc::WindowTooWideForWeightBound);
  }
  auto h = Homology::compute(m, -4, 4);
  for (int s = -4; s <= 4; ++s)
    if (h.reliable(s)) CHECK(h.dimension(s) == ring_dim(*alg, s));
}

TEST_CASE("triangle of x: free third term, exact, rotation exact") {
  auto alg = make(3, 1, 1, 2);
  ProjectiveMap f{{{1}}, {{0}}, {{{0, 1}}}};
  auto t = triangle_from_map(alg, f, -4, 4);
  CHECK(t.third_term_shifts.size() == 1);
  CHECK(verify_triangle_exact(t).passed);
  CHECK(oracle_exact(t, 3));
  auto r = rotate(t);
  CHECK(verify_triangle_exact(r).passed);
  CHECK(oracle_exact(r, 3));
  CHECK(verify_triangle_exact(rotate(r)).passed);
}

TEST_CASE("triangle of the identity and of zero") {
  auto alg = make(3, 1, 1, 2);
  ProjectiveMap id{{{0}}, {{0}}, {{{1, 0}}}};
  auto t = triangle_from_map(alg, id, -4, 4);
  CHECK(t.third_term_shifts.empty());
  for (auto const& [s, d] : t.dims[2]) CHECK(d == 0);
  CHECK(verify_triangle_exact(t).passed);

  ProjectiveMap zero{{{0}}, {{1}}, {{{0, 0}}}};
  auto tz = triangle_from_map(alg, zero, -4, 4);
  CHECK(tz.third_term_shifts.size() == 2);
  CHECK(verify_triangle_exact(tz).passed);
}

TEST_CASE("a broken third map is caught at X0[n]") {
  auto alg = make(3, 1, 1, 2);
  ProjectiveMap f{{{1}}, {{0}}, {{{0, 1}}}};
  auto t = triangle_from_map(alg, f, -4, 4);
  bool broke = false;
  for (auto& [s, m] : t.h) {
    if (s < t.lo || m.rows() == 0 || m.cols() == 0 || m.is_zero()) continue;
    m = Matrix(m.rows(), m.cols());
    broke = true;
    break;
  }
  REQUIRE(broke);
  auto rep = verify_triangle_exact(t);
  CHECK_FALSE(rep.passed);
  CHECK(rep.failing_position == "X0[n]");
}

TEST_CASE("lifting checks entry degrees") {
  auto alg = make(3, 1, 1, 2);
  ProjectiveMap bad{{{0}}, {{0}}, {{{0, 1}}}};
  try {
    (void)lift_map(alg, bad);
    FAIL("expected LiftFailure");
  } catch (Error const& e) {
    CHECK(e.kind() == Errc::LiftFailure);
    CHECK(std::string(e.what()).find("(0, 0)") != std::string::npos);
  }
}

TEST_CASE("random triangles are exact, as are their rotations") {
  auto alg = make(3, 1, 1, 2);
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 15; ++trial) {
    auto f = random_projective_map(*alg, rng, 3);
    auto t = triangle_from_map(alg, f, -3, 3);
    CHECK(verify_triangle_exact(t).passed);
    CHECK(oracle_exact(t, 3));
    auto r = rotate(t);
    CHECK(verify_triangle_exact(r).passed);
    CHECK(oracle_exact(r, 3));
  }
}

TEST_CASE("homology ring classification agrees with the parity condition") {
  CHECK(classify(homology_ring(*make(3, 1, 1, 2)), 1).is_delta);
  CHECK(classify(homology_ring(*make(2, 0, 0)), 0).is_delta);
}
