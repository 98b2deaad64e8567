#include <cstdlib>
#include <sstream>

#include "deltaring/classify.hpp"
#include "deltaring/dgtriangle.hpp"
#include "deltaring/error.hpp"
#include "deltaring/standard_rings.hpp"

namespace deltaring {

namespace {

bool degree_realized(DGAlgebra const& alg, int d) {
  return alg.periodic() ? d % alg.unit_degree() == 0 : d == 0;
}

int w_power(DGAlgebra const& alg, int d) {
  return alg.periodic() ? d / alg.unit_degree() : 0;
}

}  // namespace

GradedRing homology_ring(DGAlgebra const& alg) {
  if (alg.periodic())
    return rings::laurent_exterior(alg.characteristic(), alg.u_degree(), alg.unit_degree());
  return rings::truncated_polynomial(alg.characteristic(), 2, alg.u_degree());
}

DGModule lift_module(DgaHandle const& alg, ProjectiveModule const& p) {
  return DGModule::free(alg, p.shifts);
}

DGMap lift_map(DgaHandle const& alg, ProjectiveMap const& f) {
  auto const& a = *alg;
  auto const& k = a.field();
  std::size_t rows = f.target.shifts.size(), cols = f.source.shifts.size();
  if (f.entries.size() != rows)
    throw Error(Errc::NotProjectiveInput, "map has the wrong number of rows");
  DGMap out{lift_module(alg, f.source), lift_module(alg, f.target), {}};
  out.matrix.assign(rows, std::vector<DgaElement>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    if (f.entries[r].size() != cols)
      throw Error(Errc::NotProjectiveInput, "map has the wrong number of columns");
    for (std::size_t j = 0; j < cols; ++j) {
      auto const& e = f.entries[r][j];
      int d = f.source.shifts[j] - f.target.shifts[r];
      auto fail = [&](char const* what, int deg) {
        std::ostringstream os;
        os << "entry (" << r << ", " << j << "): no " << what << " term in degree " << deg;
        throw Error(Errc::LiftFailure, os.str());
      };
      DgaElement x;
      if (!k.is_zero(k.from_int(e.c0))) {
        if (!degree_realized(a, d)) fail("scalar", d);
        x = a.add(x, a.monomial(w_power(a, d), 0, 0, e.c0));
      }
      if (!k.is_zero(k.from_int(e.c1))) {
        int dx = d - a.u_degree();
        if (!degree_realized(a, dx)) fail("x", d);
        x = a.add(x, a.monomial(w_power(a, dx), 0, 1, e.c1));
      }
      out.matrix[r][j] = std::move(x);
    }
  }
  return out;
}

Triangle triangle_from_dg_map(DGMap const& f, int lo, int hi) {
  auto const& alg = *f.source.algebra;
  int n = alg.suspension();
  int i = std::abs(alg.u_degree());
  int ext_lo = lo - 2 * n - i;
  int ext_hi = hi + i;

  auto c = cone(f);
  auto g = cone_inclusion(f);
  auto h = cone_projection(f);
  auto mn = shift(f.source, n);

  auto hm = Homology::compute(f.source, ext_lo, ext_hi);
  auto hn = Homology::compute(f.target, ext_lo, ext_hi);
  auto hc = Homology::compute(c, ext_lo, ext_hi);
  auto hmn = Homology::compute(mn, ext_lo, ext_hi);

  Triangle t;
  t.coeffs = alg.field();
  t.n = n;
  t.lo = lo;
  t.hi = hi;
  for (int s = ext_lo; s <= ext_hi; ++s) {
    if (hm.reliable(s)) t.dims[0][s] = hm.dimension(s);
    if (hn.reliable(s)) t.dims[1][s] = hn.dimension(s);
    if (hc.reliable(s)) t.dims[2][s] = hc.dimension(s);
  }
  for (int s = ext_lo; s <= hi; ++s) {
    if (hm.reliable(s) && hn.reliable(s)) t.f[s] = hm.induced(f, hn, s);
    if (hn.reliable(s) && hc.reliable(s)) t.g[s] = hn.induced(g, hc, s);
    if (hc.reliable(s) && hmn.reliable(s)) t.h[s] = hc.induced(h, hmn, s);
  }

  int span = alg.periodic() ? alg.unit_degree() : hi - lo + 1;
  for (int s = lo; s < lo + span && s <= hi; ++s) {
    if (!hc.reliable(s) || !hc.reliable(s - alg.u_degree())) continue;
    for (int r = hc.generators_in_degree(s); r > 0; --r) t.third_term_shifts.push_back(s);
  }
  return t;
}

Triangle triangle_from_map(DgaHandle const& alg, ProjectiveMap const& f, int lo, int hi) {
  auto verdict = classify(homology_ring(*alg), alg->suspension());
  if (!verdict.is_delta)
    throw Error(Errc::NotProjectiveInput,
                "k[x]/(x^2) is not classified as a triangulable ring for these parameters");
  return triangle_from_dg_map(lift_map(alg, f), lo, hi);
}

ExactnessReport verify_triangle_exact(Triangle const& t) {
  ExactnessReport rep;
  auto fail = [&](int s, char const* where) {
    rep.passed = false;
    rep.failing_slice = s;
    rep.failing_position = where;
    return rep;
  };
  for (int s = t.lo; s <= t.hi; ++s) {
    auto fs = t.f.find(s), gs = t.g.find(s), hs = t.h.find(s), fp = t.f.find(s - t.n);
    auto d1 = t.dims[1].find(s), d2 = t.dims[2].find(s), d0 = t.dims[0].find(s - t.n);
    if (fs == t.f.end() || gs == t.g.end() || hs == t.h.end() || fp == t.f.end() ||
        d1 == t.dims[1].end() || d2 == t.dims[2].end() || d0 == t.dims[0].end())
      continue;
    auto const& k = t.coeffs;
    auto rk = [&](Matrix const& m) { return static_cast<int>(rank(k, m)); };
    if (!fp->second.multiply(k, hs->second).is_zero() ||
        d0->second - rk(fp->second) != rk(hs->second))
      return fail(s, "X0[n]");
    if (!gs->second.multiply(k, fs->second).is_zero() ||
        d1->second - rk(gs->second) != rk(fs->second))
      return fail(s, "X1");
    if (!hs->second.multiply(k, gs->second).is_zero() ||
        d2->second - rk(hs->second) != rk(gs->second))
      return fail(s, "X2");
  }
  return rep;
}

Triangle rotate(Triangle const& t) {
  Triangle r;
  r.n = t.n;
  r.lo = t.lo;
  r.hi = t.hi;
  r.coeffs = t.coeffs;
  r.dims[0] = t.dims[1];
  r.dims[1] = t.dims[2];
  for (auto const& [s, d] : t.dims[0]) r.dims[2][s + t.n] = d;
  r.f = t.g;
  r.g = t.h;
  for (auto const& [s, m] : t.f) {
    Matrix neg(m.rows(), m.cols());
    for (std::size_t a = 0; a < m.rows(); ++a)
      for (std::size_t b = 0; b < m.cols(); ++b) neg(a, b) = t.coeffs.neg(m(a, b));
    r.h[s + t.n] = std::move(neg);
  }
  return r;
}

ProjectiveMap random_projective_map(DGAlgebra const& alg, std::mt19937_64& rng, int max_rank) {
  std::uniform_int_distribution<int> rank_dist(1, max_rank);
  int period = alg.periodic() ? alg.unit_degree() : std::abs(alg.u_degree()) + 1;
  std::uniform_int_distribution<int> shift_dist(0, period - 1);
  std::uniform_int_distribution<std::int64_t> coeff(0, alg.characteristic() - 1);
  ProjectiveMap f;
  for (int j = rank_dist(rng); j > 0; --j) f.source.shifts.push_back(shift_dist(rng));
  for (int j = rank_dist(rng); j > 0; --j) f.target.shifts.push_back(shift_dist(rng));
  f.entries.assign(f.target.shifts.size(),
                   std::vector<ProjectiveEntry>(f.source.shifts.size()));
  for (std::size_t r = 0; r < f.target.shifts.size(); ++r)
    for (std::size_t j = 0; j < f.source.shifts.size(); ++j) {
      int d = f.source.shifts[j] - f.target.shifts[r];
      auto& e = f.entries[r][j];
      if (degree_realized(alg, d)) e.c0 = coeff(rng);
      if (degree_realized(alg, d - alg.u_degree())) e.c1 = coeff(rng);
    }
  return f;
}

}  // namespace deltaring
