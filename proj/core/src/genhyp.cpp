#include "deltaring/genhyp.hpp"

#include <sstream>

#include "deltaring/classify.hpp"
#include "deltaring/error.hpp"
#include "deltaring/standard_rings.hpp"

namespace deltaring {

CyclicGroupAlgebra CyclicGroupAlgebra::make(std::int64_t p, int n) {
  if (!is_prime(p)) throw Error(Errc::InvalidArgument, "p must be prime");
  if (n < 1) throw Error(Errc::InvalidArgument, "the exponent n must be positive");
  std::int64_t order = 1;
  for (int i = 0; i < n; ++i) {
    order *= p;
    if (order > 512) throw Error(Errc::SizeCapExceeded, "group order p^n above 512");
  }
  auto ring = ModuleRing::make(rings::truncated_polynomial(p, static_cast<int>(order), 0));
  auto const& r = ring->ring;
  Vec t = zero_vec(r.coeffs(), ring->rank);
  t[1] = r.coeffs().one();
  auto trivial = FiniteModule::cyclic(ring, {r.from_coords(t, 0)});
  return {p, n, static_cast<int>(order), ring, std::move(trivial)};
}

ShiftTower::ShiftTower(FiniteModule base) { cache_.emplace(0, std::move(base)); }

FiniteModule const& ShiftTower::at(int j) {
  if (auto it = cache_.find(j); it != cache_.end()) return it->second;
  FiniteModule next = j > 0 ? heller_shift(at(j - 1)) : cosyzygy(at(j + 1));
  return cache_.emplace(j, std::move(next)).first->second;
}

ModuleMap ShiftTower::shift_map(ModuleMap const& f, int j) {
  ModuleMap out = f;
  for (; j > 0; --j) out = heller_shift_map(out);
  for (; j < 0; ++j) out = cosyzygy_map(out);
  return out;
}

ModuleMap tate_x(CyclicGroupAlgebra const& g) {
  auto s = stable_hom(heller_shift(g.trivial), g.trivial);
  if (s.basis.empty()) throw Error(Errc::ShapeMismatch, "no nonzero stable map Omega k -> k");
  return s.basis.front();
}

TateRing tate_ring(std::int64_t p, int n, int lo, int hi) {
  if (hi < lo) throw Error(Errc::WindowEmpty, "empty degree window");
  auto g = CyclicGroupAlgebra::make(p, n);
  ShiftTower tower(g.trivial);
  TateRing out;
  out.p = p;
  out.n = n;
  out.lo = lo;
  out.hi = hi;
  bool all_one = true;
  for (int j = lo; j <= hi; ++j) {
    int d = stable_hom(tower.at(j), g.trivial).dimension;
    out.dimensions[j] = d;
    all_one = all_one && d == 1;
  }

  auto x = tate_x(g);
  auto ys = stable_hom(tower.at(2), g.trivial);
  if (ys.basis.empty()) throw Error(Errc::ShapeMismatch, "pi_2 S vanishes");
  auto const& y = ys.basis.front();
  out.x_squared_zero = factors_through_projective(compose(x, ShiftTower::shift_map(x, 1)));
  out.xy_nonzero = !factors_through_projective(compose(x, ShiftTower::shift_map(y, 1)));

  out.y_periodic = true;
  for (int j = lo; j + 2 <= hi; ++j) {
    auto b = stable_hom(tower.at(j), g.trivial);
    bool injective = !b.basis.empty();
    for (auto const& beta : b.basis)
      injective = injective &&
                  !factors_through_projective(compose(y, ShiftTower::shift_map(beta, 2)));
    if (!injective) {
      out.y_periodic = false;
      break;
    }
  }

  if (!all_one || !out.y_periodic || !out.xy_nonzero) {
    std::ostringstream os;
    os << "pi_* S for p = " << p << ", n = " << n
       << " is not one-dimensional and 2-periodic in the window";
    throw Error(Errc::ShapeMismatch, os.str());
  }
  if (out.x_squared_zero) {
    out.ring = rings::laurent_exterior(p, 1, 2);
    out.shape = "F_p[y^{+-1}][x]/(x^2), |x| = 1, |y| = 2";
  } else {
    out.ring = rings::laurent_field(p, 1, "x");
    out.shape = "F_p[x^{+-1}], |x| = 1";
  }
  return out;
}

Cofiber cofiber_stmod(ModuleMap const& f) {
  auto iota = injective_envelope(f.source);
  auto ds = direct_sum(iota.target, f.target);
  auto phi = add(compose(ds.inject_first, iota), compose(ds.inject_second, f));
  auto q = cokernel(phi);
  auto from_target = compose(q.projection, ds.inject_second);
  auto sh = cosyzygy_with_projection(f.source);
  std::vector<Vec> images;
  for (int i = 0; i < ds.module.generators(); ++i)
    images.push_back(sh.projection.apply(ds.project_first.apply(ds.module.generator(i))));
  auto to_shift = ModuleMap::make(q.module, sh.module, images);
  return {q.module, from_target, to_shift};
}

std::map<int, int> stable_homotopy_dimensions(FiniteModule const& unit, FiniteModule const& m,
                                              int lo, int hi) {
  ShiftTower tower(unit);
  std::map<int, int> out;
  for (int j = lo; j <= hi; ++j) out[j] = stable_hom(tower.at(j), m).dimension;
  return out;
}

namespace {

/// Length of the image of phi_* : pi(P, X) -> pi(P, Y).
int induced_rank(FiniteModule const& p, ModuleMap const& phi) {
  auto h = hom(p, phi.source);
  std::vector<ModuleMap> comps;
  for (auto const& row : h.maps.rows()) comps.push_back(compose(phi, h.to_map(row)));
  return stable_span_length(p, phi.target, comps);
}

}  // namespace

SequenceReport verify_cofiber_sequence(ModuleMap const& f, Cofiber const& c,
                                       FiniteModule const& unit, int lo, int hi) {
  SequenceReport rep;
  auto const& g = c.from_target;
  auto const& h = c.to_shift;
  auto fs = cosyzygy_map(f);
  auto fail = [&](int j, char const* where) {
    rep.exact = false;
    rep.failing_degree = j;
    rep.failing_position = where;
    return rep;
  };
  if (!factors_through_projective(compose(g, f))) return fail(lo, "N");
  if (!factors_through_projective(compose(h, g))) return fail(lo, "C");
  if (!factors_through_projective(compose(fs, h))) return fail(lo, "Omega^-1 M");

  ShiftTower tower(unit);
  for (int j = lo; j <= hi; ++j) {
    auto const& p = tower.at(j);
    int rf = induced_rank(p, f), rg = induced_rank(p, g), rh = induced_rank(p, h),
        rfs = induced_rank(p, fs);
    if (stable_hom(p, f.target).length - rg != rf) return fail(j, "N");
    if (stable_hom(p, c.module).length - rh != rg) return fail(j, "C");
    if (stable_hom(p, h.target).length - rfs != rh) return fail(j, "Omega^-1 M");
  }
  return rep;
}

namespace {

Condition2Report condition2_impl(CyclicGroupAlgebra const& g, TateRing const& tate) {
  Condition2Report rep;
  if (!tate.x_squared_zero) {
    rep.vacuous = true;
    rep.holds = true;
    return rep;
  }
  auto x = tate_x(g);
  auto c = cofiber_stmod(x);
  rep.cofiber_length = c.module.length();
  ShiftTower tower(g.trivial);
  for (int j = tate.lo; j <= tate.hi; ++j) {
    auto const& p = tower.at(j);
    rep.dimensions[j] = stable_hom(p, c.module).dimension;
    auto xj = ShiftTower::shift_map(x, j);
    auto h = hom(p, c.module);
    std::vector<ModuleMap> comps;
    for (auto const& row : h.maps.rows()) comps.push_back(compose(h.to_map(row), xj));
    int r = stable_span_length(xj.source, c.module, comps) / g.ring->residue_degree;
    rep.x_ranks[j] = r;
    rep.holds = rep.holds || r > 0;
  }
  return rep;
}

bool condition1(TateRing const& t) { return classify(*t.ring, 1).is_delta; }

}  // namespace

Condition2Report ggh_condition2(std::int64_t p, int n, int lo, int hi) {
  auto tate = tate_ring(p, n, lo, hi);
  if (!condition1(tate))
    throw Error(Errc::ShapeMismatch, "the Tate ring is not classified as a graded Delta^1 ring");
  return condition2_impl(CyclicGroupAlgebra::make(p, n), tate);
}

GghVerdict ggh_verdict(std::int64_t p, int n, int lo, int hi) {
  GghVerdict v;
  v.p = p;
  v.n = n;
  v.lo = lo;
  v.hi = hi;
  v.tate = tate_ring(p, n, lo, hi);
  v.condition1 = condition1(v.tate);
  if (v.condition1) {
    v.cofiber = condition2_impl(CyclicGroupAlgebra::make(p, n), v.tate);
    v.condition2 = v.cofiber.holds;
  }
  v.holds = v.condition1 && v.condition2;
  return v;
}

nlohmann::json to_json(GghVerdict const& v) {
  auto by_degree = [](std::map<int, int> const& m) {
    nlohmann::json j = nlohmann::json::object();
    for (auto const& [d, x] : m) j[std::to_string(d)] = x;
    return j;
  };
  nlohmann::json j;
  j["p"] = v.p;
  j["n"] = v.n;
  j["window"] = {v.lo, v.hi};
  j["condition1"] = v.condition1;
  j["condition2"] = v.condition2;
  j["verdict"] = v.holds ? "GGH holds" : "GGH fails";
  j["reference_case"] = v.p == 3;
  j["tate"] = {{"shape", v.tate.shape},
               {"dimensions", by_degree(v.tate.dimensions)},
               {"x_squared_zero", v.tate.x_squared_zero},
               {"y_periodic", v.tate.y_periodic}};
  j["cofiber"] = {{"vacuous", v.cofiber.vacuous},
                  {"length", v.cofiber.cofiber_length},
                  {"dimensions", by_degree(v.cofiber.dimensions)},
                  {"x_ranks", by_degree(v.cofiber.x_ranks)}};
  return j;
}

}  // namespace deltaring
