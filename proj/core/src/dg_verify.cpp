#include "deltaring/classify.hpp"
#include "deltaring/dgtriangle.hpp"
#include "deltaring/error.hpp"

namespace deltaring {

DgaElement random_monomial(DGAlgebra const& alg, std::mt19937_64& rng, int max_m) {
  std::uniform_int_distribution<int> t(-2, 2), eps(0, 1), m(0, max_m);
  std::uniform_int_distribution<std::int64_t> c(1, alg.characteristic() - 1);
  int tt = t(rng), e = eps(rng), mm = m(rng);
  return alg.monomial(tt, e, mm, c(rng));
}

bool DgVerifyReport::homology_free_rank_one() const {
  return built && homology_reliable && homology_generators == 1 &&
         generators_in_degree_zero == 1 && x_exact && x_squared_zero;
}

bool DgVerifyReport::passed() const {
  return homology_free_rank_one() && leibniz_failures == 0 && d_squared_failures == 0 &&
         homology_ring_is_delta.value_or(true) && triangles_exact == options.triangles &&
         rotations_exact == options.triangles;
}

DgVerifyReport dg_verify(DgVerifyOptions const& opt) {
  DgVerifyReport rep;
  rep.options = opt;
  DgaHandle alg;
  try {
    alg = std::make_shared<DGAlgebra const>(
        DGAlgebra::build(opt.p, opt.i, opt.n, opt.unit_degree, opt.weight_bound));
  } catch (Error const& e) {
    if (e.kind() != Errc::ParityObstruction) throw;
    rep.obstruction = e.detail();
    return rep;
  }
  rep.built = true;
  rep.unit_degree = alg->unit_degree();

  std::mt19937_64 rng(opt.seed);
  for (int t = 0; t < opt.trials; ++t) {
    auto x = random_monomial(*alg, rng), y = random_monomial(*alg, rng);
    if (!alg->leibniz_defect(x, y).empty()) ++rep.leibniz_failures;
    if (!alg->differential(alg->differential(x)).empty()) ++rep.d_squared_failures;
  }

  auto h = Homology::compute(DGModule::free(alg, {0}), opt.lo, opt.hi);
  rep.homology_reliable = true;
  for (int s = opt.lo; s <= opt.hi; ++s) rep.homology_reliable = rep.homology_reliable && h.reliable(s);
  int period = alg->periodic() ? alg->unit_degree() : 1;
  for (int s = 0; s < period; ++s)
    if (s >= opt.lo && s <= opt.hi) rep.homology_generators += h.generators_in_degree(s);
  if (opt.lo <= 0 && 0 <= opt.hi) rep.generators_in_degree_zero = h.generators_in_degree(0);
  rep.x_exact = h.x_exact();
  rep.x_squared_zero = h.x_squared_zero();
  if (opt.n == 0 || opt.n == 1) rep.homology_ring_is_delta = classify(homology_ring(*alg), opt.n).is_delta;

  for (int t = 0; t < opt.triangles; ++t) {
    auto f = random_projective_map(*alg, rng, opt.max_rank);
    auto tri = triangle_from_map(alg, f, opt.triangle_lo, opt.triangle_hi);
    if (verify_triangle_exact(tri).passed) ++rep.triangles_exact;
    if (verify_triangle_exact(rotate(tri)).passed) ++rep.rotations_exact;
  }
  return rep;
}

nlohmann::json to_json(DgVerifyReport const& r) {
  auto const& o = r.options;
  nlohmann::json j;
  j["p"] = o.p;
  j["i"] = o.i;
  j["n"] = o.n;
  j["window"] = {o.lo, o.hi};
  j["weight_bound"] = o.weight_bound;
  j["seed"] = o.seed;
  j["built"] = r.built;
  if (!r.built) {
    j["obstruction"] = r.obstruction;
    j["passed"] = false;
    return j;
  }
  j["unit_degree"] = r.unit_degree;
  j["algebra"] = {{"trials", o.trials},
                  {"leibniz_failures", r.leibniz_failures},
                  {"d_squared_failures", r.d_squared_failures}};
  j["homology"] = {{"free_rank_one", r.homology_free_rank_one()},
                   {"generators", r.homology_generators},
                   {"generators_in_degree_zero", r.generators_in_degree_zero},
                   {"reliable", r.homology_reliable},
                   {"x_exact", r.x_exact},
                   {"x_squared_zero", r.x_squared_zero}};
  if (r.homology_ring_is_delta) j["homology"]["ring_is_delta"] = *r.homology_ring_is_delta;
  j["triangles"] = {{"count", o.triangles},
                    {"window", {o.triangle_lo, o.triangle_hi}},
                    {"max_rank", o.max_rank},
                    {"exact", r.triangles_exact},
                    {"rotations_exact", r.rotations_exact}};
  j["passed"] = r.passed();
  return j;
}

}  // namespace deltaring
