#include "commands.hpp"

#include <filesystem>
#include <random>
#include <regex>
#include <sstream>

#include "deltaring/classify.hpp"
#include "deltaring/dgtriangle.hpp"
#include "deltaring/error.hpp"
#include "deltaring/genhyp.hpp"
#include "deltaring/modcat.hpp"
#include "deltaring/module_io.hpp"
#include "deltaring/ring_core.hpp"
#include "deltaring/ring_io.hpp"
#include "deltaring/standard_rings.hpp"

namespace deltaring::cli {

namespace {

using nlohmann::json;

char const* yes_no(bool b) { return b ? "yes" : "no"; }

std::string factor_line(LocalVerdict const& v) {
  std::ostringstream os;
  os << to_string(v.kind);
  if (v.kind == LocalKind::ExteriorAlgebra)
    os << " (|x| = " << v.x_degree.value_or(0)
       << ", unit degree " << v.unit_degree_found.value_or(0) << ")";
  if (v.reason) {
    os << " reason " << to_string(*v.reason);
    if (v.needed_degree) os << "(" << *v.needed_degree << ")";
  }
  return os.str();
}

}  // namespace

Window parse_window(std::string const& s) {
  static std::regex const re(R"(\s*(-?\d+)\s*:\s*(-?\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(s, m, re))
    throw Error(Errc::InvalidArgument, "window must look like lo:hi, got '" + s + "'");
  return {std::stoi(m[1]), std::stoi(m[2])};
}

Outcome run_classify(std::string const& ring_path, int n) {
  auto factors = load_ring_factors(ring_path);
  auto v = classify(factors, n);
  Outcome out;
  out.report = to_json(v);
  out.report["ring"] = ring_path;
  std::ostringstream os;
  os << "ring " << ring_path << ", suspension n = " << n << "\n";
  for (std::size_t f = 0; f < v.factors.size(); ++f)
    os << "  factor " << f + 1 << " (rank " << v.factors[f].ring.rank()
       << "): " << factor_line(v.factors[f].verdict) << "\n";
  if (v.local_criteria_only)
    os << "  only the local criteria apply for this n"
       << (v.parity_admissible.value_or(true) ? "" : "; parity condition violated") << "\n";
  os << (v.is_delta ? "Delta ring" : "not a Delta ring") << "\n";
  out.text = os.str();
  out.status = v.is_delta ? kPositive : kNegative;
  return out;
}

Outcome run_qf(std::string const& ring_path) {
  auto factors = load_ring_factors(ring_path);
  Outcome out;
  out.report["ring"] = ring_path;
  out.report["factors"] = json::array();
  std::ostringstream os;
  os << "ring " << ring_path << "\n";
  bool all = true;
  int index = 0;
  for (auto const& file_factor : factors)
    for (auto const& r : decompose_product(file_factor)) {
      bool qf = is_quasi_frobenius(r);
      auto da = double_annihilator_holds(r);
      int soc = socle_dimension(r);
      all = all && qf;
      out.report["factors"].push_back({{"rank", r.rank()},
                                       {"quasi_frobenius", qf},
                                       {"socle_dimension", soc},
                                       {"double_annihilator", da.holds}});
      os << "  local factor " << ++index << " (rank " << r.rank() << "): socle dimension "
         << soc << ", double annihilator " << yes_no(da.holds) << ", QF " << yes_no(qf)
         << "\n";
    }
  out.report["quasi_frobenius"] = all;
  os << (all ? "quasi-Frobenius" : "not quasi-Frobenius") << "\n";
  out.text = os.str();
  out.status = all ? kPositive : kNegative;
  return out;
}

Outcome run_heller(std::string const& ring_path, std::vector<std::string> const& module_paths,
                   int random_samples, std::uint64_t seed) {
  auto factors = load_ring_factors(ring_path);
  if (factors.size() != 1)
    throw Error(Errc::Unsupported, "heller needs a single ring, not a product file");
  auto r = ModuleRing::make(factors.front());
  if (!r->local) throw Error(Errc::NotLocal, "heller needs a local ring");

  std::vector<std::pair<std::string, FiniteModule>> samples;
  samples.emplace_back("R", FiniteModule::free(r, 1));
  samples.emplace_back("R/m", FiniteModule::cyclic(r, r->maximal_generators));
  for (auto const& path : module_paths) {
    auto m = load_module(path);
    if (!(m.ring()->ring == r->ring))
      throw Error(Errc::InvalidArgument, path + " is over a different ring");
    samples.emplace_back(path, FiniteModule::from_span(r, m.generators(), m.relations()));
  }
  std::mt19937_64 rng(seed);
  for (int s = 0; s < random_samples; ++s)
    samples.emplace_back("random " + std::to_string(s + 1), random_module(r, rng));

  Outcome out;
  out.report["ring"] = ring_path;
  out.report["seed"] = seed;
  out.report["samples"] = json::array();
  std::ostringstream os;
  os << "ring " << ring_path << ": Omega^3 M against M\n";
  int passed = 0;
  for (auto const& [name, m] : samples) {
    bool ok = heller_cube_check({m}).holds;
    passed += ok ? 1 : 0;
    out.report["samples"].push_back({{"name", name}, {"length", m.length()}, {"holds", ok}});
    os << "  " << (ok ? "PASS " : "FAIL ") << name << " (length " << m.length() << ")\n";
  }
  out.report["passed"] = passed;
  out.report["total"] = samples.size();
  out.report["holds"] = passed == static_cast<int>(samples.size());
  os << passed << "/" << samples.size() << " samples satisfy Omega^3 M = M stably\n";
  out.text = os.str();
  out.status = passed == static_cast<int>(samples.size()) ? kPositive : kNegative;
  return out;
}

Outcome run_dg_verify(DgArgs const& a) {
  DgVerifyOptions opt;
  opt.p = a.p;
  opt.i = a.i;
  opt.n = a.n;
  opt.unit_degree = a.unit_degree;
  opt.weight_bound = a.weight;
  opt.lo = a.window.lo;
  opt.hi = a.window.hi;
  opt.trials = a.trials;
  opt.triangles = a.triangles;
  opt.seed = a.seed;
  auto rep = dg_verify(opt);

  Outcome out;
  out.report = to_json(rep);
  std::ostringstream os;
  os << "DG algebra p = " << a.p << ", |u| = " << a.i << ", n = " << a.n << "\n";
  if (!rep.built) {
    os << "  no DG algebra: " << rep.obstruction << "\n";
    out.text = os.str();
    out.status = kNegative;
    return out;
  }
  os << "  unit degree " << rep.unit_degree << (rep.unit_degree == 0 ? " (k = F_p)" : "") << "\n"
     << "  Leibniz failures " << rep.leibniz_failures << "/" << a.trials << ", d^2 failures "
     << rep.d_squared_failures << "/" << a.trials << "\n"
     << "  H(A) on [" << a.window.lo << ", " << a.window.hi << "]: free of rank one "
     << yes_no(rep.homology_free_rank_one()) << ", x^2 = 0 " << yes_no(rep.x_squared_zero)
     << "\n"
     << "  triangles exact " << rep.triangles_exact << "/" << a.triangles
     << ", rotations exact " << rep.rotations_exact << "/" << a.triangles << "\n"
     << (rep.passed() ? "PASS" : "FAIL") << "\n";
  out.text = os.str();
  out.status = rep.passed() ? kPositive : kNegative;
  return out;
}

Outcome run_ggh(std::int64_t p, int n, Window w) {
  auto v = ggh_verdict(p, n, w.lo, w.hi);
  Outcome out;
  out.report = to_json(v);
  std::ostringstream os;
  os << "StMod(F_" << p << "[Z/" << p << "^" << n << "]), window [" << w.lo << ", " << w.hi
     << "]\n"
     << "  pi_* S = " << v.tate.shape << "\n"
     << "  condition 1 (Tate ring is Delta for n = 1): " << yes_no(v.condition1) << "\n";
  if (v.cofiber.vacuous) {
    os << "  condition 2: vacuous, no exterior factor\n";
  } else {
    os << "  cofiber of x: length " << v.cofiber.cofiber_length << "\n  x-action ranks:";
    for (auto const& [j, r] : v.cofiber.x_ranks) os << " " << j << ":" << r;
    os << "\n  condition 2 (x pi_* C != 0): " << yes_no(v.condition2) << "\n";
  }
  if (p != 3) os << "  (computed; no reference value for p = " << p << ")\n";
  os << (v.holds ? "GGH holds" : "GGH fails") << "\n";
  out.text = os.str();
  out.status = v.holds ? kPositive : kNegative;
  return out;
}

Outcome run_selftest() {
  Outcome out;
  out.report["checks"] = json::array();
  std::ostringstream os;
  bool all = true;
  auto record = [&](std::string const& name, bool ok) {
    all = all && ok;
    out.report["checks"].push_back({{"name", name}, {"passed", ok}});
    os << (ok ? "PASS " : "FAIL ") << name << "\n";
  };
  auto guarded = [&](std::string const& name, auto&& fn) {
    try {
      record(name, fn());
    } catch (std::exception const& e) {
      record(name + " (" + e.what() + ")", false);
    }
  };

  guarded("Z/4 is a Delta ring for n = 0", [] {
    auto v = classify(rings::cyclic(4), 0);
    return v.is_delta && v.factors.front().verdict.kind == LocalKind::TMod4;
  });
  guarded("F3[x]/(x^2) fails for n = 0 by characteristic", [] {
    auto v = classify(rings::truncated_polynomial(3, 2), 0);
    return !v.is_delta && v.factors.front().verdict.reason == Reason::WrongCharacteristic;
  });
  guarded("F3[y^+-1][x]/(x^2) is a Delta ring for n = 1", [] {
    return classify(rings::laurent_exterior(3, 1, 2), 1).is_delta;
  });
  guarded("DG algebra (3, 1, 1): d^2, Leibniz, H(A), triangles", [] {
    DgVerifyOptions o;
    o.trials = 40;
    o.triangles = 3;
    o.lo = -6;
    o.hi = 6;
    return dg_verify(o).passed();
  });
  guarded("Omega^3 k = k over F2[x]/(x^2)", [] {
    auto r = ModuleRing::make(rings::truncated_polynomial(2, 2));
    return heller_cube_check({FiniteModule::cyclic(r, r->maximal_generators)}).holds;
  });
  guarded("GGH holds for Z/3", [] { return ggh_verdict(3, 1, -2, 2).holds; });

  out.report["passed"] = all;
  out.text = os.str();
  out.status = all ? kPositive : kNegative;
  return out;
}

}  // namespace deltaring::cli
