#include <algorithm>

#include "deltaring/error.hpp"
#include "deltaring/modcat.hpp"

namespace deltaring {

namespace {

Span block_sum(Span const& s, std::size_t copies) {
  auto const& k = s.coeffs();
  auto dim = s.dim() * copies;
  std::vector<Vec> rows;
  for (std::size_t c = 0; c < copies; ++c)
    for (auto const& row : s.rows()) {
      Vec v = zero_vec(k, dim);
      std::copy(row.begin(), row.end(), v.begin() + static_cast<std::ptrdiff_t>(c * s.dim()));
      rows.push_back(std::move(v));
    }
  return Span::from_generators(k, dim, rows);
}

std::uint64_t span_size(Span const& s) {
  std::uint64_t n = 1;
  for (auto [p, e] : s.order())
    for (int i = 0; i < e; ++i) {
      if (n > (std::uint64_t{1} << 62)) return n;
      n *= static_cast<std::uint64_t>(p);
    }
  return n;
}

/// Calls f on every element of the span (one representation each).
template <class F>
bool for_each_element(Span const& s, F&& f) {
  auto const& k = s.coeffs();
  auto const& rows = s.rows();
  std::vector<std::int64_t> orders, c(rows.size(), 0);
  for (std::size_t j = 0; j < rows.size(); ++j)
    orders.push_back(k.additive_order(rows[j][s.pivots()[j]]));
  while (true) {
    Vec v = zero_vec(k, s.dim());
    for (std::size_t j = 0; j < rows.size(); ++j) axpy(k, v, k.from_int(c[j]), rows[j]);
    if (f(static_cast<Vec const&>(v))) return true;
    std::size_t j = 0;
    while (j < rows.size() && ++c[j] == orders[j]) c[j++] = 0;
    if (j == rows.size()) return false;
  }
}

void require_local_qf(FiniteModule const& m) {
  if (!m.ring()->local)
    throw Error(Errc::Unsupported, "stable category computations need a local ring");
  if (!m.ring()->simple_socle)
    throw Error(Errc::NotQuasiFrobenius, "ring socle is not simple");
}

/// Some x in the source ambient with p(x) = t in the target.
Vec lift_through(ModuleMap const& p, Vec const& t) {
  auto const& k = p.source.coeffs();
  auto lin = p.linear();
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < lin.cols(); ++c) cols.push_back(lin.column(c));
  auto const& rel = p.target.relations().rows();
  cols.insert(cols.end(), rel.begin(), rel.end());
  auto sol = solve(k, Matrix::from_columns(p.target.ambient_dim(), cols), t);
  if (!sol) throw Error(Errc::LiftFailure, "element is not in the image");
  return Vec(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(lin.cols()));
}

/// Acting on every block of a flattened list of target vectors.
Vec act_flat(FiniteModule const& target, RingElement const& x, Vec const& flat) {
  Vec out(flat.size());
  auto d = target.ambient_dim();
  for (std::size_t off = 0; off < flat.size(); off += d) {
    Vec part(flat.begin() + static_cast<std::ptrdiff_t>(off),
             flat.begin() + static_cast<std::ptrdiff_t>(off + d));
    auto w = target.act(x, part);
    std::copy(w.begin(), w.end(), out.begin() + static_cast<std::ptrdiff_t>(off));
  }
  return out;
}

/// R-span of flattened maps.
Span r_span_flat(FiniteModule const& target, Span const& base, std::vector<Vec> const& flats) {
  auto const& r = target.ring()->ring;
  std::vector<Vec> gens = base.rows();
  for (auto const& f : flats)
    for (std::size_t b = 0; b < r.rank(); ++b)
      gens.push_back(act_flat(target, r.basis_element(static_cast<int>(b)), f));
  return Span::from_generators(target.coeffs(), base.dim(), gens);
}

}  // namespace

// -------------------------------------------------------------- isomorphism

bool iso_test(FiniteModule const& m, FiniteModule const& n, ModuleLimits lim) {
  if (!(m.ring()->ring == n.ring()->ring))
    throw Error(Errc::InvalidArgument, "modules live over different rings");
  if (m.order() != n.order()) return false;
  auto const& ring = m.ring();
  if (ring->local && ring->uniformizer) {
    // Modules over a chain ring are sums of cyclic R/m^i, determined by
    // the lengths of x^j M.
    auto x = *ring->uniformizer;
    auto xj = ring->ring.one();
    for (int j = 0; j <= ring->ring_length; ++j) {
      auto lm = image(m.coeffs(), m.action_matrix(xj)).sum(m.relations()).length() -
                m.relations().length();
      auto ln = image(n.coeffs(), n.action_matrix(xj)).sum(n.relations()).length() -
                n.relations().length();
      if (lm != ln) return false;
      xj = ring->ring.multiply(xj, x);
    }
    return true;
  }
  if (m.cardinality() > lim.max_module_size)
    throw Error(Errc::SizeCapExceeded, "module too large for brute-force isomorphism");
  auto h = hom(m, n);
  if (span_size(h.maps) > lim.max_hom_size)
    throw Error(Errc::SizeCapExceeded, "Hom set too large for brute-force isomorphism");
  auto const& k = m.coeffs();
  auto target_len = m.relations().length();
  return for_each_element(h.maps, [&](Vec const& flat) {
    auto f = h.to_map(flat);
    return preimage(k, f.linear(), n.relations()).length() == target_len;
  });
}

bool stably_isomorphic(FiniteModule const& m, FiniteModule const& n, ModuleLimits lim) {
  auto a = free_summand_count(m);
  auto b = free_summand_count(n);
  auto mm = direct_sum(m, FiniteModule::free(m.ring(), b)).module;
  auto nn = direct_sum(n, FiniteModule::free(n.ring(), a)).module;
  return iso_test(mm, nn, lim);
}

// ---------------------------------------------------------------------- Hom

ModuleMap HomSpace::to_map(Vec const& flat) const {
  std::vector<Vec> images;
  auto d = target.ambient_dim();
  for (int j = 0; j < source.generators(); ++j) {
    auto off = static_cast<std::size_t>(j) * d;
    images.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(off),
                        flat.begin() + static_cast<std::ptrdiff_t>(off + d));
  }
  return ModuleMap::make(source, target, images);
}

Vec HomSpace::flatten(ModuleMap const& f) const {
  Vec out;
  for (auto const& v : f.images) out.insert(out.end(), v.begin(), v.end());
  return out;
}

HomSpace hom(FiniteModule const& m, FiniteModule const& n) {
  if (!(m.ring()->ring == n.ring()->ring))
    throw Error(Errc::InvalidArgument, "modules live over different rings");
  auto const& k = m.coeffs();
  auto const& r = m.ring()->ring;
  auto rank = m.ring()->rank;
  auto dn = n.ambient_dim();
  auto g = static_cast<std::size_t>(m.generators());
  auto unknowns = g * dn;
  auto const& rels = m.relations().rows();
  auto zero_maps = block_sum(n.relations(), g);
  if (rels.empty()) {
    std::vector<Vec> all;
    for (std::size_t i = 0; i < unknowns; ++i) {
      Vec v = zero_vec(k, unknowns);
      v[i] = k.one();
      all.push_back(std::move(v));
    }
    return {m, n, Span::from_generators(k, unknowns, all), zero_maps};
  }
  // For a relation rho = sum_j rho_j e_j the constraint is
  // sum_j rho_j * F(e_j) in N.
  Matrix c(rels.size() * dn, unknowns);
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) = k.zero();
  for (std::size_t l = 0; l < rels.size(); ++l)
    for (std::size_t j = 0; j < g; ++j) {
      Vec part(rels[l].begin() + static_cast<std::ptrdiff_t>(j * rank),
               rels[l].begin() + static_cast<std::ptrdiff_t>((j + 1) * rank));
      auto block = n.action_matrix(r.from_coords(part, 0));
      for (std::size_t a = 0; a < dn; ++a)
        for (std::size_t b = 0; b < dn; ++b) c(l * dn + a, j * dn + b) = block(a, b);
    }
  auto maps = preimage(k, c, block_sum(n.relations(), rels.size()));
  return {m, n, maps, zero_maps};
}

// --------------------------------------------------------------- stable Hom

namespace {

/// Maps M -> N that factor through the projective cover of N.
Span projective_maps(HomSpace const& h) {
  auto pi = projective_cover(h.target);
  auto hp = hom(h.source, pi.source);
  std::vector<Vec> gens = h.zero_maps.rows();
  for (auto const& row : hp.maps.rows()) gens.push_back(h.flatten(compose(pi, hp.to_map(row))));
  return Span::from_generators(h.target.coeffs(), h.maps.dim(), gens);
}

}  // namespace

StableHom stable_hom(FiniteModule const& m, FiniteModule const& n) {
  require_local_qf(m);
  auto h = hom(m, n);
  auto pm = projective_maps(h);
  StableHom out;
  out.length = h.maps.length() - pm.length();
  out.dimension = out.length / m.ring()->residue_degree;
  // Nakayama-minimal representatives of the R-module Hom / PHom.
  std::vector<Vec> rad = pm.rows();
  for (auto const& row : h.maps.rows())
    for (auto const& x : m.ring()->maximal_generators) rad.push_back(act_flat(n, x, row));
  auto current = Span::from_generators(m.coeffs(), h.maps.dim(), rad);
  for (auto const& row : h.maps.rows()) {
    if (current.contains(row)) continue;
    out.basis.push_back(h.to_map(row));
    current = r_span_flat(n, current, {row});
  }
  return out;
}

int stable_span_length(FiniteModule const& m, FiniteModule const& n,
                       std::vector<ModuleMap> const& maps) {
  require_local_qf(m);
  auto h = hom(m, n);
  auto pm = projective_maps(h);
  std::vector<Vec> gens = pm.rows();
  for (auto const& f : maps) gens.push_back(h.flatten(f));
  return Span::from_generators(m.coeffs(), h.maps.dim(), gens).length() - pm.length();
}

bool factors_through_projective(ModuleMap const& f) {
  require_local_qf(f.source);
  auto h = hom(f.source, f.target);
  return projective_maps(h).contains(h.flatten(f));
}

// ------------------------------------------------------ injective envelope

ModuleMap injective_envelope(FiniteModule const& m) {
  require_local_qf(m);
  auto const& k = m.coeffs();
  auto rfree = FiniteModule::free(m.ring(), 1);
  auto h = hom(m, rfree);
  auto kern = module_socle(m);
  std::vector<ModuleMap> chosen;
  while (kern.length() > m.relations().length()) {
    bool found = false;
    for (auto const& row : h.maps.rows()) {
      auto phi = h.to_map(row);
      auto lin = phi.linear();
      bool vanishes = std::all_of(kern.rows().begin(), kern.rows().end(), [&](Vec const& v) {
        return is_zero_vec(lin.apply(k, v));
      });
      if (vanishes) continue;
      chosen.push_back(phi);
      kern = kern.intersect(kernel(k, lin));
      found = true;
      break;
    }
    if (!found) throw Error(Errc::NotQuasiFrobenius, "socle cannot be embedded in a free module");
  }
  auto s = static_cast<int>(chosen.size());
  auto target = FiniteModule::free(m.ring(), s);
  std::vector<Vec> images;
  for (int j = 0; j < m.generators(); ++j) {
    Vec v;
    for (auto const& phi : chosen) {
      auto const& img = phi.images[static_cast<std::size_t>(j)];
      v.insert(v.end(), img.begin(), img.end());
    }
    if (v.empty()) v = target.zero();
    images.push_back(std::move(v));
  }
  return ModuleMap::make(m, target, images);
}

QuotientResult cosyzygy_with_projection(FiniteModule const& m) {
  return cokernel(injective_envelope(m));
}

FiniteModule cosyzygy(FiniteModule const& m) { return cosyzygy_with_projection(m).module; }

// ------------------------------------------------------------ shifted maps

ModuleMap heller_shift_map(ModuleMap const& f) {
  auto pm = projective_cover(f.source);
  auto pn = projective_cover(f.target);
  // lift f o pm through pn
  std::vector<Vec> lifted;
  for (auto const& v : pm.images) lifted.push_back(lift_through(pn, f.apply(v)));
  auto big = ModuleMap::make(pm.source, pn.source, lifted);
  auto om = kernel(pm);
  auto on = kernel(pn);
  std::vector<Vec> images;
  for (auto const& v : om.inclusion.images)
    images.push_back(lift_through(on.inclusion, big.apply(v)));
  return ModuleMap::make(om.module, on.module, images);
}

ModuleMap cosyzygy_map(ModuleMap const& f) {
  auto im = injective_envelope(f.source);
  auto in = injective_envelope(f.target);
  auto const& k = f.source.coeffs();
  auto const& r = f.source.ring()->ring;
  auto rank = f.source.ring()->rank;
  auto s = static_cast<std::size_t>(im.target.generators());
  auto dt = in.target.ambient_dim();
  // Unknown G : R^s -> R^t given by s images; constraint G(im(e_j)) = in(f(e_j)).
  auto g = static_cast<std::size_t>(f.source.generators());
  Matrix c(g * dt, s * dt);
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) c(i, j) = k.zero();
  Vec rhs;
  for (std::size_t j = 0; j < g; ++j) {
    auto const& src = im.images[j];
    for (std::size_t i = 0; i < s; ++i) {
      Vec part(src.begin() + static_cast<std::ptrdiff_t>(i * rank),
               src.begin() + static_cast<std::ptrdiff_t>((i + 1) * rank));
      auto block = in.target.action_matrix(r.from_coords(part, 0));
      for (std::size_t a = 0; a < dt; ++a)
        for (std::size_t b = 0; b < dt; ++b) c(j * dt + a, i * dt + b) = block(a, b);
    }
    auto t = in.apply(f.images[j]);
    rhs.insert(rhs.end(), t.begin(), t.end());
  }
  auto sol = solve(k, c, rhs);
  if (!sol) throw Error(Errc::LiftFailure, "map does not extend to the injective envelopes");
  auto cm = cokernel(im);
  auto cn = cokernel(in);
  std::vector<Vec> images;
  for (std::size_t i = 0; i < s; ++i)
    images.emplace_back(sol->begin() + static_cast<std::ptrdiff_t>(i * dt),
                        sol->begin() + static_cast<std::ptrdiff_t>((i + 1) * dt));
  return ModuleMap::make(cm.module, cn.module, images);
}

// ------------------------------------------------------------------ checks

HellerReport heller_cube_check(std::vector<FiniteModule> const& samples, ModuleLimits lim) {
  HellerReport rep;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    auto o = heller_shift(heller_shift(heller_shift(samples[i])));
    if (!stably_isomorphic(o, samples[i], lim)) {
      rep.holds = false;
      rep.failing_sample = i;
      return rep;
    }
  }
  return rep;
}

FiniteModule random_module(RingHandle const& r, std::mt19937_64& rng, int max_generators,
                           int max_relations) {
  auto const& ring = r->ring;
  auto const& k = ring.coeffs();
  std::uniform_int_distribution<int> gdist(1, max_generators);
  std::uniform_int_distribution<int> rdist(0, max_relations);
  std::uniform_int_distribution<std::int64_t> cdist(0, k.modulus() - 1);
  std::uniform_int_distribution<int> coin(0, 2);
  auto const& rad = r->maximal_generators;
  int g = gdist(rng);
  int nrel = rdist(rng);
  std::vector<std::vector<RingElement>> rels;
  for (int l = 0; l < nrel; ++l) {
    std::vector<RingElement> row;
    for (int j = 0; j < g; ++j) {
      Vec c;
      for (std::size_t b = 0; b < ring.rank(); ++b) c.push_back(k.from_int(cdist(rng)));
      auto x = ring.from_coords(c, 0);
      // bias entries into the radical so that samples are rarely free or zero
      if (!rad.empty() && coin(rng) != 0)
        x = ring.multiply(x, rad[static_cast<std::size_t>(rng() % rad.size())]);
      row.push_back(std::move(x));
    }
    rels.push_back(std::move(row));
  }
  return FiniteModule::from_relations(r, g, rels);
}

}  // namespace deltaring
