#include "deltaring/modcat.hpp"

#include <algorithm>
#include <limits>

#include "deltaring/error.hpp"

namespace deltaring {

namespace {

int coefficient_length(Coeffs const& k) { return big_omega(factorize(k.modulus())); }

Span zero_span(Coeffs const& k, std::size_t dim) {
  return Span::from_generators(k, dim, {});
}

Span full_span(Coeffs const& k, std::size_t dim) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < dim; ++i) {
    Vec v = zero_vec(k, dim);
    v[i] = k.one();
    rows.push_back(std::move(v));
  }
  return Span::from_generators(k, dim, rows);
}

/// The span S^{copies} inside (coefficients)^{copies * S.dim()}.
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

Vec slice_of(Vec const& v, std::size_t start, std::size_t len) {
  return Vec(v.begin() + static_cast<std::ptrdiff_t>(start),
             v.begin() + static_cast<std::ptrdiff_t>(start + len));
}

void check_same_ring(FiniteModule const& a, FiniteModule const& b) {
  if (a.ring() != b.ring() && !(a.ring()->ring == b.ring()->ring))
    throw Error(Errc::InvalidArgument, "modules live over different rings");
}

void require_local(FiniteModule const& m) {
  if (!m.ring()->local) throw Error(Errc::NotLocal, "operation needs a local ring");
}

}  // namespace

std::shared_ptr<ModuleRing const> ModuleRing::make(GradedRing const& r,
                                                   EnumerationLimits lim) {
  if (!r.coeffs().finite() || r.periodic() || !r.ungraded())
    throw Error(Errc::Unsupported, "modules need a finite ungraded ring");
  auto out = std::make_shared<ModuleRing>(ModuleRing{r, 0, {}, false, {}, {}, 0, 0, false});
  out->rank = r.rank();
  for (std::size_t b = 0; b < r.rank(); ++b)
    out->basis_action.push_back(r.mult_matrix(r.basis_element(static_cast<int>(b)), 0, 0));
  out->ring_length = static_cast<int>(r.rank()) * coefficient_length(r.coeffs());
  out->local = is_local(r, lim);
  if (out->local) {
    auto mi = maximal_ideal(r, lim);
    out->simple_socle = socle_dimension(r, lim) == 1;
    out->maximal_generators = span_elements(r, mi);
    out->residue_degree = out->ring_length - mi.slices.at(0).length();
    if (mi.is_zero()) {
      out->uniformizer = r.zero();
    } else {
      for (auto const& x : out->maximal_generators)
        if (principal_ideal(r, x) == mi) {
          out->uniformizer = x;
          break;
        }
    }
  }
  return out;
}

Matrix ModuleRing::left_action(RingElement const& x) const {
  auto const& k = ring.coeffs();
  auto c = ring.coords(x, 0);
  Matrix out(rank, rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) out(i, j) = k.zero();
  for (std::size_t b = 0; b < rank; ++b) {
    if (k.is_zero(c[b])) continue;
    auto const& m = basis_action[b];
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j) out(i, j) = k.add(out(i, j), k.mul(c[b], m(i, j)));
  }
  return out;
}

// ---------------------------------------------------------------- modules

FiniteModule FiniteModule::from_span(RingHandle r, int generators, Span relations) {
  if (generators < 0) throw Error(Errc::InvalidArgument, "negative generator count");
  FiniteModule m(std::move(r), generators, Span{});
  if (relations.dim() != m.ambient_dim())
    throw Error(Errc::ShapeMismatch, "relation span has the wrong dimension");
  m.n_ = std::move(relations);
  return m;
}

FiniteModule FiniteModule::from_relations(
    RingHandle r, int generators, std::vector<std::vector<RingElement>> const& relations) {
  auto m = from_span(r, generators, zero_span(r->ring.coeffs(),
                                              static_cast<std::size_t>(generators) * r->rank));
  std::vector<Vec> vs;
  for (auto const& row : relations) {
    if (static_cast<int>(row.size()) != generators)
      throw Error(Errc::ShapeMismatch, "relation row length differs from generator count");
    vs.push_back(m.from_ring_row(row));
  }
  m.n_ = m.r_span(vs);
  return m;
}

FiniteModule FiniteModule::free(RingHandle r, int generators) {
  return from_relations(std::move(r), generators, {});
}

FiniteModule FiniteModule::cyclic(RingHandle r, std::vector<RingElement> const& ideal_gens) {
  std::vector<std::vector<RingElement>> rel;
  for (auto const& g : ideal_gens) rel.push_back({g});
  return from_relations(std::move(r), 1, rel);
}

std::vector<std::vector<RingElement>> FiniteModule::relation_rows() const {
  std::vector<std::vector<RingElement>> out;
  for (auto const& row : n_.rows()) out.push_back(to_ring_row(row));
  return out;
}

Order FiniteModule::order() const {
  Order total;
  auto per = factorize(coeffs().modulus());
  for (auto [p, e] : per) total[p] = e * static_cast<int>(ambient_dim());
  for (auto [p, e] : n_.order()) total[p] -= e;
  std::erase_if(total, [](auto const& kv) { return kv.second == 0; });
  return total;
}

std::uint64_t FiniteModule::cardinality() const {
  std::uint64_t s = 1;
  for (auto [p, e] : order())
    for (int i = 0; i < e; ++i) {
      if (s > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(p))
        return std::numeric_limits<std::uint64_t>::max();
      s *= static_cast<std::uint64_t>(p);
    }
  return s;
}

int FiniteModule::length() const {
  return static_cast<int>(ambient_dim()) * coefficient_length(coeffs()) - n_.length();
}

Vec FiniteModule::generator(int i) const {
  Vec v = zero();
  // the ring unit need not be the first basis element
  auto one = r_->ring.coords(r_->ring.one(), 0);
  std::copy(one.begin(), one.end(),
            v.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(i) * r_->rank));
  return v;
}

bool FiniteModule::equal(Vec const& a, Vec const& b) const {
  return n_.contains(sub(coeffs(), a, b));
}

Matrix FiniteModule::action_matrix(RingElement const& x) const {
  auto lx = r_->left_action(x);
  auto n = ambient_dim();
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = coeffs().zero();
  for (int b = 0; b < g_; ++b) {
    auto off = static_cast<std::size_t>(b) * r_->rank;
    for (std::size_t i = 0; i < r_->rank; ++i)
      for (std::size_t j = 0; j < r_->rank; ++j) out(off + i, off + j) = lx(i, j);
  }
  return out;
}

Vec FiniteModule::act(RingElement const& x, Vec const& v) const {
  auto lx = r_->left_action(x);
  Vec out = zero();
  for (int b = 0; b < g_; ++b) {
    auto off = static_cast<std::size_t>(b) * r_->rank;
    auto part = lx.apply(coeffs(), slice_of(v, off, r_->rank));
    std::copy(part.begin(), part.end(), out.begin() + static_cast<std::ptrdiff_t>(off));
  }
  return out;
}

Span FiniteModule::r_span(std::vector<Vec> const& vs) const {
  std::vector<Vec> gens = n_.rows();
  for (auto const& v : vs)
    for (auto const& lb : r_->basis_action) {
      Vec w = zero();
      for (int b = 0; b < g_; ++b) {
        auto off = static_cast<std::size_t>(b) * r_->rank;
        auto part = lb.apply(coeffs(), slice_of(v, off, r_->rank));
        std::copy(part.begin(), part.end(), w.begin() + static_cast<std::ptrdiff_t>(off));
      }
      gens.push_back(std::move(w));
    }
  return Span::from_generators(coeffs(), ambient_dim(), gens);
}

std::vector<RingElement> FiniteModule::to_ring_row(Vec const& v) const {
  std::vector<RingElement> out;
  for (int b = 0; b < g_; ++b)
    out.push_back(r_->ring.from_coords(
        slice_of(v, static_cast<std::size_t>(b) * r_->rank, r_->rank), 0));
  return out;
}

Vec FiniteModule::from_ring_row(std::vector<RingElement> const& row) const {
  Vec v = zero();
  for (int b = 0; b < g_; ++b) {
    auto c = r_->ring.coords(row[static_cast<std::size_t>(b)], 0);
    std::copy(c.begin(), c.end(),
              v.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(b) * r_->rank));
  }
  return v;
}

// ------------------------------------------------------------------- maps

ModuleMap ModuleMap::make(FiniteModule source, FiniteModule target, std::vector<Vec> images) {
  check_same_ring(source, target);
  if (static_cast<int>(images.size()) != source.generators())
    throw Error(Errc::ShapeMismatch, "one image per source generator is required");
  for (auto& v : images) {
    if (v.size() != target.ambient_dim())
      throw Error(Errc::ShapeMismatch, "image has the wrong length");
    v = target.reduce(v);
  }
  ModuleMap f{std::move(source), std::move(target), std::move(images)};
  auto lin = f.linear();
  for (auto const& row : f.source.relations().rows())
    if (!f.target.relations().contains(lin.apply(f.source.coeffs(), row)))
      throw Error(Errc::IllFormedMap, "a relation of the source is not sent to zero");
  return f;
}

ModuleMap ModuleMap::zero(FiniteModule const& source, FiniteModule const& target) {
  return make(source, target,
              std::vector<Vec>(static_cast<std::size_t>(source.generators()), target.zero()));
}

ModuleMap ModuleMap::identity(FiniteModule const& m) {
  std::vector<Vec> images;
  for (int i = 0; i < m.generators(); ++i) images.push_back(m.generator(i));
  return make(m, m, images);
}

Matrix ModuleMap::linear() const {
  auto const& k = source.coeffs();
  auto rank = source.ring()->rank;
  Matrix out(target.ambient_dim(), source.ambient_dim());
  for (int j = 0; j < source.generators(); ++j)
    for (std::size_t b = 0; b < rank; ++b) {
      auto col = target.act(source.ring()->ring.basis_element(static_cast<int>(b)),
                            images[static_cast<std::size_t>(j)]);
      out.set_column(static_cast<std::size_t>(j) * rank + b, col);
    }
  (void)k;
  return out;
}

Vec ModuleMap::apply(Vec const& v) const {
  return target.reduce(linear().apply(source.coeffs(), v));
}

bool ModuleMap::is_zero() const {
  return std::all_of(images.begin(), images.end(),
                     [&](Vec const& v) { return target.relations().contains(v); });
}

ModuleMap compose(ModuleMap const& g, ModuleMap const& f) {
  auto lin = g.linear();
  std::vector<Vec> images;
  for (auto const& v : f.images) images.push_back(lin.apply(g.source.coeffs(), v));
  return ModuleMap::make(f.source, g.target, images);
}

ModuleMap add(ModuleMap const& f, ModuleMap const& g) {
  std::vector<Vec> images;
  for (std::size_t i = 0; i < f.images.size(); ++i)
    images.push_back(add(f.source.coeffs(), f.images[i], g.images[i]));
  return ModuleMap::make(f.source, f.target, images);
}

ModuleMap scale(RingElement const& c, ModuleMap const& f) {
  std::vector<Vec> images;
  for (auto const& v : f.images) images.push_back(f.target.act(c, v));
  return ModuleMap::make(f.source, f.target, images);
}

bool maps_equal(ModuleMap const& f, ModuleMap const& g) {
  for (std::size_t i = 0; i < f.images.size(); ++i)
    if (!f.target.equal(f.images[i], g.images[i])) return false;
  return true;
}

// ------------------------------------------------- sub and quotient modules

namespace {

/// Generators of the R-module S/N: Nakayama-minimal over a local ring,
/// greedy otherwise.
std::vector<Vec> choose_generators(FiniteModule const& m, Span const& s) {
  auto const& k = m.coeffs();
  Span current = m.relations();
  if (m.ring()->local) {
    std::vector<Vec> gens = m.relations().rows();
    for (auto const& row : s.rows())
      for (auto const& x : m.ring()->maximal_generators) gens.push_back(m.act(x, row));
    current = Span::from_generators(k, m.ambient_dim(), gens);
  }
  std::vector<Vec> chosen;
  for (auto const& row : s.rows()) {
    if (current.contains(row)) continue;
    chosen.push_back(row);
    current = current.sum(m.r_span({row}));
  }
  return chosen;
}

SubmoduleResult submodule_from_generators(FiniteModule const& m, std::vector<Vec> gens) {
  auto const& k = m.coeffs();
  auto rank = m.ring()->rank;
  auto h = gens.size();
  Matrix phi(m.ambient_dim(), h * rank);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t b = 0; b < rank; ++b)
      phi.set_column(i * rank + b,
                     m.act(m.ring()->ring.basis_element(static_cast<int>(b)), gens[i]));
  auto rel = preimage(k, phi, m.relations());
  auto sub = FiniteModule::from_span(m.ring(), static_cast<int>(h), rel);
  auto inc = ModuleMap::make(sub, m, std::move(gens));
  return {std::move(sub), std::move(inc)};
}

}  // namespace

SubmoduleResult submodule(FiniteModule const& m, Span const& s) {
  auto full = s.sum(m.relations());
  return submodule_from_generators(m, choose_generators(m, full));
}

QuotientResult quotient(FiniteModule const& m, Span const& s) {
  auto q = FiniteModule::from_span(m.ring(), m.generators(), s.sum(m.relations()));
  std::vector<Vec> images;
  for (int i = 0; i < m.generators(); ++i) images.push_back(q.generator(i));
  auto proj = ModuleMap::make(m, q, images);
  return {std::move(q), std::move(proj)};
}

SubmoduleResult kernel(ModuleMap const& f) {
  return submodule(f.source, preimage(f.source.coeffs(), f.linear(), f.target.relations()));
}

SubmoduleResult image(ModuleMap const& f) {
  return submodule(f.target, image(f.source.coeffs(), f.linear()));
}

QuotientResult cokernel(ModuleMap const& f) {
  return quotient(f.target, image(f.source.coeffs(), f.linear()));
}

DirectSum direct_sum(FiniteModule const& a, FiniteModule const& b) {
  check_same_ring(a, b);
  auto const& k = a.coeffs();
  auto da = a.ambient_dim(), db = b.ambient_dim();
  std::vector<Vec> rows;
  for (auto const& r : a.relations().rows()) {
    Vec v = zero_vec(k, da + db);
    std::copy(r.begin(), r.end(), v.begin());
    rows.push_back(std::move(v));
  }
  for (auto const& r : b.relations().rows()) {
    Vec v = zero_vec(k, da + db);
    std::copy(r.begin(), r.end(), v.begin() + static_cast<std::ptrdiff_t>(da));
    rows.push_back(std::move(v));
  }
  auto s = FiniteModule::from_span(a.ring(), a.generators() + b.generators(),
                                   Span::from_generators(k, da + db, rows));
  std::vector<Vec> ia, ib, pa, pb;
  for (int i = 0; i < a.generators(); ++i) ia.push_back(s.generator(i));
  for (int i = 0; i < b.generators(); ++i) ib.push_back(s.generator(a.generators() + i));
  for (int i = 0; i < a.generators(); ++i) {
    pa.push_back(a.generator(i));
    pb.push_back(b.zero());
  }
  for (int i = 0; i < b.generators(); ++i) {
    pa.push_back(a.zero());
    pb.push_back(b.generator(i));
  }
  return {s, ModuleMap::make(a, s, ia), ModuleMap::make(b, s, ib),
          ModuleMap::make(s, a, pa), ModuleMap::make(s, b, pb)};
}

// ------------------------------------------------------ local structure

std::vector<Vec> minimal_generators(FiniteModule const& m) {
  require_local(m);
  std::vector<Vec> gens;
  for (int i = 0; i < m.generators(); ++i) gens.push_back(m.generator(i));
  return choose_generators(m, Span::from_generators(m.coeffs(), m.ambient_dim(), gens)
                                  .sum(m.relations()));
}

ModuleMap projective_cover(FiniteModule const& m) {
  auto gens = minimal_generators(m);
  auto p = FiniteModule::free(m.ring(), static_cast<int>(gens.size()));
  return ModuleMap::make(p, m, gens);
}

SubmoduleResult heller_shift_with_inclusion(FiniteModule const& m) {
  return kernel(projective_cover(m));
}

FiniteModule heller_shift(FiniteModule const& m) {
  return heller_shift_with_inclusion(m).module;
}

Span module_socle(FiniteModule const& m) {
  require_local(m);
  auto const& gens = m.ring()->maximal_generators;
  if (gens.empty()) return full_span(m.coeffs(), m.ambient_dim());
  std::vector<Matrix> blocks;
  for (auto const& x : gens) blocks.push_back(m.action_matrix(x));
  return preimage(m.coeffs(), Matrix::stack(blocks), block_sum(m.relations(), gens.size()));
}

bool is_projective(FiniteModule const& m, EnumerationLimits lim) {
  auto const& ring = m.ring()->ring;
  if (m.ring()->local) {
    auto g0 = static_cast<int>(minimal_generators(m).size());
    return m.length() == g0 * m.ring()->ring_length;
  }
  auto const& k = m.coeffs();
  for (auto const& f : decompose_product_with_idempotents(ring, lim)) {
    auto me = image(k, m.action_matrix(f.idempotent)).sum(m.relations());
    auto mi = maximal_ideal(f.ring, lim);
    std::vector<Vec> gens = m.relations().rows();
    for (auto const& x : span_elements(f.ring, mi)) {
      RingElement lifted;
      for (auto const& [mono, c] : x.terms)
        lifted = ring.add(lifted, ring.scale(k.from_int(c.num),
                                             f.embedding[static_cast<std::size_t>(mono.basis)]));
      for (auto const& row : me.rows()) gens.push_back(m.act(lifted, row));
    }
    auto rad = Span::from_generators(k, m.ambient_dim(), gens);
    int top = me.length() - rad.length();
    int fdeg = residue_degree(f.ring, lim);
    int g0 = top / fdeg;
    int factor_length = static_cast<int>(f.ring.rank()) * coefficient_length(f.ring.coeffs());
    if (me.length() - m.relations().length() != g0 * factor_length) return false;
  }
  return true;
}

int free_summand_count(FiniteModule const& m) {
  require_local(m);
  auto const& r = m.ring()->ring;
  auto soc = socle(r);
  std::vector<Vec> gens = m.relations().rows();
  for (auto const& s : span_elements(r, soc))
    for (int i = 0; i < m.generators(); ++i) gens.push_back(m.act(s, m.generator(i)));
  auto span = Span::from_generators(m.coeffs(), m.ambient_dim(), gens);
  return (span.length() - m.relations().length()) / m.ring()->residue_degree;
}

}  // namespace deltaring
