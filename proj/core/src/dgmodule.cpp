#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "deltaring/dgtriangle.hpp"
#include "deltaring/error.hpp"

namespace deltaring {

namespace {

using Key = std::pair<int, DgaMonomial>;

Scalar sign_scalar(Coeffs const& k, long long e) {
  return e % 2 == 0 ? k.one() : k.from_int(-1);
}

void add_key(Coeffs const& k, ModuleElement& x, Key const& key, Scalar c) {
  if (k.is_zero(c)) return;
  auto [it, inserted] = x.emplace(key, c);
  if (inserted) return;
  it->second = k.add(it->second, c);
  if (k.is_zero(it->second)) x.erase(it);
}

bool elements_equal(ModuleElement const& x, ModuleElement const& y) { return x == y; }

int max_u_exponent(DGModule const& m) {
  int e = 0;
  for (auto const& row : m.differential)
    for (auto const& c : row)
      for (auto const& [mono, s] : c) e = std::max(e, mono.m);
  return e;
}

std::vector<Key> enumerate_slice(DGModule const& m, int s, int max_m) {
  auto const& alg = *m.algebra;
  std::vector<Key> out;
  for (std::size_t j = 0; j < m.rank(); ++j) {
    for (int eps = 0; eps <= 1; ++eps) {
      for (int mm = 0; mm <= max_m; ++mm) {
        long long rem = static_cast<long long>(s) - m.degrees[j] -
                        static_cast<long long>(eps) * alg.a_degree() -
                        static_cast<long long>(mm) * alg.u_degree();
        if (alg.periodic()) {
          if (rem % alg.unit_degree() != 0) continue;
          out.push_back({static_cast<int>(j),
                         {static_cast<int>(rem / alg.unit_degree()), eps, mm}});
        } else if (rem == 0) {
          out.push_back({static_cast<int>(j), {0, eps, mm}});
        }
      }
    }
  }
  return out;
}

/// For k = F_p and |u| != 0 a slice only holds finitely many u-exponents;
/// it is reliable when all of them stay clear of the bound.
bool slice_reliable(DGModule const& m, int s) {
  auto const& alg = *m.algebra;
  if (alg.periodic() || alg.u_degree() == 0) return true;
  int limit = alg.weight_bound() - Homology::kPadding;
  for (int d : m.degrees)
    for (int eps = 0; eps <= 1; ++eps) {
      long long rem = static_cast<long long>(s) - d - static_cast<long long>(eps) * alg.a_degree();
      if (rem % alg.u_degree() != 0) continue;
      long long mm = rem / alg.u_degree();
      if (mm > limit) return false;
    }
  return true;
}

Vec to_slice_vec(Coeffs const& k, HomologySlice const& sl, ModuleElement const& x) {
  Vec v = zero_vec(k, sl.basis.size());
  for (auto const& [key, c] : x) {
    auto it = sl.index.find(key);
    if (it == sl.index.end()) {
      std::ostringstream os;
      os << "element leaves the truncated slice in degree " << sl.degree;
      throw Error(Errc::WeightOverflow, os.str());
    }
    v[it->second] = c;
  }
  return v;
}

ModuleElement from_slice_vec(Coeffs const& k, HomologySlice const& sl, Vec const& v) {
  ModuleElement x;
  for (std::size_t c = 0; c < v.size(); ++c) add_key(k, x, sl.basis[c], v[c]);
  return x;
}

ModuleElement single(Key const& key, Scalar c) { return ModuleElement{{key, c}}; }

}  // namespace

DGModule DGModule::free(DgaHandle alg, std::vector<int> degrees) {
  DGModule m;
  m.algebra = std::move(alg);
  m.differential.assign(degrees.size(), std::vector<DgaElement>(degrees.size()));
  m.degrees = std::move(degrees);
  return m;
}

ModuleElement module_differential(DGModule const& m, ModuleElement const& x) {
  auto const& alg = *m.algebra;
  auto const& k = alg.field();
  ModuleElement out;
  for (auto const& [key, c] : x) {
    auto [j, mono] = key;
    DgaElement gamma;
    alg.add_to(gamma, mono, c);
    for (std::size_t r = 0; r < m.rank(); ++r) {
      auto const& ckj = m.differential[r][static_cast<std::size_t>(j)];
      if (ckj.empty()) continue;
      for (auto const& [pm, pc] : alg.multiply_unbounded(ckj, gamma))
        add_key(k, out, {static_cast<int>(r), pm}, pc);
    }
    Scalar sgn = sign_scalar(k, static_cast<long long>(alg.suspension()) *
                                    m.degrees[static_cast<std::size_t>(j)]);
    for (auto const& [pm, pc] : alg.differential(gamma)) add_key(k, out, {j, pm}, k.mul(sgn, pc));
  }
  return out;
}

ModuleElement apply_map(DGMap const& f, ModuleElement const& x) {
  auto const& alg = *f.source.algebra;
  auto const& k = alg.field();
  ModuleElement out;
  for (auto const& [key, c] : x) {
    auto [j, mono] = key;
    DgaElement gamma;
    alg.add_to(gamma, mono, c);
    for (std::size_t r = 0; r < f.target.rank(); ++r) {
      auto const& fkj = f.matrix[r][static_cast<std::size_t>(j)];
      if (fkj.empty()) continue;
      for (auto const& [pm, pc] : alg.multiply_unbounded(fkj, gamma))
        add_key(k, out, {static_cast<int>(r), pm}, pc);
    }
  }
  return out;
}

void DGModule::validate() const {
  auto const& alg = *algebra;
  if (differential.size() != rank())
    throw Error(Errc::InvalidArgument, "differential matrix has the wrong size");
  for (std::size_t r = 0; r < rank(); ++r) {
    if (differential[r].size() != rank())
      throw Error(Errc::InvalidArgument, "differential matrix has the wrong size");
    for (std::size_t j = 0; j < rank(); ++j) {
      auto const& c = differential[r][j];
      if (c.empty()) continue;
      int want = degrees[j] - alg.suspension() - degrees[r];
      if (alg.degree(c) != want) {
        std::ostringstream os;
        os << "differential entry (" << r << ", " << j << ") has degree " << alg.degree(c)
           << ", expected " << want;
        throw Error(Errc::DegreeMismatch, os.str());
      }
    }
  }
  auto const& k = alg.field();
  for (std::size_t j = 0; j < rank(); ++j) {
    auto de = module_differential(*this, single({static_cast<int>(j), {}}, k.one()));
    if (!module_differential(*this, de).empty()) {
      std::ostringstream os;
      os << "d^2 is nonzero on generator " << j;
      throw Error(Errc::InvalidArgument, os.str());
    }
  }
}

bool DGMap::is_chain_map() const {
  auto const& alg = *source.algebra;
  auto const& k = alg.field();
  for (std::size_t j = 0; j < source.rank(); ++j) {
    auto gen = single({static_cast<int>(j), {}}, k.one());
    auto lhs = module_differential(target, apply_map(*this, gen));
    auto rhs = apply_map(*this, module_differential(source, gen));
    if (!elements_equal(lhs, rhs)) return false;
  }
  return true;
}

DGModule shift(DGModule const& m, int j) {
  DGModule out = m;
  for (auto& d : out.degrees) d += j;
  if (j % 2 != 0) {
    auto const& alg = *m.algebra;
    for (auto& row : out.differential)
      for (auto& c : row) c = alg.scale(alg.field().from_int(-1), c);
  }
  return out;
}

namespace {

void check_map_shape(DGMap const& f) {
  if (f.matrix.size() != f.target.rank())
    throw Error(Errc::InvalidArgument, "map matrix has the wrong number of rows");
  auto const& alg = *f.source.algebra;
  for (std::size_t r = 0; r < f.target.rank(); ++r) {
    if (f.matrix[r].size() != f.source.rank())
      throw Error(Errc::InvalidArgument, "map matrix has the wrong number of columns");
    for (std::size_t j = 0; j < f.source.rank(); ++j) {
      auto const& c = f.matrix[r][j];
      if (c.empty()) continue;
      if (alg.degree(c) != f.source.degrees[j] - f.target.degrees[r]) {
        std::ostringstream os;
        os << "map entry (" << r << ", " << j << ") has the wrong degree";
        throw Error(Errc::DegreeMismatch, os.str());
      }
    }
  }
}

}  // namespace

DGModule cone(DGMap const& f) {
  check_map_shape(f);
  if (!f.is_chain_map()) throw Error(Errc::NotChainMap, "map does not commute with d");
  auto const& alg = *f.source.algebra;
  int n = alg.suspension();
  auto mn = shift(f.source, n);
  std::size_t s = f.target.rank(), r = f.source.rank();
  DGModule c;
  c.algebra = f.source.algebra;
  c.degrees = f.target.degrees;
  c.degrees.insert(c.degrees.end(), mn.degrees.begin(), mn.degrees.end());
  c.differential.assign(s + r, std::vector<DgaElement>(s + r));
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b) c.differential[a][b] = f.target.differential[a][b];
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < r; ++b) c.differential[a][s + b] = f.matrix[a][b];
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) c.differential[s + a][s + b] = mn.differential[a][b];
  return c;
}

DGMap cone_inclusion(DGMap const& f) {
  auto c = cone(f);
  auto const& alg = *f.source.algebra;
  DGMap g{f.target, c, {}};
  g.matrix.assign(c.rank(), std::vector<DgaElement>(f.target.rank()));
  for (std::size_t a = 0; a < f.target.rank(); ++a) g.matrix[a][a] = alg.one();
  return g;
}

DGMap cone_projection(DGMap const& f) {
  auto c = cone(f);
  auto const& alg = *f.source.algebra;
  auto mn = shift(f.source, alg.suspension());
  DGMap h{c, mn, {}};
  std::size_t s = f.target.rank();
  h.matrix.assign(mn.rank(), std::vector<DgaElement>(c.rank()));
  for (std::size_t a = 0; a < mn.rank(); ++a) h.matrix[a][s + a] = alg.one();
  return h;
}

Homology Homology::compute(DGModule const& m, int lo, int hi) {
  auto const& alg = *m.algebra;
  auto const& k = alg.field();
  if (hi < lo) throw Error(Errc::WindowEmpty, "empty degree window");
  int w = alg.weight_bound();
  if (!alg.periodic() && alg.u_degree() != 0) {
    int needed = (hi - lo) / std::abs(alg.u_degree()) + 2 * kPadding;
    if (w < needed) {
      std::ostringstream os;
      os << "window [" << lo << ", " << hi << "] needs weight bound " << needed << ", have " << w;
      throw Error(Errc::WindowTooWideForWeightBound, os.str());
    }
  }
  int n = alg.suspension();
  int w_out = w + max_u_exponent(m) + 4;
  int cycle_bound = w - kPadding;

  Homology h;
  h.m_ = m;
  h.lo_ = lo;
  h.hi_ = hi;
  for (int s = lo; s <= hi; ++s) {
    HomologySlice sl;
    sl.degree = s;
    sl.reliable = slice_reliable(m, s);
    sl.basis = enumerate_slice(m, s, w_out);
    for (std::size_t c = 0; c < sl.basis.size(); ++c) sl.index.emplace(sl.basis[c], c);
    std::size_t dim = sl.basis.size();

    HomologySlice below;
    below.degree = s - n;
    below.basis = enumerate_slice(m, s - n, w_out);
    for (std::size_t c = 0; c < below.basis.size(); ++c) below.index.emplace(below.basis[c], c);

    std::vector<std::size_t> cand;
    for (std::size_t c = 0; c < dim; ++c)
      if (sl.basis[c].second.m <= cycle_bound) cand.push_back(c);
    Matrix d(below.basis.size(), cand.size());
    for (std::size_t c = 0; c < cand.size(); ++c)
      d.set_column(c, to_slice_vec(k, below, module_differential(m, single(sl.basis[cand[c]], k.one()))));
    Span z = kernel(k, d);

    auto src = enumerate_slice(m, s + n, w);
    Matrix b(dim, src.size());
    for (std::size_t c = 0; c < src.size(); ++c)
      b.set_column(c, to_slice_vec(k, sl, module_differential(m, single(src[c], k.one()))));
    sl.boundaries = image(k, b);

    Span acc = sl.boundaries;
    for (auto const& row : z.rows()) {
      Vec cyc = zero_vec(k, dim);
      for (std::size_t c = 0; c < cand.size(); ++c) cyc[cand[c]] = row[c];
      if (acc.contains(cyc)) continue;
      acc = acc.sum(Span::from_generators(k, dim, {cyc}));
      sl.representatives.push_back(std::move(cyc));
    }
    sl.dimension = static_cast<int>(sl.representatives.size());
    h.slices_.push_back(std::move(sl));
  }
  return h;
}

HomologySlice const& Homology::slice(int s) const {
  if (s < lo_ || s > hi_) {
    std::ostringstream os;
    os << "degree " << s << " outside the window [" << lo_ << ", " << hi_ << "]";
    throw Error(Errc::InvalidArgument, os.str());
  }
  return slices_[static_cast<std::size_t>(s - lo_)];
}

Vec Homology::coordinates(int s, Vec const& cycle) const {
  auto const& k = m_.algebra->field();
  auto const& sl = slice(s);
  std::vector<Vec> cols = sl.representatives;
  for (auto const& r : sl.boundaries.rows()) cols.push_back(r);
  auto x = solve(k, Matrix::from_columns(sl.basis.size(), cols), cycle);
  if (!x) {
    std::ostringstream os;
    os << "vector is not a truncated cycle class in degree " << s;
    throw Error(Errc::WeightOverflow, os.str());
  }
  x->resize(sl.representatives.size());
  return *x;
}

Matrix Homology::x_action(int s) const {
  auto const& alg = *m_.algebra;
  auto const& k = alg.field();
  int t = s + alg.u_degree();
  auto const& src = slice(s);
  auto const& dst = slice(t);
  Matrix out(static_cast<std::size_t>(dst.dimension), static_cast<std::size_t>(src.dimension));
  for (std::size_t c = 0; c < src.representatives.size(); ++c) {
    ModuleElement shifted;
    for (auto const& [key, val] : from_slice_vec(k, src, src.representatives[c])) {
      auto mono = key.second;
      ++mono.m;
      add_key(k, shifted, {key.first, mono}, val);
    }
    out.set_column(c, coordinates(t, to_slice_vec(k, dst, shifted)));
  }
  return out;
}

Matrix Homology::induced(DGMap const& f, Homology const& target, int s) const {
  auto const& k = m_.algebra->field();
  auto const& src = slice(s);
  auto const& dst = target.slice(s);
  Matrix out(static_cast<std::size_t>(dst.dimension), static_cast<std::size_t>(src.dimension));
  for (std::size_t c = 0; c < src.representatives.size(); ++c) {
    auto img = apply_map(f, from_slice_vec(k, src, src.representatives[c]));
    out.set_column(c, target.coordinates(s, to_slice_vec(k, dst, img)));
  }
  return out;
}

int Homology::generators_in_degree(int s) const {
  auto const& k = m_.algebra->field();
  int prev = s - m_.algebra->u_degree();
  return dimension(s) - static_cast<int>(rank(k, x_action(prev)));
}

bool Homology::x_exact() const {
  auto const& k = m_.algebra->field();
  int i = m_.algebra->u_degree();
  for (int s = lo_; s <= hi_; ++s) {
    int a = s - i, b = s + i;
    if (a < lo_ || a > hi_ || b < lo_ || b > hi_) continue;
    if (!reliable(a) || !reliable(s) || !reliable(b)) continue;
    auto in = x_action(a), out = x_action(s);
    if (!out.multiply(k, in).is_zero()) return false;
    if (dimension(s) - static_cast<int>(rank(k, out)) != static_cast<int>(rank(k, in)))
      return false;
  }
  return true;
}

bool Homology::x_squared_zero() const {
  auto const& k = m_.algebra->field();
  int i = m_.algebra->u_degree();
  for (int s = lo_; s <= hi_; ++s) {
    int b = s + i, c = s + 2 * i;
    if (b < lo_ || b > hi_ || c < lo_ || c > hi_) continue;
    if (!reliable(s) || !reliable(b) || !reliable(c)) continue;
    if (!x_action(b).multiply(k, x_action(s)).is_zero()) return false;
  }
  return true;
}

}  // namespace deltaring
