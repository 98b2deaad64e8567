#include "deltaring/ring_core.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "deltaring/error.hpp"

namespace deltaring {

namespace {

int coefficient_length(Coeffs const& k) {
  return k.rational() ? 1 : big_omega(factorize(k.modulus()));
}

int slice_length(GradedRing const& r, int d) {
  return static_cast<int>(r.slice(d).size()) * coefficient_length(r.coeffs());
}

int window_length(GradedRing const& r) {
  int total = 0;
  for (int d : r.degree_window()) total += slice_length(r, d);
  return total;
}

Span full_slice(GradedRing const& r, int d) {
  auto n = r.slice(d).size();
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Vec v = zero_vec(r.coeffs(), n);
    v[i] = r.coeffs().one();
    rows.push_back(std::move(v));
  }
  return Span::from_generators(r.coeffs(), n, rows);
}

/// Number of elements in a slice when finite and below the cap.
std::optional<std::uint64_t> slice_cardinality(GradedRing const& r, int d,
                                               EnumerationLimits lim) {
  if (r.coeffs().rational()) return std::nullopt;
  auto m = static_cast<std::uint64_t>(r.coeffs().modulus());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < r.slice(d).size(); ++i) {
    if (total > lim.max_elements / m) return std::nullopt;
    total *= m;
  }
  return total;
}

/// Calls f on every coordinate vector of a finite slice.
template <class F>
void for_each_vector(Coeffs const& k, std::size_t n, F&& f) {
  Vec v = zero_vec(k, n);
  while (true) {
    f(static_cast<Vec const&>(v));
    std::size_t i = 0;
    while (i < n) {
      v[i] = k.add(v[i], k.one());
      if (!k.is_zero(v[i])) break;
      ++i;
    }
    if (i == n) return;
  }
}

Matrix matrix_power(Coeffs const& k, Matrix a, int e) {
  Matrix out = Matrix::identity(k, a.rows());
  while (e > 0) {
    if (e & 1) out = out.multiply(k, a);
    a = a.multiply(k, a);
    e >>= 1;
  }
  return out;
}

// Characteristic polynomial coefficients c_0..c_n (monic) over ℚ by
// Faddeev-LeVerrier.
std::vector<Scalar> char_poly(Coeffs const& k, Matrix const& a) {
  auto n = a.rows();
  std::vector<Scalar> c(n + 1, k.zero());
  c[n] = k.one();
  Matrix mk(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mk(i, j) = k.zero();
  for (std::size_t step = 1; step <= n; ++step) {
    Matrix next = a.multiply(k, mk);
    for (std::size_t i = 0; i < n; ++i)
      next(i, i) = k.add(next(i, i), c[n - step + 1]);
    mk = next;
    Matrix am = a.multiply(k, mk);
    Scalar tr = k.zero();
    for (std::size_t i = 0; i < n; ++i) tr = k.add(tr, am(i, i));
    c[n - step] = k.neg(k.mul(tr, k.from_fraction(1, static_cast<std::int64_t>(step))));
  }
  return c;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  n = n < 0 ? -n : n;
  std::vector<std::int64_t> out;
  if (n == 0 || n > (std::int64_t{1} << 40)) return out;
  for (std::int64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

std::vector<Scalar> rational_roots(Coeffs const& k, std::vector<Scalar> c) {
  std::vector<Scalar> roots;
  try {
    std::int64_t l = 1;
    for (auto const& s : c) l = std::lcm(l, s.den);
    std::vector<std::int64_t> a;
    for (auto const& s : c) a.push_back(s.num * (l / s.den));
    while (!a.empty() && a.front() == 0) {
      roots.push_back(k.zero());
      a.erase(a.begin());
    }
    if (a.size() < 2) return roots;
    auto eval = [&](Scalar x) {
      Scalar v = k.zero();
      for (auto it = a.rbegin(); it != a.rend(); ++it)
        v = k.add(k.mul(v, x), k.from_int(*it));
      return v;
    };
    for (auto p : divisors(a.front()))
      for (auto q : divisors(a.back()))
        for (int sgn : {1, -1}) {
          auto x = k.from_fraction(sgn * p, q);
          if (k.is_zero(eval(x)) &&
              std::find(roots.begin(), roots.end(), x) == roots.end())
            roots.push_back(x);
        }
  } catch (Error const& e) {
    if (e.kind() != Errc::Overflow) throw;
  }
  return roots;
}

/// Scalars worth trying as "b - λ" shifts when hunting for idempotents or
/// residues of the degree-0 basis element b.
std::vector<Scalar> shift_candidates(GradedRing const& r, RingElement const& b) {
  auto const& k = r.coeffs();
  std::vector<Scalar> out;
  if (k.finite()) {
    auto m = std::min<std::int64_t>(k.modulus(), 256);
    for (std::int64_t v = 0; v < m; ++v) out.push_back(k.from_int(v));
    return out;
  }
  return rational_roots(k, char_poly(k, r.mult_matrix(b, 0, 0)));
}

int nilpotency_bound(GradedRing const& r) {
  int period = r.periodic() ? r.periodicity()->degree : 1;
  return period * (window_length(r) + 1);
}

Ideal ideal_from_slices(GradedRing const& r, std::map<int, Span> slices) {
  Ideal out;
  out.slices = std::move(slices);
  out.generators = span_elements(r, out);
  return out;
}

std::vector<RingElement> slice0_basis_elements(GradedRing const& r) {
  std::vector<RingElement> out;
  for (auto m : r.slice(0)) out.push_back(r.monomial(m, r.coeffs().one()));
  return out;
}

/// Splits `e` using the Fitting decomposition of multiplication by `c`
/// (extended by the identity on (1-e)R_0). Returns the two orthogonal
/// idempotents when both parts are nonzero.
std::optional<std::pair<RingElement, RingElement>> fitting_split(
    GradedRing const& r, RingElement const& e, RingElement const& c0) {
  auto const& k = r.coeffs();
  auto one = r.one();
  auto c = r.add(r.multiply(e, c0), r.sub(one, e));
  auto lm = r.mult_matrix(c, 0, 0);
  auto p = matrix_power(k, lm, window_length(r) + 1);
  auto v0 = kernel(k, p);
  if (v0.is_zero()) return std::nullopt;
  if (v0.contains(r.coords(e, 0))) return std::nullopt;
  auto v1 = image(k, p);
  std::vector<Vec> cols = v0.rows();
  cols.insert(cols.end(), v1.rows().begin(), v1.rows().end());
  auto n = r.slice(0).size();
  auto sol = solve(k, Matrix::from_columns(n, cols), r.coords(one, 0));
  if (!sol) return std::nullopt;
  Vec z0 = zero_vec(k, n);
  for (std::size_t j = 0; j < v0.rows().size(); ++j)
    axpy(k, z0, (*sol)[j], v0.rows()[j]);
  auto e0 = r.from_coords(z0, 0);
  auto e1 = r.sub(e, e0);
  if (e0.is_zero() || e1.is_zero()) return std::nullopt;
  if (!(r.multiply(e0, e0) == e0) || !(r.multiply(e1, e1) == e1) ||
      !r.multiply(e0, e1).is_zero())
    throw Error(Errc::NotSemiperfect, "Fitting split produced a non-idempotent");
  return std::make_pair(e0, e1);
}

std::vector<RingElement> split_idempotents(GradedRing const& r) {
  std::vector<RingElement> list{r.one()};
  auto basis0 = slice0_basis_elements(r);
  std::size_t guard = 0;
  bool changed = true;
  while (changed) {
    if (++guard > 4 * (r.slice(0).size() + 2))
      throw Error(Errc::NotSemiperfect, "idempotent refinement did not terminate");
    changed = false;
    for (std::size_t i = 0; i < list.size() && !changed; ++i) {
      for (auto const& b : basis0) {
        for (auto lambda : shift_candidates(r, b)) {
          auto c0 = r.sub(b, r.scale(lambda, r.one()));
          if (auto split = fitting_split(r, list[i], c0)) {
            list[i] = split->first;
            list.push_back(split->second);
            changed = true;
            break;
          }
        }
        if (changed) break;
      }
    }
  }
  return list;
}

std::vector<RingElement> sorted_by_coords(GradedRing const& r,
                                          std::vector<RingElement> v) {
  std::sort(v.begin(), v.end(), [&](auto const& a, auto const& b) {
    return r.coords(a, 0) < r.coords(b, 0);
  });
  return v;
}

Span max_ideal_degree0(GradedRing const& r, EnumerationLimits lim) {
  auto const& k = r.coeffs();
  auto n = r.slice(0).size();
  if (auto card = slice_cardinality(r, 0, lim)) {
    std::vector<Vec> nonunits;
    std::uint64_t count = 0;
    for_each_vector(k, n, [&](Vec const& v) {
      if (!is_unit(r, r.from_coords(v, 0))) {
        nonunits.push_back(v);
        ++count;
      }
    });
    auto span = Span::from_generators(k, n, nonunits);
    std::uint64_t size = 1;
    for (auto const& [p, e] : span.order())
      for (int i = 0; i < e; ++i) size *= static_cast<std::uint64_t>(p);
    if (size != count)
      throw Error(Errc::NotLocal, "non-units of degree 0 are not closed under addition");
    return span;
  }
  std::vector<RingElement> gens;
  auto ch = characteristic(r);
  if (ch > 0) {
    auto p = factorize(ch).begin()->first;
    if (p != ch) gens.push_back(r.scale(k.from_int(p), r.one()));
  }
  for (auto const& b : slice0_basis_elements(r)) {
    bool found = false;
    for (auto lambda : shift_candidates(r, b)) {
      auto c = r.sub(b, r.scale(lambda, r.one()));
      if (is_nilpotent(r, c)) {
        gens.push_back(c);
        found = true;
        break;
      }
    }
    if (!found)
      throw Error(Errc::Unsupported,
                  "residue field of degree 0 is not a prime field (basis element " +
                      r.to_string(b) + ")");
  }
  auto ideal = ideal_from_generators(r, gens);
  auto span = ideal.slices.at(0);
  for (auto const& row : span.rows())
    if (is_unit(r, r.from_coords(row, 0)))
      throw Error(Errc::NotLocal, "degree-0 radical contains a unit");
  return span;
}

std::optional<RingElement> local_unit_in_degree(GradedRing const& r, int d) {
  for (auto m : r.slice(d)) {
    auto x = r.monomial(m, r.coeffs().one());
    if (is_unit(r, x)) return x;
  }
  return std::nullopt;
}

}  // namespace

bool Ideal::is_zero() const {
  return std::all_of(slices.begin(), slices.end(),
                     [](auto const& kv) { return kv.second.is_zero(); });
}

int ideal_length(Ideal const& i) {
  int s = 0;
  for (auto const& [d, sp] : i.slices) s += sp.length();
  return s;
}

std::vector<RingElement> span_elements(GradedRing const& r, Ideal const& i) {
  std::vector<RingElement> out;
  for (auto const& [d, sp] : i.slices)
    for (auto const& row : sp.rows()) out.push_back(r.from_coords(row, d));
  return out;
}

Ideal ideal_from_generators(GradedRing const& r,
                            std::vector<RingElement> const& gens) {
  std::map<int, Span> slices;
  for (int d : r.degree_window()) {
    auto n = r.slice(d).size();
    std::vector<Vec> cols;
    for (auto const& g : gens) {
      if (g.is_zero()) continue;
      auto gd = r.degree_of(g);
      if (!gd) throw Error(Errc::DegreeMismatch, "ideal generator is not homogeneous");
      auto m = r.mult_matrix(g, *gd, d - *gd);
      for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
    }
    slices.emplace(d, Span::from_generators(r.coeffs(), n, cols));
  }
  Ideal out;
  out.slices = std::move(slices);
  out.generators = gens;
  return out;
}

Ideal principal_ideal(GradedRing const& r, RingElement const& x) {
  return ideal_from_generators(r, {x});
}

bool ideal_contains(GradedRing const& r, Ideal const& i, RingElement const& x) {
  if (x.is_zero()) return true;
  auto d = r.degree_of(x);
  if (!d) return false;
  auto [w, t] = r.fold_degree(*d);
  auto it = i.slices.find(w);
  if (it == i.slices.end()) return false;
  return it->second.contains(r.coords(r.shift_v(x, -t), w));
}

Ideal annihilator(GradedRing const& r, RingElement const& x) {
  std::map<int, Span> slices;
  auto xd = r.degree_of(x).value_or(0);
  for (int d : r.degree_window())
    slices.emplace(d, kernel(r.coeffs(), r.mult_matrix(x, xd, d)));
  return ideal_from_slices(r, std::move(slices));
}

Ideal annihilator(GradedRing const& r, Ideal const& i) {
  auto gens = span_elements(r, i);
  std::map<int, Span> slices;
  for (int d : r.degree_window()) {
    if (gens.empty()) {
      slices.emplace(d, full_slice(r, d));
      continue;
    }
    std::vector<Matrix> blocks;
    for (auto const& g : gens)
      blocks.push_back(r.mult_matrix(g, *r.degree_of(g), d));
    slices.emplace(d, kernel(r.coeffs(), Matrix::stack(blocks)));
  }
  return ideal_from_slices(r, std::move(slices));
}

std::vector<RingElement> homogeneous_elements(GradedRing const& r, int d,
                                              EnumerationLimits lim) {
  std::vector<RingElement> out;
  auto sl = r.slice(d);
  auto const& k = r.coeffs();
  if (slice_cardinality(r, d, lim)) {
    for_each_vector(k, sl.size(),
                    [&](Vec const& v) { out.push_back(r.from_coords(v, d)); });
    return out;
  }
  out.push_back(r.zero());
  for (auto m : sl) out.push_back(r.monomial(m, k.one()));
  for (std::size_t i = 0; i < sl.size(); ++i)
    for (std::size_t j = i + 1; j < sl.size(); ++j)
      out.push_back(r.add(r.monomial(sl[i], k.one()), r.monomial(sl[j], k.one())));
  return out;
}

std::optional<RingElement> inverse(GradedRing const& r, RingElement const& x) {
  if (x.is_zero()) return std::nullopt;
  auto d = r.degree_of(x);
  if (!d) return std::nullopt;
  auto m = r.mult_matrix(x, *d, -*d);
  if (m.cols() == 0) return std::nullopt;
  auto sol = solve(r.coeffs(), m, r.coords(r.one(), 0));
  if (!sol) return std::nullopt;
  return r.from_coords(*sol, -*d);
}

bool is_unit(GradedRing const& r, RingElement const& x) {
  return inverse(r, x).has_value();
}

bool is_nilpotent(GradedRing const& r, RingElement const& x) {
  if (x.is_zero()) return true;
  return r.power(x, nilpotency_bound(r)).is_zero();
}

std::int64_t characteristic(GradedRing const& r) {
  auto const& k = r.coeffs();
  if (k.rational()) return 0;
  std::int64_t g = k.modulus();
  for (auto const& [m, c] : r.one().terms) g = std::gcd(g, c.num);
  return k.modulus() / g;
}

std::vector<RingElement> idempotents(GradedRing const& r, EnumerationLimits lim) {
  std::vector<RingElement> out;
  if (slice_cardinality(r, 0, lim)) {
    for_each_vector(r.coeffs(), r.slice(0).size(), [&](Vec const& v) {
      auto e = r.from_coords(v, 0);
      if (r.multiply(e, e) == e) out.push_back(e);
    });
    return sorted_by_coords(r, out);
  }
  auto prims = primitive_idempotents(r, lim);
  if (prims.size() > 20)
    throw Error(Errc::SizeCapExceeded, "too many primitive idempotents to enumerate");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << prims.size()); ++mask) {
    RingElement e;
    for (std::size_t i = 0; i < prims.size(); ++i)
      if (mask >> i & 1) e = r.add(e, prims[i]);
    out.push_back(e);
  }
  return sorted_by_coords(r, out);
}

std::vector<RingElement> primitive_idempotents(GradedRing const& r,
                                               EnumerationLimits lim) {
  if (r.one().is_zero()) return {};
  if (slice_cardinality(r, 0, lim)) {
    auto all = idempotents(r, lim);
    std::vector<RingElement> prims;
    for (auto const& e : all) {
      if (e.is_zero()) continue;
      bool minimal = true;
      for (auto const& f : all) {
        if (f.is_zero() || f == e) continue;
        if (r.multiply(f, e) == f) {
          minimal = false;
          break;
        }
      }
      if (minimal) prims.push_back(e);
    }
    return sorted_by_coords(r, prims);
  }
  return sorted_by_coords(r, split_idempotents(r));
}

std::vector<ProductFactor> decompose_product_with_idempotents(
    GradedRing const& r, EnumerationLimits lim) {
  auto prims = primitive_idempotents(r, lim);
  if (prims.size() <= 1) {
    std::vector<RingElement> emb;
    for (std::size_t i = 0; i < r.rank(); ++i)
      emb.push_back(r.basis_element(static_cast<int>(i)));
    std::vector<ProductFactor> out;
    out.push_back({r, r.one(), emb});
    return out;
  }
  auto const& k = r.coeffs();

  // Orthogonality and completeness.
  RingElement total;
  for (std::size_t i = 0; i < prims.size(); ++i) {
    total = r.add(total, prims[i]);
    for (std::size_t j = i + 1; j < prims.size(); ++j)
      if (!r.multiply(prims[i], prims[j]).is_zero())
        throw Error(Errc::NotSemiperfect, "idempotents are not orthogonal");
  }
  if (!(total == r.one()))
    throw Error(Errc::NotSemiperfect, "idempotents do not sum to 1");

  std::vector<ProductFactor> out;
  int total_length = 0;
  for (auto const& e : prims) {
    auto order = characteristic(r) == 0
                     ? std::int64_t{0}
                     : [&] {
                         std::int64_t g = k.modulus();
                         for (auto const& [m, c] : e.terms) g = std::gcd(g, c.num);
                         return k.modulus() / g;
                       }();
    Coeffs kf(order);
    struct Slot {
      int degree;
      std::vector<Vec> rows;  // in R's slice coordinates
      std::size_t first;      // index of first factor basis element
    };
    std::vector<Slot> slots;
    std::vector<BasisElement> basis;
    std::vector<RingElement> embedded;
    std::set<std::string> used;
    int factor_length = 0;
    for (int d : r.degree_window()) {
      auto img = image(k, r.mult_matrix(e, 0, d));
      std::vector<Vec> rows;
      if (k.rational()) {
        rows = img.rows();
      } else {
        for (std::size_t j = 0; j < img.rows().size(); ++j)
          if (k.additive_order(img.rows()[j][img.pivots()[j]]) == order)
            rows.push_back(img.rows()[j]);
        if (static_cast<int>(rows.size()) * coefficient_length(kf) != img.length())
          throw Error(Errc::NotSemiperfect,
                      "factor slice is not free over its coefficient ring");
      }
      factor_length += img.length();
      Slot slot{d, rows, basis.size()};
      for (auto const& row : rows) {
        auto el = r.from_coords(row, d);
        std::string name;
        if (el.terms.size() == 1 && el.terms.begin()->second == k.one() &&
            el.terms.begin()->first.vpow == 0)
          name = r.basis()[static_cast<std::size_t>(el.terms.begin()->first.basis)].name;
        if (name.empty() || used.count(name))
          name = "f" + std::to_string(out.size()) + "_" + std::to_string(basis.size());
        used.insert(name);
        basis.push_back({name, d});
        embedded.push_back(el);
      }
      slots.push_back(std::move(slot));
    }
    total_length += factor_length;

    auto express = [&](RingElement const& x, int d) -> std::vector<Term> {
      auto [w, t] = r.fold_degree(d);
      auto it = std::find_if(slots.begin(), slots.end(),
                             [&](Slot const& s) { return s.degree == w; });
      if (it == slots.end() || it->rows.empty()) {
        if (!x.is_zero())
          throw Error(Errc::NotSemiperfect, "product escapes the factor");
        return {};
      }
      auto n = r.slice(w).size();
      auto sol = solve(k, Matrix::from_columns(n, it->rows),
                       r.coords(r.shift_v(x, -t), w));
      if (!sol) throw Error(Errc::NotSemiperfect, "element not in factor span");
      std::vector<Term> terms;
      for (std::size_t j = 0; j < sol->size(); ++j) {
        auto c = k.rational() ? (*sol)[j] : kf.from_int((*sol)[j].num);
        if (!kf.is_zero(c))
          terms.push_back({c, static_cast<int>(it->first + j), t});
      }
      return terms;
    };

    RingSpec spec;
    spec.characteristic = order;
    spec.basis = basis;
    spec.periodicity = r.periodicity();
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = 0; b < basis.size(); ++b) {
        auto prod = r.multiply(embedded[a], embedded[b]);
        auto terms = express(prod, basis[a].degree + basis[b].degree);
        if (!terms.empty())
          spec.products.push_back(
              {static_cast<int>(a), static_cast<int>(b), std::move(terms)});
      }
    spec.unit = express(e, 0);
    out.push_back({GradedRing::validate(spec), e, embedded});
  }
  if (total_length != window_length(r))
    throw Error(Errc::NotSemiperfect, "factor sizes do not add up");
  std::stable_sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
    auto ca = characteristic(a.ring), cb = characteristic(b.ring);
    if (ca != cb) return ca < cb;
    return window_length(a.ring) < window_length(b.ring);
  });
  return out;
}

std::vector<GradedRing> decompose_product(GradedRing const& r,
                                          EnumerationLimits lim) {
  std::vector<GradedRing> out;
  for (auto& f : decompose_product_with_idempotents(r, lim))
    out.push_back(std::move(f.ring));
  return out;
}

bool is_local(GradedRing const& r, EnumerationLimits lim) {
  if (r.one().is_zero()) return false;
  return primitive_idempotents(r, lim).size() == 1;
}

Ideal maximal_ideal(GradedRing const& r, EnumerationLimits lim) {
  if (!is_local(r, lim)) throw Error(Errc::NotLocal, "ring is not local");
  auto m0 = max_ideal_degree0(r, lim);
  std::map<int, Span> slices;
  for (int d : r.degree_window()) {
    if (d == 0) {
      slices.emplace(0, m0);
      continue;
    }
    if (auto u = local_unit_in_degree(r, d)) {
      std::vector<Vec> cols;
      for (auto const& row : m0.rows())
        cols.push_back(r.coords(r.multiply(*u, r.from_coords(row, 0)), d));
      slices.emplace(d, Span::from_generators(r.coeffs(), r.slice(d).size(), cols));
    } else {
      slices.emplace(d, full_slice(r, d));
    }
  }
  return ideal_from_slices(r, std::move(slices));
}

std::int64_t residue_characteristic(GradedRing const& r, EnumerationLimits lim) {
  if (!is_local(r, lim)) throw Error(Errc::NotLocal, "ring is not local");
  auto ch = characteristic(r);
  if (ch == 0) return 0;
  return factorize(ch).begin()->first;
}

int residue_degree(GradedRing const& r, EnumerationLimits lim) {
  auto m0 = max_ideal_degree0(r, lim);
  return slice_length(r, 0) - m0.length();
}

GradedRing residue_field(GradedRing const& r, EnumerationLimits lim) {
  auto mi = maximal_ideal(r, lim);
  auto const& k = r.coeffs();
  if (slice_length(r, 0) - mi.slices.at(0).length() != 1)
    throw Error(Errc::Unsupported, "residue field is not a prime field");
  auto p = residue_characteristic(r, lim);
  Coeffs kp(p);
  std::vector<int> unit_degrees;
  std::vector<RingElement> reps;
  for (int d : r.degree_window()) {
    if (d == 0) {
      unit_degrees.push_back(0);
      reps.push_back(r.one());
    } else if (auto u = local_unit_in_degree(r, d)) {
      unit_degrees.push_back(d);
      reps.push_back(*u);
    }
  }
  RingSpec spec;
  spec.characteristic = p;
  spec.periodicity = r.periodicity();
  for (int d : unit_degrees)
    spec.basis.push_back({d == 0 ? "one" : "u" + std::to_string(d), d});
  auto index_of = [&](int d) {
    return static_cast<int>(std::find(unit_degrees.begin(), unit_degrees.end(), d) -
                            unit_degrees.begin());
  };
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = 0; b < reps.size(); ++b) {
      auto prod = r.multiply(reps[a], reps[b]);
      auto [w, t] = r.fold_degree(unit_degrees[a] + unit_degrees[b]);
      auto x = r.shift_v(prod, -t);
      auto target = reps[static_cast<std::size_t>(index_of(w))];
      auto const& mw = mi.slices.at(w);
      std::optional<Scalar> coeff;
      if (k.finite()) {
        for (std::int64_t c = 0; c < p && !coeff; ++c)
          if (mw.contains(r.coords(r.sub(x, r.scale(k.from_int(c), target)), w)))
            coeff = kp.from_int(c);
      } else {
        std::vector<Vec> cols{r.coords(target, w)};
        cols.insert(cols.end(), mw.rows().begin(), mw.rows().end());
        if (auto sol = solve(k, Matrix::from_columns(r.slice(w).size(), cols),
                             r.coords(x, w)))
          coeff = (*sol)[0];
      }
      if (!coeff) throw Error(Errc::Unsupported, "residue product not determined");
      if (!kp.is_zero(*coeff))
        spec.products.push_back({static_cast<int>(a), static_cast<int>(b),
                                 {{*coeff, index_of(w), t}}});
    }
  return GradedRing::validate(spec);
}

std::optional<RingElement> unit_in_degree(GradedRing const& r, int d,
                                          EnumerationLimits lim) {
  auto factors = decompose_product_with_idempotents(r, lim);
  if (factors.size() == 1) return local_unit_in_degree(r, d);
  RingElement total;
  for (auto const& f : factors) {
    auto u = local_unit_in_degree(f.ring, d);
    if (!u) return std::nullopt;
    for (auto const& [m, c] : u->terms) {
      auto lifted = r.coeffs().rational() ? c : r.coeffs().from_int(c.num);
      auto const& el = f.embedding[static_cast<std::size_t>(m.basis)];
      total = r.add(total, r.shift_v(r.scale(lifted, el), m.vpow));
    }
  }
  return total;
}

DoubleAnnihilatorReport double_annihilator_holds(GradedRing const& r,
                                                 EnumerationLimits lim) {
  for (int d : r.degree_window())
    for (auto const& x : homogeneous_elements(r, d, lim)) {
      auto aa = annihilator(r, annihilator(r, x));
      if (!(aa == principal_ideal(r, x))) return {false, x};
    }
  return {true, std::nullopt};
}

Ideal socle(GradedRing const& r, EnumerationLimits lim) {
  return annihilator(r, maximal_ideal(r, lim));
}

int socle_dimension(GradedRing const& r, EnumerationLimits lim) {
  auto soc = socle(r, lim);
  int units = 0;
  for (int d : r.degree_window())
    if (d == 0 || local_unit_in_degree(r, d)) ++units;
  auto f = residue_degree(r, lim);
  return ideal_length(soc) / (f * units);
}

bool is_quasi_frobenius(GradedRing const& r, EnumerationLimits lim) {
  for (auto const& f : decompose_product(r, lim))
    if (socle_dimension(f, lim) != 1) return false;
  return true;
}

}  // namespace deltaring
