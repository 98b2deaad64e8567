#include "deltaring/graded_ring.hpp"

#include <algorithm>
#include <regex>
#include <set>
#include <sstream>

#include "deltaring/error.hpp"

namespace deltaring {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void accumulate(Coeffs const& k, RingElement& acc, Monomial m, Scalar c) {
  if (k.is_zero(c)) return;
  auto it = acc.terms.find(m);
  if (it == acc.terms.end()) {
    acc.terms.emplace(m, c);
    return;
  }
  it->second = k.add(it->second, c);
  if (k.is_zero(it->second)) acc.terms.erase(it);
}

}  // namespace

bool operator==(GradedRing const& a, GradedRing const& b) {
  return a.k_ == b.k_ && a.basis_ == b.basis_ && a.period_ == b.period_ &&
         a.table_ == b.table_ && a.one_ == b.one_;
}

GradedRing GradedRing::validate(RingSpec const& spec) {
  GradedRing r;
  r.k_ = Coeffs(spec.characteristic);
  auto const& k = r.k_;
  if (spec.basis.empty())
    throw Error(Errc::ParseError, "ring needs at least one basis element");
  static const std::regex name_re("[A-Za-z][A-Za-z0-9_]*");
  std::set<std::string> names;
  for (auto const& b : spec.basis) {
    if (!std::regex_match(b.name, name_re))
      throw Error(Errc::ParseError, "invalid basis name '" + b.name + "'");
    if (!names.insert(b.name).second)
      throw Error(Errc::ParseError, "duplicate basis name '" + b.name + "'");
  }
  r.basis_ = spec.basis;
  if (spec.periodicity) {
    if (spec.periodicity->degree <= 0)
      throw Error(Errc::DegreeMismatch, "periodicity degree must be > 0");
    if (!std::regex_match(spec.periodicity->unit, name_re) ||
        names.count(spec.periodicity->unit))
      throw Error(Errc::ParseError,
                  "invalid periodicity unit name '" + spec.periodicity->unit +
                      "'");
    r.period_ = spec.periodicity;
  }
  auto const n = static_cast<int>(spec.basis.size());
  r.table_.assign(static_cast<std::size_t>(n * n), RingElement{});

  auto check_terms = [&](std::vector<Term> const& terms, int expected,
                         std::string const& where) {
    RingElement out;
    for (auto const& t : terms) {
      if (t.basis < 0 || t.basis >= n)
        throw Error(Errc::ParseError, where + ": basis index out of range");
      if (!r.period_ && t.vpow != 0)
        throw Error(Errc::DegreeMismatch,
                    where + ": v-power given but ring is not periodic");
      Monomial m{t.basis, t.vpow};
      if (r.degree(m) != expected)
        throw Error(Errc::DegreeMismatch,
                    where + ": term " + spec.basis[t.basis].name +
                        " has degree " + std::to_string(r.degree(m)) +
                        ", expected " + std::to_string(expected));
      accumulate(k, out, m, k.from_fraction(t.coeff.num, t.coeff.den));
    }
    return out;
  };

  std::set<std::pair<int, int>> seen;
  for (auto const& p : spec.products) {
    if (p.left < 0 || p.left >= n || p.right < 0 || p.right >= n)
      throw Error(Errc::ParseError, "product index out of range");
    if (!seen.insert({p.left, p.right}).second)
      throw Error(Errc::ParseError, "product (" + spec.basis[p.left].name +
                                        ", " + spec.basis[p.right].name +
                                        ") listed twice");
    auto where = "product (" + std::to_string(p.left) + ", " +
                 std::to_string(p.right) + ")";
    r.table_[static_cast<std::size_t>(p.left * n + p.right)] = check_terms(
        p.terms, spec.basis[p.left].degree + spec.basis[p.right].degree,
        where);
  }

  // Unit element.
  auto acts_as_identity = [&](RingElement const& u) {
    for (int i = 0; i < n; ++i) {
      auto b = r.basis_element(i);
      if (!(r.multiply(u, b) == b) || !(r.multiply(b, u) == b)) return false;
    }
    return true;
  };
  if (!spec.unit.empty()) {
    r.one_ = check_terms(spec.unit, 0, "unit");
    if (!acts_as_identity(r.one_))
      throw Error(Errc::NoUnit, "declared unit is not a two-sided identity");
  } else {
    bool found = false;
    for (int i = 0; i < n && !found; ++i) {
      if (spec.basis[i].degree != 0) continue;
      auto u = r.basis_element(i);
      if (acts_as_identity(u)) {
        r.one_ = u;
        found = true;
      }
    }
    if (!found) throw Error(Errc::NoUnit, "no basis element acts as 1");
  }

  // Graded commutativity: b_i b_j = (-1)^{|b_i||b_j|} b_j b_i.
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      auto const& ij = r.product(i, j);
      auto ji = r.product(j, i);
      if ((spec.basis[i].degree * spec.basis[j].degree) % 2 != 0)
        ji = r.neg(ji);
      if (!(ij == ji))
        throw Error(Errc::CommutativityViolation,
                    "basis pair (" + std::to_string(i) + ", " +
                        std::to_string(j) + ") [" + spec.basis[i].name +
                        ", " + spec.basis[j].name + "]");
    }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        auto bi = r.basis_element(i), bj = r.basis_element(j),
             bl = r.basis_element(l);
        if (!(r.multiply(r.multiply(bi, bj), bl) ==
              r.multiply(bi, r.multiply(bj, bl))))
          throw Error(Errc::AssociativityViolation,
                      "basis triple (" + std::to_string(i) + ", " +
                          std::to_string(j) + ", " + std::to_string(l) +
                          ") [" + spec.basis[i].name + ", " +
                          spec.basis[j].name + ", " + spec.basis[l].name +
                          "]");
      }
  return r;
}

bool GradedRing::ungraded() const {
  return !period_ && std::all_of(basis_.begin(), basis_.end(),
                                 [](auto const& b) { return b.degree == 0; });
}

int GradedRing::degree(Monomial m) const {
  return basis_[static_cast<std::size_t>(m.basis)].degree +
         (period_ ? m.vpow * period_->degree : 0);
}

std::vector<Monomial> GradedRing::slice(int d) const {
  std::vector<Monomial> out;
  for (int i = 0; i < static_cast<int>(basis_.size()); ++i) {
    auto diff = d - basis_[static_cast<std::size_t>(i)].degree;
    if (!period_) {
      if (diff == 0) out.push_back({i, 0});
    } else if (diff % period_->degree == 0) {
      out.push_back({i, diff / period_->degree});
    }
  }
  return out;
}

std::vector<int> GradedRing::degree_window() const {
  std::vector<int> out;
  if (period_) {
    for (int d = 0; d < period_->degree; ++d) out.push_back(d);
    return out;
  }
  std::set<int> s;
  for (auto const& b : basis_) s.insert(b.degree);
  return {s.begin(), s.end()};
}

std::pair<int, int> GradedRing::fold_degree(int d) const {
  if (!period_) return {d, 0};
  auto t = floor_div(d, period_->degree);
  return {d - t * period_->degree, t};
}

RingElement GradedRing::monomial(Monomial m, Scalar c) const {
  RingElement out;
  accumulate(k_, out, m, c);
  return out;
}

RingElement GradedRing::add(RingElement const& a, RingElement const& b) const {
  RingElement out = a;
  for (auto const& [m, c] : b.terms) accumulate(k_, out, m, c);
  return out;
}

RingElement GradedRing::sub(RingElement const& a, RingElement const& b) const {
  return add(a, neg(b));
}

RingElement GradedRing::neg(RingElement const& a) const {
  RingElement out;
  for (auto const& [m, c] : a.terms) out.terms.emplace(m, k_.neg(c));
  return out;
}

RingElement GradedRing::scale(Scalar c, RingElement const& a) const {
  RingElement out;
  for (auto const& [m, x] : a.terms) accumulate(k_, out, m, k_.mul(c, x));
  return out;
}

RingElement GradedRing::multiply(RingElement const& a,
                                 RingElement const& b) const {
  RingElement out;
  for (auto const& [ma, ca] : a.terms)
    for (auto const& [mb, cb] : b.terms) {
      auto c = k_.mul(ca, cb);
      if (k_.is_zero(c)) continue;
      for (auto const& [mt, ct] : product(ma.basis, mb.basis).terms)
        accumulate(k_, out, {mt.basis, mt.vpow + ma.vpow + mb.vpow},
                   k_.mul(c, ct));
    }
  return out;
}

RingElement GradedRing::power(RingElement const& a, int e) const {
  RingElement r = one_, base = a;
  while (e > 0) {
    if (e & 1) r = multiply(r, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return r;
}

RingElement GradedRing::shift_v(RingElement const& a, int t) const {
  if (t == 0) return a;
  if (!period_) throw Error(Errc::InvalidArgument, "ring is not periodic");
  RingElement out;
  for (auto const& [m, c] : a.terms)
    out.terms.emplace(Monomial{m.basis, m.vpow + t}, c);
  return out;
}

std::optional<int> GradedRing::degree_of(RingElement const& x) const {
  if (x.is_zero()) return std::nullopt;
  auto d = degree(x.terms.begin()->first);
  for (auto const& [m, c] : x.terms)
    if (degree(m) != d) return std::nullopt;
  return d;
}

bool GradedRing::is_homogeneous(RingElement const& x) const {
  return x.is_zero() || degree_of(x).has_value();
}

Vec GradedRing::coords(RingElement const& x, int d) const {
  auto sl = slice(d);
  Vec out = zero_vec(k_, sl.size());
  for (auto const& [m, c] : x.terms) {
    auto it = std::find(sl.begin(), sl.end(), m);
    if (it == sl.end())
      throw Error(Errc::DegreeMismatch,
                  "element has a term outside degree " + std::to_string(d));
    out[static_cast<std::size_t>(it - sl.begin())] = c;
  }
  return out;
}

RingElement GradedRing::from_coords(std::span<Scalar const> v, int d) const {
  auto sl = slice(d);
  RingElement out;
  for (std::size_t i = 0; i < sl.size(); ++i) accumulate(k_, out, sl[i], v[i]);
  return out;
}

Matrix GradedRing::mult_matrix(RingElement const& x, int d) const {
  auto xd = degree_of(x);
  if (!xd && !x.is_zero())
    throw Error(Errc::DegreeMismatch, "multiplier is not homogeneous");
  return mult_matrix(x, xd.value_or(0), d);
}

Matrix GradedRing::mult_matrix(RingElement const& x, int xdeg, int d) const {
  auto src = slice(d);
  auto dst_deg = d + xdeg;
  auto dst = slice(dst_deg);
  Matrix m(dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    auto col = coords(multiply(x, monomial(src[c], k_.one())), dst_deg);
    m.set_column(c, col);
  }
  return m;
}

std::string GradedRing::to_string(RingElement const& x) const {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto const& [m, c] : x.terms) {
    if (!first) os << " + ";
    first = false;
    if (!(c == k_.one())) os << c << '*';
    os << basis_[static_cast<std::size_t>(m.basis)].name;
    if (m.vpow != 0) os << '*' << period_->unit << '^' << m.vpow;
  }
  return os.str();
}

RingSpec GradedRing::spec() const {
  RingSpec s;
  s.characteristic = k_.modulus();
  s.basis = basis_;
  s.periodicity = period_;
  auto n = static_cast<int>(basis_.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto const& p = product(i, j);
      if (p.is_zero()) continue;
      RingSpec::Product prod{i, j, {}};
      for (auto const& [m, c] : p.terms)
        prod.terms.push_back({c, m.basis, m.vpow});
      s.products.push_back(std::move(prod));
    }
  for (auto const& [m, c] : one_.terms) s.unit.push_back({c, m.basis, m.vpow});
  return s;
}

std::optional<int> GradedRing::find_basis(std::string const& name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

}  // namespace deltaring
