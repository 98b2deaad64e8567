#include <cstdlib>
#include <limits>
#include <sstream>

#include "deltaring/dgtriangle.hpp"
#include "deltaring/error.hpp"

namespace deltaring {

namespace {

int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

Scalar signed_scalar(Coeffs const& k, int sign, Scalar c) {
  return sign > 0 ? c : k.neg(c);
}

/// d on the free algebra: da = uu, du = 0, scalars closed, Leibniz with
/// sign (-1)^{n |prefix|}.
rewrite::Poly free_differential(Coeffs const& k, rewrite::Poly const& p, int i, int n,
                                int delta) {
  rewrite::Poly out;
  for (auto const& [key, c] : p) {
    auto const& [t, w] = key;
    long long prefix_deg = static_cast<long long>(t) * delta;
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      if (w[pos] == 'a') {
        Scalar s = signed_scalar(k, parity_sign(n * prefix_deg), c);
        rewrite::add_term(k, out, t, w.substr(0, pos) + "uu" + w.substr(pos + 1), s);
        prefix_deg += 2 * i + n;
      } else {
        prefix_deg += i;
      }
    }
  }
  return out;
}

}  // namespace

DGAlgebra DGAlgebra::build(std::int64_t p, int i, int n, std::optional<int> unit_degree,
                           int weight_bound) {
  if (!is_prime(p)) throw Error(Errc::InvalidArgument, "characteristic must be prime");
  if (weight_bound < 2 * Homology::kPadding + 2)
    throw Error(Errc::InvalidArgument, "weight bound too small");
  Coeffs k(p);
  int vdeg = 3 * i + n;
  if (vdeg % 2 != 0 && p != 2) {
    std::ostringstream os;
    os << "v has odd degree " << vdeg << ", which forces characteristic 2 (got " << p << ")";
    throw Error(Errc::ParityObstruction, os.str());
  }

  int delta = 0, q = 0;
  if (unit_degree && *unit_degree != 0) {
    delta = std::abs(*unit_degree);
    if (vdeg % delta != 0)
      throw Error(Errc::InvalidArgument, "unit degree must divide 3i + n");
    if (delta % 2 != 0 && p != 2)
      throw Error(Errc::InvalidArgument, "an odd-degree unit needs characteristic 2");
    q = vdeg / delta;
  } else if (vdeg != 0) {
    delta = std::abs(vdeg);
    q = vdeg / delta;
  }

  rewrite::Poly ua;
  rewrite::add_term(k, ua, 0, "au", k.from_int(-1));
  rewrite::add_term(k, ua, q, "", k.from_int(-1));
  rewrite::RewriteSystem rw(k, {{"aa", {}}, {"ua", ua}});

  auto conf = rw.check_confluence(4);
  if (!conf.confluent)
    throw Error(Errc::Unsupported, "rewriting system is not confluent at " +
                                       conf.failing_word.value_or("?"));

  // d must kill both relations once they are rewritten to normal form.
  rewrite::Poly rel1 = rewrite::word("aa");
  rewrite::Poly rel2 = rewrite::word("au");
  rewrite::add_term(k, rel2, 0, "ua", k.one());
  rewrite::add_term(k, rel2, q, "", k.one());
  for (auto const* rel : {&rel1, &rel2}) {
    auto d = rw.reduce(free_differential(k, *rel, i, n, delta));
    if (!d.empty()) {
      std::ostringstream os;
      os << "d(" << rewrite::to_string(*rel) << ") = " << rewrite::to_string(d)
         << " for p = " << p << ", i = " << i << ", n = " << n;
      if (i % 2 == 0 && n % 2 == 0) os << " (i and n both even, characteristic not 2)";
      throw Error(Errc::ParityObstruction, os.str());
    }
  }
  return DGAlgebra(k, i, n, delta, q, weight_bound, std::move(rw));
}

int DGAlgebra::degree(DgaMonomial const& x) const {
  return x.t * delta_ + x.eps * a_degree() + x.m * i_;
}

int DGAlgebra::degree(DgaElement const& x) const {
  if (x.empty()) throw Error(Errc::InvalidArgument, "zero element has no degree");
  int d = degree(x.begin()->first);
  for (auto const& [mono, c] : x)
    if (degree(mono) != d) throw Error(Errc::DegreeMismatch, "element is not homogeneous");
  return d;
}

DgaElement DGAlgebra::monomial(int t, int eps, int m, std::int64_t c) const {
  DgaElement out;
  add_to(out, {periodic() ? t : 0, eps, m}, k_.from_int(c));
  return out;
}

void DGAlgebra::add_to(DgaElement& x, DgaMonomial const& mono, Scalar c) const {
  if (k_.is_zero(c)) return;
  auto [it, inserted] = x.emplace(mono, c);
  if (inserted) return;
  it->second = k_.add(it->second, c);
  if (k_.is_zero(it->second)) x.erase(it);
}

DgaElement DGAlgebra::add(DgaElement const& x, DgaElement const& y) const {
  DgaElement out = x;
  for (auto const& [mono, c] : y) add_to(out, mono, c);
  return out;
}

DgaElement DGAlgebra::scale(Scalar c, DgaElement const& x) const {
  DgaElement out;
  for (auto const& [mono, d] : x) add_to(out, mono, k_.mul(c, d));
  return out;
}

// u^m a = (-1)^m a u^m - [m odd] v u^{m-1}
DgaElement DGAlgebra::multiply_impl(DgaElement const& x, DgaElement const& y,
                                    int bound) const {
  DgaElement out;
  auto put = [&](DgaMonomial mono, Scalar c) {
    if (mono.m > bound) {
      std::ostringstream os;
      os << "u-exponent " << mono.m << " exceeds the weight bound " << bound;
      throw Error(Errc::WeightOverflow, os.str());
    }
    add_to(out, mono, c);
  };
  for (auto const& [mx, cx] : x) {
    for (auto const& [my, cy] : y) {
      Scalar c = k_.mul(cx, cy);
      int t = mx.t + my.t;
      if (my.eps == 0) {
        put({t, mx.eps, mx.m + my.m}, c);
        continue;
      }
      bool odd = mx.m % 2 != 0;
      if (mx.eps == 0) put({t, 1, mx.m + my.m}, odd ? k_.neg(c) : c);
      if (odd) put({t + q_, mx.eps, mx.m + my.m - 1}, k_.neg(c));
    }
  }
  return out;
}

DgaElement DGAlgebra::multiply(DgaElement const& x, DgaElement const& y) const {
  return multiply_impl(x, y, weight_bound_);
}

DgaElement DGAlgebra::multiply_unbounded(DgaElement const& x, DgaElement const& y) const {
  return multiply_impl(x, y, std::numeric_limits<int>::max());
}

rewrite::Poly DGAlgebra::to_poly(DgaElement const& x) const {
  rewrite::Poly out;
  for (auto const& [mono, c] : x)
    rewrite::add_term(k_, out, mono.t,
                      std::string(static_cast<std::size_t>(mono.eps), 'a') +
                          std::string(static_cast<std::size_t>(mono.m), 'u'),
                      c);
  return out;
}

DgaElement DGAlgebra::from_poly(rewrite::Poly const& p) const {
  DgaElement out;
  for (auto const& [key, c] : p) {
    auto const& w = key.second;
    int eps = (!w.empty() && w[0] == 'a') ? 1 : 0;
    if (w.find('a', static_cast<std::size_t>(eps)) != std::string::npos)
      throw Error(Errc::InvalidArgument, "word " + w + " is not in normal form");
    add_to(out, {key.first, eps, static_cast<int>(w.size()) - eps}, c);
  }
  return out;
}

DgaElement DGAlgebra::multiply_by_rewriting(DgaElement const& x, DgaElement const& y) const {
  return from_poly(rw_.reduce(rewrite::multiply(k_, to_poly(x), to_poly(y))));
}

DgaElement DGAlgebra::differential(DgaElement const& x) const {
  DgaElement out;
  for (auto const& [mono, c] : x) {
    if (mono.eps == 0) continue;
    long long wdeg = static_cast<long long>(mono.t) * delta_;
    add_to(out, {mono.t, 0, mono.m + 2}, signed_scalar(k_, parity_sign(n_ * wdeg), c));
  }
  return out;
}

DgaElement DGAlgebra::leibniz_defect(DgaElement const& x, DgaElement const& y) const {
  if (x.empty() || y.empty()) return {};
  int sign = parity_sign(static_cast<long long>(n_) * degree(x));
  auto lhs = differential(multiply_unbounded(x, y));
  auto r1 = multiply_unbounded(differential(x), y);
  auto r2 = scale(signed_scalar(k_, sign, k_.one()), multiply_unbounded(x, differential(y)));
  return add(lhs, scale(k_.from_int(-1), add(r1, r2)));
}

std::string DGAlgebra::to_string(DgaElement const& x) const {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto const& [mono, c] : x) {
    if (!first) os << " + ";
    first = false;
    os << c;
    if (mono.t != 0) os << "*w^" << mono.t;
    if (mono.eps) os << "*a";
    if (mono.m == 1) os << "*u";
    if (mono.m > 1) os << "*u^" << mono.m;
  }
  return os.str();
}

}  // namespace deltaring
