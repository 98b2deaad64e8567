#include "deltaring/standard_rings.hpp"

#include <algorithm>

#include "deltaring/error.hpp"

namespace deltaring::rings {

namespace {

std::string power_name(std::string const& var, int e) {
  if (e == 0) return "one";
  if (e == 1) return var;
  return var + std::to_string(e);
}

Scalar lift(std::int64_t v) { return {v, 1}; }

}  // namespace

GradedRing cyclic(std::int64_t m) {
  RingSpec s;
  s.characteristic = m;
  s.basis = {{"one", 0}};
  s.products = {{0, 0, {{lift(1), 0, 0}}}};
  return GradedRing::validate(s);
}

GradedRing truncated_polynomial(std::int64_t m, int n, int xdeg) {
  if (n < 1) throw Error(Errc::InvalidArgument, "truncation order must be >= 1");
  RingSpec s;
  s.characteristic = m;
  for (int e = 0; e < n; ++e) s.basis.push_back({power_name("x", e), e * xdeg});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i + j < n) s.products.push_back({i, j, {{lift(1), i + j, 0}}});
  return GradedRing::validate(s);
}

GradedRing monic_quotient(std::int64_t m, std::vector<std::int64_t> const& lower,
                          std::string const& var) {
  auto const n = static_cast<int>(lower.size());
  if (n < 1) throw Error(Errc::InvalidArgument, "empty polynomial");
  Coeffs k(m);
  // reduce[e] = coordinates of t^e in the basis 1..t^{n-1}, e < 2n-1.
  std::vector<Vec> reduce;
  for (int e = 0; e < 2 * n - 1; ++e) {
    Vec v = zero_vec(k, static_cast<std::size_t>(n));
    if (e < n) {
      v[static_cast<std::size_t>(e)] = k.one();
    } else {
      // t^e = t * t^{e-1}; t * t^{n-1} = -sum c_i t^i
      auto const& prev = reduce[static_cast<std::size_t>(e - 1)];
      auto top = prev[static_cast<std::size_t>(n - 1)];
      for (int i = n - 1; i >= 1; --i)
        v[static_cast<std::size_t>(i)] = prev[static_cast<std::size_t>(i - 1)];
      for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] =
            k.sub(v[static_cast<std::size_t>(i)],
                  k.mul(top, k.from_int(lower[static_cast<std::size_t>(i)])));
    }
    reduce.push_back(std::move(v));
  }
  RingSpec s;
  s.characteristic = m;
  for (int e = 0; e < n; ++e) s.basis.push_back({power_name(var, e), 0});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RingSpec::Product p{i, j, {}};
      auto const& v = reduce[static_cast<std::size_t>(i + j)];
      for (int l = 0; l < n; ++l)
        if (!k.is_zero(v[static_cast<std::size_t>(l)]))
          p.terms.push_back({v[static_cast<std::size_t>(l)], l, 0});
      if (!p.terms.empty()) s.products.push_back(std::move(p));
    }
  return GradedRing::validate(s);
}

GradedRing monomial_algebra(std::int64_t m,
                            std::vector<std::string> const& vars,
                            std::vector<int> const& var_degrees,
                            std::vector<std::vector<int>> const& exponents) {
  RingSpec s;
  s.characteristic = m;
  for (auto const& e : exponents) {
    std::string name;
    int deg = 0;
    for (std::size_t v = 0; v < vars.size(); ++v) {
      deg += e[v] * var_degrees[v];
      if (e[v] == 0) continue;
      name += vars[v];
      if (e[v] > 1) name += std::to_string(e[v]);
    }
    s.basis.push_back({name.empty() ? "one" : name, deg});
  }
  auto const n = static_cast<int>(exponents.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> sum(vars.size());
      for (std::size_t v = 0; v < vars.size(); ++v)
        sum[v] = exponents[static_cast<std::size_t>(i)][v] +
                 exponents[static_cast<std::size_t>(j)][v];
      auto it = std::find(exponents.begin(), exponents.end(), sum);
      if (it != exponents.end())
        s.products.push_back(
            {i, j, {{lift(1), static_cast<int>(it - exponents.begin()), 0}}});
    }
  return GradedRing::validate(s);
}

GradedRing laurent_field(std::int64_t p, int ydeg, std::string const& y) {
  RingSpec s;
  s.characteristic = p;
  s.basis = {{"one", 0}};
  s.periodicity = Periodicity{y, ydeg};
  s.products = {{0, 0, {{lift(1), 0, 0}}}};
  return GradedRing::validate(s);
}

GradedRing laurent_exterior(std::int64_t p, int xdeg, int ydeg) {
  RingSpec s;
  s.characteristic = p;
  s.basis = {{"one", 0}, {"x", xdeg}};
  s.periodicity = Periodicity{"y", ydeg};
  s.products = {{0, 0, {{lift(1), 0, 0}}},
                {0, 1, {{lift(1), 1, 0}}},
                {1, 0, {{lift(1), 1, 0}}}};
  return GradedRing::validate(s);
}

GradedRing product(GradedRing const& a, GradedRing const& b) {
  if (!(a.coeffs() == b.coeffs()))
    throw Error(Errc::InvalidArgument, "product factors need equal coefficients");
  if (a.periodicity() != b.periodicity())
    throw Error(Errc::InvalidArgument, "product factors need equal periodicity");
  auto sa = a.spec(), sb = b.spec();
  RingSpec s;
  s.characteristic = sa.characteristic;
  s.periodicity = sa.periodicity;
  auto const na = static_cast<int>(sa.basis.size());
  for (auto const& e : sa.basis) s.basis.push_back({"a_" + e.name, e.degree});
  for (auto const& e : sb.basis) s.basis.push_back({"b_" + e.name, e.degree});
  for (auto const& p : sa.products) s.products.push_back(p);
  for (auto p : sb.products) {
    p.left += na;
    p.right += na;
    for (auto& t : p.terms) t.basis += na;
    s.products.push_back(std::move(p));
  }
  s.unit = sa.unit;
  for (auto t : sb.unit) {
    t.basis += na;
    s.unit.push_back(t);
  }
  return GradedRing::validate(s);
}

}  // namespace deltaring::rings
