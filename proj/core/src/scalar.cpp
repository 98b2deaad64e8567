#include "deltaring/scalar.hpp"

#include <numeric>
#include <sstream>

#include "deltaring/error.hpp"

namespace deltaring {

std::string_view to_string(Errc e) noexcept {
  switch (e) {
    case Errc::ParseError: return "ParseError";
    case Errc::AssociativityViolation: return "AssociativityViolation";
    case Errc::CommutativityViolation: return "CommutativityViolation";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::NoUnit: return "NoUnit";
    case Errc::UnsupportedCoefficients: return "UnsupportedCoefficients";
    case Errc::NotSemiperfect: return "NotSemiperfect";
    case Errc::NotLocal: return "NotLocal";
    case Errc::Unsupported: return "Unsupported";
    case Errc::IllFormedMap: return "IllFormedMap";
    case Errc::SizeCapExceeded: return "SizeCapExceeded";
    case Errc::NotQuasiFrobenius: return "NotQuasiFrobenius";
    case Errc::ParityObstruction: return "ParityObstruction";
    case Errc::WeightOverflow: return "WeightOverflow";
    case Errc::WindowTooWideForWeightBound:
      return "WindowTooWideForWeightBound";
    case Errc::NotChainMap: return "NotChainMap";
    case Errc::NotProjectiveInput: return "NotProjectiveInput";
    case Errc::LiftFailure: return "LiftFailure";
    case Errc::WindowEmpty: return "WindowEmpty";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::Overflow: return "Overflow";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::ostream& operator<<(std::ostream& os, Scalar const& s) {
  os << s.num;
  if (s.den != 1) os << '/' << s.den;
  return os;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  auto r = a % m;
  return r < 0 ? r + m : r;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Order factorize(std::int64_t n) {
  Order out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

Order& operator*=(Order& a, Order const& b) {
  for (auto const& [p, e] : b) a[p] += e;
  return a;
}

Order operator*(Order a, Order const& b) { return a *= b; }

int big_omega(Order const& o) {
  int s = 0;
  for (auto const& [p, e] : o) s += e;
  return s;
}

std::string to_string(Order const& o) {
  if (o.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto const& [p, e] : o) {
    if (!first) os << '*';
    first = false;
    os << p;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

namespace {

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw Error(Errc::Overflow, "rational coefficient exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

Scalar make_rational(__int128 num, __int128 den) {
  if (den == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 a = num < 0 ? -num : num, b = den;
  while (b != 0) {
    auto t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return {checked(num), checked(den)};
}

// Extended gcd on nonnegative integers: s*a + t*b = g.
void xgcd(std::int64_t a, std::int64_t b, std::int64_t& g, std::int64_t& s,
          std::int64_t& t) {
  std::int64_t old_r = a, r = b, old_s = 1, cs = 0, old_t = 0, ct = 1;
  while (r != 0) {
    auto q = old_r / r;
    auto tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * cs;
    old_s = cs;
    cs = tmp;
    tmp = old_t - q * ct;
    old_t = ct;
    ct = tmp;
  }
  g = old_r;
  s = old_s;
  t = old_t;
}

}  // namespace

Coeffs::Coeffs(std::int64_t modulus) : m_(modulus) {
  if (modulus < 0 || modulus == 1)
    throw Error(Errc::UnsupportedCoefficients,
                "characteristic must be 0 or >= 2, got " +
                    std::to_string(modulus));
  if (modulus > (std::int64_t{1} << 31))
    throw Error(Errc::UnsupportedCoefficients, "modulus too large");
  field_ = modulus == 0 || is_prime(modulus);
}

Scalar Coeffs::from_int(std::int64_t v) const {
  if (m_ == 0) return {v, 1};
  return {mod_floor(v, m_), 1};
}

Scalar Coeffs::from_fraction(std::int64_t num, std::int64_t den) const {
  if (m_ == 0) return make_rational(num, den);
  return mul(from_int(num), inv(from_int(den)));
}

Scalar Coeffs::add(Scalar a, Scalar b) const {
  if (m_ == 0)
    return make_rational(static_cast<__int128>(a.num) * b.den +
                             static_cast<__int128>(b.num) * a.den,
                         static_cast<__int128>(a.den) * b.den);
  auto s = a.num + b.num;
  return {s >= m_ ? s - m_ : s, 1};
}

Scalar Coeffs::sub(Scalar a, Scalar b) const { return add(a, neg(b)); }

Scalar Coeffs::neg(Scalar a) const {
  if (m_ == 0) return {-a.num, a.den};
  return {a.num == 0 ? 0 : m_ - a.num, 1};
}

Scalar Coeffs::mul(Scalar a, Scalar b) const {
  if (m_ == 0)
    return make_rational(static_cast<__int128>(a.num) * b.num,
                         static_cast<__int128>(a.den) * b.den);
  return {(a.num * b.num) % m_, 1};
}

bool Coeffs::is_unit(Scalar a) const {
  if (m_ == 0) return a.num != 0;
  return std::gcd(a.num, m_) == 1;
}

Scalar Coeffs::inv(Scalar a) const {
  if (m_ == 0) {
    if (a.num == 0) throw Error(Errc::InvalidArgument, "inverse of zero");
    return make_rational(a.den, a.num);
  }
  std::int64_t g, s, t;
  xgcd(a.num, m_, g, s, t);
  if (g != 1)
    throw Error(Errc::InvalidArgument,
                "non-unit " + std::to_string(a.num) + " mod " +
                    std::to_string(m_));
  return {mod_floor(s, m_), 1};
}

Scalar Coeffs::pow(Scalar a, std::int64_t e) const {
  if (e < 0) return pow(inv(a), -e);
  Scalar r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Coeffs::GcdStep Coeffs::gcd_step(Scalar a, Scalar b) const {
  if (field_) {
    if (!is_zero(a)) {
      // s*a = 1-ish pivot kept as a; eliminate b.
      return {one(), zero(), neg(mul(b, inv(a))), one()};
    }
    return {zero(), one(), one(), zero()};
  }
  std::int64_t g, s, t;
  xgcd(a.num, b.num, g, s, t);
  return {from_int(s), from_int(t), from_int(-(b.num / g)),
          from_int(a.num / g)};
}

Scalar Coeffs::canonical_unit(Scalar a) const {
  if (field_) return is_zero(a) ? one() : inv(a);
  auto g = std::gcd(a.num, m_);
  auto mg = m_ / g;
  std::int64_t u0 = 1;
  if (mg > 1) {
    std::int64_t gg, s, t;
    xgcd(mod_floor(a.num / g, mg), mg, gg, s, t);
    u0 = mod_floor(s, mg);
  }
  for (std::int64_t k = 0; k <= g; ++k) {
    auto u = u0 + k * mg;
    if (std::gcd(u, m_) == 1) return {u % m_, 1};
  }
  throw Error(Errc::InvalidArgument, "no canonical unit");
}

Scalar Coeffs::annihilator(Scalar g) const {
  if (field_) return is_zero(g) ? one() : zero();
  if (g.num == 0) return one();
  return from_int(m_ / std::gcd(g.num, m_));
}

Scalar Coeffs::quotient(Scalar b, Scalar g) const {
  if (field_) return is_zero(g) ? zero() : mul(b, inv(g));
  return {b.num / g.num, 1};
}

int Coeffs::quotient_length(Scalar g) const {
  if (field_) return is_zero(g) ? 0 : 1;
  return big_omega(factorize(m_ / std::gcd(g.num, m_)));
}

std::int64_t Coeffs::additive_order(Scalar a) const {
  if (m_ == 0) return a.num == 0 ? 1 : 0;
  return m_ / std::gcd(a.num, m_);
}

}  // namespace deltaring
