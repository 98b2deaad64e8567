#include "deltaring/classify.hpp"

#include <algorithm>

#include "deltaring/error.hpp"

namespace deltaring {

std::string_view to_string(LocalKind k) {
  switch (k) {
    case LocalKind::GradedField: return "GradedField";
    case LocalKind::ExteriorAlgebra: return "ExteriorAlgebra";
    case LocalKind::TMod4: return "TMod4";
    case LocalKind::NotDelta: return "NotDelta";
  }
  return "?";
}

std::string_view to_string(Reason r) {
  switch (r) {
    case Reason::NotQuasiFrobenius: return "NotQuasiFrobenius";
    case Reason::MaximalIdealNotPrincipal: return "MaximalIdealNotPrincipal";
    case Reason::SquareNonzero: return "SquareNonzero";
    case Reason::AnnihilatorNotPrincipalEqual: return "AnnihilatorNotPrincipalEqual";
    case Reason::MissingUnitDegree: return "MissingUnitDegree";
    case Reason::WrongCharacteristic: return "WrongCharacteristic";
    case Reason::OddSuspensionCharacteristicClash:
      return "OddSuspensionCharacteristicClash";
    case Reason::ResidueNotGradedField: return "ResidueNotGradedField";
  }
  return "?";
}

namespace {

LocalVerdict negative(Reason r, std::string detail) {
  LocalVerdict v;
  v.reason = r;
  v.detail = std::move(detail);
  return v;
}

bool even(int d) { return d % 2 == 0; }

/// A homogeneous generator of m, tried over the Howell rows of each slice
/// that survive modulo m^2.
std::optional<std::pair<RingElement, int>> principal_generator(
    GradedRing const& r, Ideal const& m) {
  std::vector<RingElement> prods;
  for (auto const& a : m.generators)
    for (auto const& b : m.generators) prods.push_back(r.multiply(a, b));
  auto m2 = ideal_from_generators(r, prods);
  for (auto const& [d, span] : m.slices) {
    for (auto const& row : span.rows()) {
      if (m2.slices.at(d).contains(row)) continue;
      auto x = r.from_coords(row, d);
      if (principal_ideal(r, x) == m) return std::make_pair(x, d);
    }
  }
  return std::nullopt;
}

}  // namespace

bool has_unit_in_degree(GradedRing const& r, int d, EnumerationLimits lim) {
  if (d == 0) return true;
  return unit_in_degree(r, d, lim).has_value();
}

LocalVerdict classify_local(GradedRing const& r, int n, EnumerationLimits lim) {
  if (!is_local(r, lim)) throw Error(Errc::NotLocal, "classify_local needs a local ring");
  auto m = maximal_ideal(r, lim);
  if (m.is_zero()) {
    LocalVerdict v;
    v.kind = LocalKind::GradedField;
    return v;
  }
  if (socle_dimension(r, lim) != 1)
    return negative(Reason::NotQuasiFrobenius, "socle is not simple");

  auto gen = principal_generator(r, m);
  if (!gen)
    return negative(Reason::MaximalIdealNotPrincipal,
                    "no homogeneous element generates the maximal ideal");
  auto [x, xdeg] = *gen;
  auto with_x = [&](LocalVerdict v) {
    v.generator = x;
    v.x_degree = xdeg;
    return v;
  };

  if (!(annihilator(r, x) == principal_ideal(r, x)))
    return with_x(negative(Reason::AnnihilatorNotPrincipalEqual,
                           "ann(" + r.to_string(x) + ") differs from (" +
                               r.to_string(x) + ")"));
  if (!r.multiply(x, x).is_zero())
    return with_x(negative(Reason::SquareNonzero,
                           "(" + r.to_string(x) + ")^2 is nonzero"));

  auto ch = characteristic(r);
  auto p = residue_characteristic(r, lim);
  if (ch == p) {
    int needed = 3 * xdeg + n;
    if (!has_unit_in_degree(r, needed, lim)) {
      auto v = negative(Reason::MissingUnitDegree,
                        "no unit in degree " + std::to_string(needed));
      v.needed_degree = needed;
      return with_x(v);
    }
    if (n == 0 && p != 2)
      return with_x(negative(Reason::WrongCharacteristic,
                             "suspension 0 needs residue characteristic 2"));
    LocalVerdict v;
    v.kind = LocalKind::ExteriorAlgebra;
    v.unit_degree_found = needed;
    return with_x(v);
  }

  if (ch != 4)
    return with_x(negative(Reason::WrongCharacteristic,
                           "unequal characteristic " + std::to_string(ch) +
                               " over residue characteristic " + std::to_string(p)));
  if (!even(n))
    return with_x(negative(Reason::OddSuspensionCharacteristicClash,
                           "characteristic 4 needs an even suspension"));
  auto two = r.scale(r.coeffs().from_int(2), r.one());
  if (!(principal_ideal(r, two) == m))
    return with_x(negative(Reason::WrongCharacteristic, "maximal ideal is not (2)"));
  if (!has_unit_in_degree(r, n, lim)) {
    auto v = negative(Reason::MissingUnitDegree,
                      "no unit in degree " + std::to_string(n));
    v.needed_degree = n;
    return with_x(v);
  }
  LocalVerdict v;
  v.kind = LocalKind::TMod4;
  v.generator = two;
  v.x_degree = 0;
  return v;
}

Verdict classify(GradedRing const& r, int n, EnumerationLimits lim) {
  return classify(std::vector<GradedRing>{r}, n, lim);
}

Verdict classify(std::vector<GradedRing> const& factors, int n,
                 EnumerationLimits lim) {
  Verdict out;
  out.suspension = n;
  out.local_criteria_only = n != 0 && n != 1;
  out.is_delta = true;
  bool parity_ok = true;
  std::vector<GradedRing> local;
  for (auto const& r : factors)
    for (auto& f : decompose_product(r, lim)) local.push_back(std::move(f));
  for (auto& f : local) {
    auto v = classify_local(f, n, lim);
    out.is_delta = out.is_delta && v.positive();
    if (v.kind == LocalKind::ExteriorAlgebra && even(n) && even(*v.x_degree) &&
        residue_characteristic(f, lim) != 2)
      parity_ok = false;
    out.factors.push_back({std::move(f), std::move(v)});
  }
  if (out.local_criteria_only) out.parity_admissible = parity_ok;
  return out;
}

nlohmann::json to_json(LocalVerdict const& v) {
  nlohmann::json j;
  j["kind"] = std::string(to_string(v.kind));
  j["reason"] = v.reason ? nlohmann::json(std::string(to_string(*v.reason))) : nlohmann::json();
  j["x_degree"] = v.x_degree ? nlohmann::json(*v.x_degree) : nlohmann::json();
  j["unit_degree_found"] =
      v.unit_degree_found ? nlohmann::json(*v.unit_degree_found) : nlohmann::json();
  if (v.needed_degree) j["needed_degree"] = *v.needed_degree;
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

nlohmann::json to_json(Verdict const& v) {
  nlohmann::json j;
  j["is_delta"] = v.is_delta;
  j["suspension"] = v.suspension;
  j["factors"] = nlohmann::json::array();
  for (auto const& f : v.factors) {
    auto fj = to_json(f.verdict);
    fj["rank"] = f.ring.rank();
    fj["characteristic"] = characteristic(f.ring);
    if (f.verdict.generator) fj["generator"] = f.ring.to_string(*f.verdict.generator);
    j["factors"].push_back(std::move(fj));
  }
  if (v.local_criteria_only) {
    j["confidence"] = "local-criteria-only";
    j["parity_admissible"] = v.parity_admissible.value_or(true);
  } else {
    j["confidence"] = "theorem";
  }
  return j;
}

}  // namespace deltaring
