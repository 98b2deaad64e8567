#include "deltaring/ring_io.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "deltaring/error.hpp"

namespace deltaring {

namespace {

using nlohmann::json;

[[noreturn]] void fail(std::string const& msg) { throw Error(Errc::ParseError, msg); }

json const& field(json const& j, char const* key) {
  if (!j.is_object() || !j.contains(key))
    fail(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::int64_t as_int(json const& j, char const* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

int basis_ref(json const& j, std::vector<BasisElement> const& basis) {
  if (j.is_number_integer()) {
    auto i = j.get<std::int64_t>();
    if (i < 0 || i >= static_cast<std::int64_t>(basis.size()))
      fail("basis index " + std::to_string(i) + " out of range");
    return static_cast<int>(i);
  }
  if (j.is_string()) {
    auto name = j.get<std::string>();
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i].name == name) return static_cast<int>(i);
    fail("unknown basis element '" + name + "'");
  }
  fail("basis reference must be a name or an index");
}

std::vector<Term> parse_terms(Coeffs const& k, json const& arr,
                              std::vector<BasisElement> const& basis) {
  if (!arr.is_array()) fail("terms must be an array");
  std::vector<Term> out;
  for (auto const& t : arr) {
    Term term;
    term.coeff = parse_coefficient(k, field(t, "coeff"));
    term.basis = basis_ref(field(t, "basis"), basis);
    term.vpow = t.contains("vpow") ? static_cast<int>(as_int(t.at("vpow"), "vpow")) : 0;
    out.push_back(term);
  }
  return out;
}

json terms_to_json(Coeffs const& k, std::vector<Term> const& terms,
                   std::vector<BasisElement> const& basis) {
  json arr = json::array();
  for (auto const& t : terms)
    arr.push_back({{"coeff", coefficient_to_json(k, t.coeff)},
                   {"basis", basis[static_cast<std::size_t>(t.basis)].name},
                   {"vpow", t.vpow}});
  return arr;
}

}  // namespace

Scalar parse_coefficient(Coeffs const& k, json const& j) {
  if (j.is_number_integer()) return k.from_int(j.get<std::int64_t>());
  if (j.is_string()) {
    static std::regex const re(R"(\s*(-?\d+)\s*(?:/\s*(\d+))?\s*)");
    std::smatch mm;
    auto s = j.get<std::string>();
    if (!std::regex_match(s, mm, re)) fail("bad coefficient '" + s + "'");
    auto num = std::stoll(mm[1]);
    auto den = mm[2].matched ? std::stoll(mm[2]) : 1LL;
    if (den == 0) fail("zero denominator in '" + s + "'");
    return k.from_fraction(num, den);
  }
  fail("coefficient must be an integer or a \"p/q\" string");
}

json coefficient_to_json(Coeffs const& k, Scalar s) {
  if (k.finite() || s.den == 1) return s.num;
  return std::to_string(s.num) + "/" + std::to_string(s.den);
}

RingElement element_from_json(GradedRing const& r, json const& j) {
  RingElement out;
  for (auto const& t : parse_terms(r.coeffs(), j, r.basis()))
    out = r.add(out, r.monomial({t.basis, t.vpow}, t.coeff));
  return out;
}

json element_to_json(GradedRing const& r, RingElement const& x) {
  std::vector<Term> terms;
  for (auto const& [m, c] : x.terms) terms.push_back({c, m.basis, m.vpow});
  return terms_to_json(r.coeffs(), terms, r.basis());
}

RingSpec ring_spec_from_json(json const& j) {
  if (!j.is_object()) fail("ring must be a JSON object");
  RingSpec spec;
  spec.characteristic = as_int(field(j, "characteristic"), "characteristic");
  if (spec.characteristic < 0 || spec.characteristic == 1)
    fail("characteristic must be 0 or at least 2");
  Coeffs k(spec.characteristic);
  auto const& basis = field(j, "basis");
  if (!basis.is_array() || basis.empty()) fail("basis must be a nonempty array");
  for (auto const& b : basis) {
    auto const& name = field(b, "name");
    if (!name.is_string()) fail("basis name must be a string");
    spec.basis.push_back(
        {name.get<std::string>(), static_cast<int>(as_int(field(b, "degree"), "degree"))});
  }
  if (j.contains("periodicity") && !j.at("periodicity").is_null()) {
    auto const& p = j.at("periodicity");
    auto const& unit = field(p, "unit");
    if (!unit.is_string()) fail("periodicity unit must be a string");
    spec.periodicity = Periodicity{unit.get<std::string>(),
                                   static_cast<int>(as_int(field(p, "degree"), "degree"))};
  }
  if (j.contains("products")) {
    auto const& prods = j.at("products");
    if (!prods.is_array()) fail("products must be an array");
    for (auto const& p : prods)
      spec.products.push_back({basis_ref(field(p, "left"), spec.basis),
                               basis_ref(field(p, "right"), spec.basis),
                               parse_terms(k, field(p, "terms"), spec.basis)});
  }
  if (j.contains("unit")) spec.unit = parse_terms(k, j.at("unit"), spec.basis);
  return spec;
}

GradedRing ring_from_json(json const& j) {
  return GradedRing::validate(ring_spec_from_json(j));
}

json parse_json_text(std::string const& text) {
  try {
    return json::parse(text);
  } catch (json::parse_error const& e) {
    std::size_t line = 1, col = 1;
    auto end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail("line " + std::to_string(line) + ", column " + std::to_string(col) +
         ": invalid JSON");
  }
}

GradedRing parse_ring(std::string const& text) {
  return ring_from_json(parse_json_text(text));
}

std::string read_file(std::filesystem::path const& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GradedRing load_ring(std::filesystem::path const& path) {
  try {
    return parse_ring(read_file(path));
  } catch (Error const& e) {
    if (e.kind() != Errc::ParseError) throw;
    throw Error(Errc::ParseError, path.string() + ": " + e.detail());
  }
}

json to_json(GradedRing const& r) {
  auto spec = r.spec();
  Coeffs k(spec.characteristic);
  json j;
  j["characteristic"] = spec.characteristic;
  j["basis"] = json::array();
  for (auto const& b : spec.basis) j["basis"].push_back({{"name", b.name}, {"degree", b.degree}});
  if (spec.periodicity)
    j["periodicity"] = {{"unit", spec.periodicity->unit}, {"degree", spec.periodicity->degree}};
  j["products"] = json::array();
  for (auto const& p : spec.products)
    j["products"].push_back({{"left", spec.basis[static_cast<std::size_t>(p.left)].name},
                             {"right", spec.basis[static_cast<std::size_t>(p.right)].name},
                             {"terms", terms_to_json(k, p.terms, spec.basis)}});
  j["unit"] = terms_to_json(k, spec.unit, spec.basis);
  return j;
}

std::string serialize_ring(GradedRing const& r) { return to_json(r).dump(2) + "\n"; }

std::vector<GradedRing> ring_factors_from_json(json const& j) {
  if (!j.is_object() || !j.contains("product")) return {ring_from_json(j)};
  auto const& arr = j.at("product");
  if (!arr.is_array() || arr.empty()) fail("product must be a nonempty array");
  std::vector<GradedRing> out;
  for (auto const& f : arr) {
    auto sub = ring_factors_from_json(f);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

std::vector<GradedRing> parse_ring_factors(std::string const& text) {
  return ring_factors_from_json(parse_json_text(text));
}

std::vector<GradedRing> load_ring_factors(std::filesystem::path const& path) {
  try {
    return parse_ring_factors(read_file(path));
  } catch (Error const& e) {
    if (e.kind() != Errc::ParseError) throw;
    throw Error(Errc::ParseError, path.string() + ": " + e.detail());
  }
}

json to_json(std::vector<GradedRing> const& factors) {
  if (factors.size() == 1) return to_json(factors.front());
  json arr = json::array();
  for (auto const& f : factors) arr.push_back(to_json(f));
  return {{"product", arr}};
}

std::string serialize_ring_factors(std::vector<GradedRing> const& factors) {
  return to_json(factors).dump(2) + "\n";
}

}  // namespace deltaring
