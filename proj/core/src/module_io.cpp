#include "deltaring/module_io.hpp"

#include "deltaring/error.hpp"
#include "deltaring/ring_io.hpp"

namespace deltaring {

namespace {

using nlohmann::json;

[[noreturn]] void fail(std::string const& msg) { throw Error(Errc::ParseError, msg); }

GradedRing module_ring(json const& ref, std::filesystem::path const& base_dir) {
  std::vector<GradedRing> factors;
  if (ref.is_string()) {
    std::filesystem::path p = ref.get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    factors = load_ring_factors(p);
  } else if (ref.is_object()) {
    factors = ring_factors_from_json(ref);
  } else {
    fail("'ring' must be a path or an inline ring");
  }
  if (factors.size() != 1)
    throw Error(Errc::Unsupported, "modules over product files are not supported");
  return factors.front();
}

}  // namespace

FiniteModule module_from_json(json const& j, std::filesystem::path const& base_dir) {
  if (!j.is_object()) fail("module must be a JSON object");
  for (char const* key : {"ring", "generators"})
    if (!j.contains(key)) fail(std::string("missing key '") + key + "'");
  auto handle = ModuleRing::make(module_ring(j.at("ring"), base_dir));
  auto const& r = handle->ring;
  auto const& g = j.at("generators");
  if (!g.is_number_integer() || g.get<std::int64_t>() < 0)
    fail("'generators' must be a nonnegative integer");
  auto gens = static_cast<int>(g.get<std::int64_t>());
  std::vector<std::vector<RingElement>> rows;
  if (j.contains("relations")) {
    auto const& rel = j.at("relations");
    if (!rel.is_array()) fail("'relations' must be an array of rows");
    for (auto const& row : rel) {
      if (!row.is_array() || static_cast<int>(row.size()) != gens)
        fail("each relation row needs one entry per generator");
      std::vector<RingElement> out;
      for (auto const& e : row) out.push_back(element_from_json(r, e));
      rows.push_back(std::move(out));
    }
  }
  return FiniteModule::from_relations(handle, gens, rows);
}

FiniteModule parse_module(std::string const& text, std::filesystem::path const& base_dir) {
  return module_from_json(parse_json_text(text), base_dir);
}

FiniteModule load_module(std::filesystem::path const& path) {
  try {
    return parse_module(read_file(path), path.parent_path());
  } catch (Error const& e) {
    if (e.kind() != Errc::ParseError) throw;
    throw Error(Errc::ParseError, path.string() + ": " + e.detail());
  }
}

json to_json(FiniteModule const& m) {
  auto const& r = m.ring()->ring;
  json rows = json::array();
  for (auto const& row : m.relation_rows()) {
    json out = json::array();
    for (auto const& x : row) out.push_back(element_to_json(r, x));
    rows.push_back(std::move(out));
  }
  return {{"ring", to_json(r)}, {"generators", m.generators()}, {"relations", rows}};
}

std::string serialize_module(FiniteModule const& m) { return to_json(m).dump(2) + "\n"; }

}  // namespace deltaring
