#include <doctest.h>

#include <filesystem>

#include "deltaring/error.hpp"
#include "deltaring/modcat.hpp"
#include "deltaring/module_io.hpp"
#include "deltaring/ring_io.hpp"
#include "deltaring/standard_rings.hpp"

using namespace deltaring;
namespace fs = std::filesystem;

namespace {

fs::path data_dir() { return fs::path(DELTARING_DATA_DIR); }

Errc kind_of(auto&& fn) {
  try {
    fn();
  } catch (Error const& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("every shipped ring file round-trips") {
  int files = 0;
  for (auto const& entry : fs::directory_iterator(data_dir() / "rings")) {
    CAPTURE(entry.path().string());
    auto a = load_ring_factors(entry.path());
    auto b = parse_ring_factors(serialize_ring_factors(a));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    ++files;
  }
  CHECK(files >= 15);
}

TEST_CASE("module files resolve ring paths relative to themselves") {
  auto m = load_module(data_dir() / "modules" / "f2x_residue.module");
  CHECK(m.generators() == 1);
  CHECK(m.length() == 1);
  CHECK(m.ring()->ring == rings::truncated_polynomial(2, 2));

  auto two = load_module(data_dir() / "modules" / "z4_two_generators.module");
  CHECK(two.cardinality() == 4);
  CHECK(is_projective(load_module(data_dir() / "modules" / "z4_free.module")));
}

TEST_CASE("modules round-trip through the inline form") {
  for (auto const* name : {"z4_two_generators.module", "f3t3_length2.module"}) {
    CAPTURE(name);
    auto m = load_module(data_dir() / "modules" / name);
    auto back = parse_module(serialize_module(m));
    CHECK(back.generators() == m.generators());
    CHECK(back.relations() == m.relations());
    CHECK(iso_test(m, back));
  }
}

TEST_CASE("module parse errors") {
  auto ring = to_json(rings::cyclic(4)).dump();
  CHECK(kind_of([&] { parse_module(R"({"generators": 1})"); }) == Errc::ParseError);
  CHECK(kind_of([&] {
          parse_module(R"({"ring": )" + ring + R"(, "generators": 2, "relations": [[[]]]})");
        }) == Errc::ParseError);
  CHECK(kind_of([&] {
          parse_module(R"({"ring": )" + ring +
                       R"(, "generators": 1, "relations": [[[{"coeff": 1, "basis": "y"}]]]})");
        }) == Errc::ParseError);
  CHECK(kind_of([&] { parse_module(R"({"ring": 7, "generators": 1})"); }) == Errc::ParseError);
  try {
    parse_module("{\n  \"ring\": ,\n}");
    FAIL("expected a parse error");
  } catch (Error const& e) {
    CHECK(e.kind() == Errc::ParseError);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("modules over product files are refused") {
  auto j = nlohmann::json::parse(R"({"generators": 1})");
  j["ring"] = (data_dir() / "rings" / "f2_times_z4.ring").string();
  CHECK(kind_of([&] { module_from_json(j); }) == Errc::Unsupported);
}
