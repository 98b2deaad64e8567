#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "deltaring/graded_ring.hpp"

namespace deltaring {

/// Builds a ring from the JSON ring format. Basis references in products
/// may be names or indices; coefficients are integers or "p/q" strings.
RingSpec ring_spec_from_json(nlohmann::json const& j);
GradedRing ring_from_json(nlohmann::json const& j);
/// Parses text; syntax errors become ParseError with line and column.
GradedRing parse_ring(std::string const& text);
GradedRing load_ring(std::filesystem::path const& path);

nlohmann::json to_json(GradedRing const& r);
std::string serialize_ring(GradedRing const& r);

/// A ring file holds one ring, or {"product": [ring, ...]} for a direct
/// product whose factors need different coefficient rings (such as
/// F_2 x Z/4, which is not free over any Z/m).
std::vector<GradedRing> ring_factors_from_json(nlohmann::json const& j);
std::vector<GradedRing> parse_ring_factors(std::string const& text);
std::vector<GradedRing> load_ring_factors(std::filesystem::path const& path);
nlohmann::json to_json(std::vector<GradedRing> const& factors);
std::string serialize_ring_factors(std::vector<GradedRing> const& factors);

/// Shared by the module format: parses JSON text with positioned errors.
nlohmann::json parse_json_text(std::string const& text);
std::string read_file(std::filesystem::path const& path);
Scalar parse_coefficient(Coeffs const& k, nlohmann::json const& j);
nlohmann::json coefficient_to_json(Coeffs const& k, Scalar s);
/// Ring elements as arrays of {coeff, basis, vpow} terms.
RingElement element_from_json(GradedRing const& r, nlohmann::json const& j);
nlohmann::json element_to_json(GradedRing const& r, RingElement const& x);

}  // namespace deltaring
