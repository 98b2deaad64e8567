#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "deltaring/modcat.hpp"

namespace deltaring {

/// Module file: {"ring": path or inline ring, "generators": g,
/// "relations": [[element, ...], ...]} with rows of length g. A ring path
/// is resolved against `base_dir`.
FiniteModule module_from_json(nlohmann::json const& j,
                              std::filesystem::path const& base_dir = {});
FiniteModule parse_module(std::string const& text,
                          std::filesystem::path const& base_dir = {});
FiniteModule load_module(std::filesystem::path const& path);

/// Inline-ring form; relations are a Howell basis of the relation span.
nlohmann::json to_json(FiniteModule const& m);
std::string serialize_module(FiniteModule const& m);

}  // namespace deltaring
