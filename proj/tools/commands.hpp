#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace deltaring::cli {

inline constexpr int kSchemaVersion = 1;

enum Exit { kPositive = 0, kNegative = 1, kInputError = 2 };

/// What a command produces: a JSON payload, the same facts as text, and
/// the exit status.
struct Outcome {
  nlohmann::json report;
  std::string text;
  int status = kPositive;
};

struct Window {
  int lo = 0, hi = 0;
};
/// "lo:hi"; InvalidArgument otherwise.
Window parse_window(std::string const& s);

Outcome run_classify(std::string const& ring_path, int n);
Outcome run_qf(std::string const& ring_path);
Outcome run_heller(std::string const& ring_path, std::vector<std::string> const& module_paths,
                   int random_samples, std::uint64_t seed);

struct DgArgs {
  std::int64_t p = 3;
  int i = 1, n = 1;
  std::optional<int> unit_degree;
  Window window{-10, 10};
  int weight = 16;
  int trials = 200;
  int triangles = 50;
  std::uint64_t seed = 1;
};
Outcome run_dg_verify(DgArgs const& a);
Outcome run_ggh(std::int64_t p, int n, Window w);
Outcome run_selftest();

}  // namespace deltaring::cli
