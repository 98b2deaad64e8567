// deltaring: classify rings, check Heller shifts, verify the DG triangulation
// and the generating hypothesis for cyclic p-groups.

#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"
#include "deltaring/error.hpp"

namespace cli = deltaring::cli;

namespace {

int emit(cli::Outcome const& o, std::string const& command, bool as_json) {
  if (as_json) {
    nlohmann::json j = o.report;
    j["schema_version"] = cli::kSchemaVersion;
    j["command"] = command;
    j["exit_status"] = o.status;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << o.text;
  }
  return o.status;
}

int input_error(std::string const& kind, std::string const& message, bool as_json) {
  if (as_json) {
    nlohmann::json j{{"schema_version", cli::kSchemaVersion},
                     {"error", {{"kind", kind}, {"message", message}}},
                     {"exit_status", cli::kInputError}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cerr << "error: " << kind << ": " << message << "\n";
  }
  return cli::kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delta-ring classification, DG triangulations and stable module checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "deltaring 0.1.0");
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable report")->configurable(false);

  std::string ring_path;
  int suspension = 0;
  auto* classify = app.add_subcommand("classify", "decide whether R is a Delta^n ring");
  classify->add_option("ring", ring_path, "ring file")->required();
  classify->add_option("--n", suspension, "suspension degree")->default_val(0);

  auto* qf = app.add_subcommand("qf", "quasi-Frobenius test per local factor");
  qf->add_option("ring", ring_path, "ring file")->required();

  std::vector<std::string> modules;
  int random_samples = 0;
  std::uint64_t seed = 1;
  auto* heller = app.add_subcommand("heller", "check Omega^3 M = M stably");
  heller->add_option("ring", ring_path, "ring file")->required();
  heller->add_option("--module", modules, "module file (repeatable)");
  heller->add_option("--random", random_samples, "number of random modules")->default_val(0);
  heller->add_option("--seed", seed, "random seed")->default_val(1);

  cli::DgArgs dg;
  std::string dg_window = "-10:10";
  int unit_degree = 0;
  auto* dgv = app.add_subcommand("dg-verify", "build the DG algebra and verify triangles");
  dgv->add_option("--p", dg.p, "characteristic")->default_val(3);
  dgv->add_option("--i", dg.i, "degree of u")->default_val(1);
  dgv->add_option("--n", dg.n, "suspension degree")->default_val(1);
  auto* unit_opt = dgv->add_option("--unit-degree", unit_degree, "degree of the unit w");
  dgv->add_option("--window", dg_window, "homology window lo:hi")->default_val("-10:10");
  dgv->add_option("--weight", dg.weight, "u-exponent bound")->default_val(16);
  dgv->add_option("--trials", dg.trials, "random monomial pairs")->default_val(200);
  dgv->add_option("--triangles", dg.triangles, "random triangles")->default_val(50);
  dgv->add_option("--seed", dg.seed, "random seed")->default_val(1);

  std::int64_t p = 3;
  int exponent = 1;
  std::string ggh_window = "-6:6";
  auto* ggh = app.add_subcommand("ggh", "global generating hypothesis for StMod(F_p[Z/p^n])");
  ggh->add_option("--p", p, "prime")->default_val(3);
  ggh->add_option("--n", exponent, "exponent of the cyclic group")->default_val(1);
  ggh->add_option("--window", ggh_window, "degree window lo:hi")->default_val("-6:6");

  auto* selftest = app.add_subcommand("selftest", "quick end-to-end checks");

  for (auto* sub : {classify, qf, heller, dgv, ggh, selftest})
    sub->add_flag("--json", as_json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForVersion const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    auto kind = dynamic_cast<CLI::ExtrasError const*>(&e) ? "UnknownFlag" : "UsageError";
    return input_error(kind, e.what(), as_json);
  }

  try {
    if (classify->parsed()) return emit(cli::run_classify(ring_path, suspension), "classify", as_json);
    if (qf->parsed()) return emit(cli::run_qf(ring_path), "qf", as_json);
    if (heller->parsed())
      return emit(cli::run_heller(ring_path, modules, random_samples, seed), "heller", as_json);
    if (dgv->parsed()) {
      dg.window = cli::parse_window(dg_window);
      if (unit_opt->count() > 0) dg.unit_degree = unit_degree;
      return emit(cli::run_dg_verify(dg), "dg-verify", as_json);
    }
    if (ggh->parsed())
      return emit(cli::run_ggh(p, exponent, cli::parse_window(ggh_window)), "ggh", as_json);
    return emit(cli::run_selftest(), "selftest", as_json);
  } catch (deltaring::Error const& e) {
    return input_error(std::string(deltaring::to_string(e.kind())), e.detail(), as_json);
  }
}
