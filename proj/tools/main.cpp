#include "app/commands.hpp"
#include "app/config.hpp"

#include "rhoqes/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <json.hpp>

int main(int argc, char** argv) {
  using namespace rhoqes::app;

  CLI::App app{"rho-representation four-body oscillator toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, out_path, format, variant, direction;
  std::uint64_t seed = 0;
  int N = -1;
  bool p_rep = false;
  std::vector<std::string> suites;

  app.add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  auto* seed_opt = app.add_option("--seed", seed, "seed for randomized suites");
  app.add_option("--variant", variant, "generic|equal|atomic|molecular|three-center")
      ->check(CLI::IsMember({"generic", "equal", "atomic", "molecular", "three-center"}));
  auto* n_opt = app.add_option("--N", N, "flag degree");

  auto* verify = app.add_subcommand("verify", "run verification suites and write a JSON report");
  verify->add_option("--suite", suites, "restrict to the named suites (repeatable)");
  auto* spectrum = app.add_subcommand("spectrum", "spectrum table on the flag P_N");
  spectrum->add_flag("--p-representation", p_rep, "levels of the one-variable P model");
  auto* springs = app.add_subcommand("springs", "forward or inverse spring-constant map");
  springs->add_option("--direction", direction, "forward or inverse")->check(CLI::IsMember({"forward", "inverse"}));
  app.add_subcommand("geometry", "evaluate geometric quantities at a point");
  app.add_subcommand("prep", "print the resolved configuration");
  app.add_subcommand("bo", "Born-Oppenheimer gap expansion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ExitCode::config_error;
  }

  RunConfig c;
  try {
    if (!config_path.empty()) c = load_config(config_path);
  } catch (const rhoqes::ConfigError& e) {
    std::cerr << nlohmann::json{{"error", "ConfigError"}, {"message", e.what()}}.dump() << '\n';
    return ExitCode::config_error;
  }
  if (!out_path.empty()) c.out = out_path;
  if (!format.empty()) c.format = format;
  if (*seed_opt) c.seed = seed;
  if (!variant.empty()) c.variant = variant;
  if (*n_opt) c.N = N;
  if (!direction.empty()) c.direction = direction;
  if (p_rep) c.p_representation = true;

  const std::string name = app.get_subcommands().front()->get_name();
  if (c.out.empty()) return run_command(name, c, std::cout, std::cerr, suites);
  std::ofstream out(c.out);
  if (!out) {
    std::cerr << nlohmann::json{{"error", "ConfigError"}, {"message", "cannot write " + c.out}}.dump() << '\n';
    return ExitCode::config_error;
  }
  return run_command(name, c, out, std::cerr, suites);
}
