#pragma once

#include "rhoqes/oscillator.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rhoqes::app {

// Raw run configuration as read from JSON and flags.  Rationals stay strings until resolve().
struct RunConfig {
  std::array<std::string, 4> masses{"1", "1", "1", "1"};
  std::string d = "3";
  std::string omega = "1";
  std::optional<std::array<std::string, 6>> gauge;  // a b c e f g
  std::string variant = "generic";
  int N = 2;
  std::string out;  // empty: stdout
  std::string format = "json";
  std::uint64_t seed = 1;
  bool p_representation = false;
  std::string direction = "forward";                 // springs
  std::optional<std::array<std::string, 6>> nu;      // springs inverse target
  std::optional<std::array<std::string, 6>> point;   // geometry, rho values
  std::array<std::string, 6> classical{"0", "0", "0", "0", "0", "0"};
  std::vector<std::string> electron_masses{"1/100000", "1/10000", "1/1000"};
};

// Throws ConfigError on unknown keys or wrong types.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);
nlohmann::json to_json(const RunConfig& c);

// Validated, exact form of a RunConfig.
struct Model {
  Variant variant = Variant::generic;
  MassConfig masses;
  Rational m = 1;  // common finite mass for the special variants
  Rational d = 3;
  GaugeParams gauge;
  SpecialModel special;
  Point classical{};
};
Model resolve(const RunConfig& c);

Rational parse_mass_inverse(const std::string& s);  // "inf" -> 0

}  // namespace rhoqes::app
