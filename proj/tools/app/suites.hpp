#pragma once

#include "app/config.hpp"
#include "app/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rhoqes::app {

// Sample sizes for the randomized checks.
struct SuiteOptions {
  std::uint64_t seed = 1;
  int N = 2;
  int ground_draws = 20;
  int cm_points = 100;
  int det_points = 100;
  int det_masses = 5;
  int sl7_draws = 10;
  int flag_N = 4;
  int symmetry_draws = 10;
  int kinetic_draws = 20;
  int oracle_draws = 5;
  int laguerre_max = 10;
  std::vector<Rational> electron_masses{Rational(1, 100000), Rational(1, 10000), Rational(1, 1000)};
};

using SuiteFn = std::vector<Check> (*)(const Model&, const SuiteOptions&);

std::vector<Check> geometry_suite(const Model& m, const SuiteOptions& o);
std::vector<Check> oscillator_suite(const Model& m, const SuiteOptions& o);
std::vector<Check> sl7_suite(const Model& m, const SuiteOptions& o);
std::vector<Check> spectrum_suite(const Model& m, const SuiteOptions& o);
std::vector<Check> symmetry_suite(const Model& m, const SuiteOptions& o);
std::vector<Check> reduction_suite(const Model& m, const SuiteOptions& o);
std::vector<Check> bo_suite(const Model& m, const SuiteOptions& o);
std::vector<Check> jacobi_suite(const Model& m, const SuiteOptions& o);
std::vector<Check> special_suite(const Model& m, const SuiteOptions& o);

struct SuiteEntry {
  std::string name;
  SuiteFn fn;
};
const std::vector<SuiteEntry>& all_suites();

// Runs the named suites (all when empty) concurrently; checks come back sorted by id.
Report run_suites(const Model& m, const SuiteOptions& o, const std::vector<std::string>& only = {});

}  // namespace rhoqes::app
