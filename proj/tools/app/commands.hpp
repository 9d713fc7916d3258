#pragma once

#include "app/config.hpp"
#include "app/suites.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace rhoqes::app {

enum ExitCode : int { ok = 0, failed = 1, config_error = 2, flag_violation = 3, no_convergence = 4 };

// Each command writes its output to `out` and returns the process exit code.
// Errors from the core are left to run_command, which maps them to exit codes.
int cmd_verify(const RunConfig& c, std::ostream& out, const std::vector<std::string>& suites = {});
int cmd_spectrum(const RunConfig& c, std::ostream& out);
int cmd_springs(const RunConfig& c, std::ostream& out);
int cmd_geometry(const RunConfig& c, std::ostream& out);
int cmd_prep(const RunConfig& c, std::ostream& out);
int cmd_bo(const RunConfig& c, std::ostream& out);

// Dispatches by name, catches errors and reports them on `err` as JSON.
int run_command(const std::string& name, const RunConfig& c, std::ostream& out, std::ostream& err,
                const std::vector<std::string>& suites = {});

SuiteOptions suite_options(const RunConfig& c);

}  // namespace rhoqes::app
