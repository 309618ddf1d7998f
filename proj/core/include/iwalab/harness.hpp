#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "iwalab/check.hpp"
#include "iwalab/config.hpp"

namespace iwalab {

inline constexpr const char* kVersion = "0.1.0";

/// A scenario file: one configuration, the group cases to run it for, the
/// checks and their parameters, plus optional module and ideal inputs.
///
///   {"name": "...", "config": {"p": 5, "f": 1, "M": 2, "N": 1, "seed": 1},
///    "cases": ["gl2", "quat"], "checks": ["maxideals", ...],
///    "params": {"maxideals": {"cutoff": 8}}, "modules": ["m.json"],
///    "ideals": ["j.json"]}
struct Scenario {
  std::string name;
  PrimeConfig cfg;
  std::vector<GroupCase> cases;
  std::vector<std::string> checks;
  nlohmann::json params = nlohmann::json::object();
  std::vector<std::filesystem::path> module_files;
  std::vector<std::filesystem::path> ideal_files;
};

/// Every check name the harness knows, in registry order.
std::vector<std::string> available_checks();

/// Throws Error(ConfigError) naming the offending location.
Scenario parse_scenario(const nlohmann::json& j, const std::filesystem::path& base_dir);
Scenario load_scenario(const std::filesystem::path& file);

struct RunOutcome {
  nlohmann::json report;
  std::vector<CheckResult> results;  // sorted by name
  Status overall = Status::Pass;
};

/// Runs every (check, case) pair. Check failures, including library errors
/// raised inside a check, end up in the report; wall-clock timings go to
/// `timing` only, so reports stay byte-identical across runs.
RunOutcome run_scenario(const Scenario& s, std::ostream* timing = nullptr);

std::string report_text(const nlohmann::json& report);
std::string csv_summary(const RunOutcome& out);
/// 0 when every check passed, 1 otherwise.
int exit_code(const RunOutcome& out);

}  // namespace iwalab
