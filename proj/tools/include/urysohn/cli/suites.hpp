#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "urysohn/cli/report.hpp"

namespace urysohn::cli {

struct SuiteRun {
  std::vector<Certificate> certificates;
  /// Wall-clock seconds per check group. Kept out of reports so that
  /// reports stay byte-identical between runs.
  std::map<std::string, double> seconds;
};

/// "katetov", "roelcke", "flows", "syndetic" and "all".
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs every check group of the suite with seeds derived from `seed`.
/// Throws std::invalid_argument for an unknown suite.
SuiteRun run_suite(const std::string& name, std::uint64_t seed);

/// Check group names of a suite, in run order.
std::vector<std::string> suite_groups(const std::string& name);

}  // namespace urysohn::cli
