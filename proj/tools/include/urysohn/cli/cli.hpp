#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "urysohn/cli/report.hpp"

namespace urysohn::cli {

struct Outcome {
  int exit_code = 0;
  /// Absent for usage errors.
  std::optional<RunReport> report;
};

/// Runs one command line (without the program name). The report goes to
/// --out when given, otherwise to `out`; the one-line summary goes to `out`
/// when --out is given and to `err` otherwise. Usage errors print to `err`
/// and exit with 2.
Outcome run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace urysohn::cli
