// Runs `suite all` twice through the CLI and prints one verdict line per
// acceptance criterion. Exits nonzero if any criterion fails.
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "urysohn/cli/cli.hpp"
#include "urysohn/io.hpp"

namespace fs = std::filesystem;
using urysohn::io::Json;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> certificates;
  std::vector<std::string> timed_groups;
  double limit_seconds;  // 0: no runtime bound
};

const std::vector<Criterion> criteria = {
    {1, "Katetov exactness",
     {"katetov.kappa_extends", "katetov.kappa_sup_isometry", "katetov.one_point_extension"},
     {"katetov.kappa", "katetov.one_point"},
     60},
    {2, "Kuratowski identity", {"katetov.kuratowski"}, {}, 0},
    {3, "extension-property closure", {"katetov.extension_closure"}, {"katetov.closure"}, 120},
    {4, "back-and-forth vs oracle", {"katetov.back_and_forth_oracle"}, {}, 0},
    {5, "Roelcke semigroup laws",
     {"roelcke.associative", "roelcke.identity_unit", "roelcke.composition_valid", "roelcke.monotone",
      "roelcke.graph_law", "roelcke.subset_idempotents"},
     {},
     0},
    {6, "Ellis at finite scale", {"flows.idempotents", "flows.ideal_structure", "flows.ideal_oracle"}, {"flows.ellis"},
     300},
    {7, "3-transitivity obstruction", {"flows.three_transitive_obstruction", "flows.laminar_chain_map"},
     {"flows.obstruction", "flows.laminar"}, 120},
    {8, "linear-orders flow", {"flows.linear_orders"}, {}, 0},
    {9, "syndetic/Bohr evidence", {"syndetic.triple_sum_bohr", "syndetic.pestov"},
     {"syndetic.triple_bohr", "syndetic.pestov"}, 120},
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct SuiteRun {
  int exit_code = 2;
  std::string bytes;
  Json timings;
};

SuiteRun run_suite(const fs::path& dir, const std::string& tag) {
  const fs::path report = dir / ("report_" + tag + ".json");
  const fs::path timings = dir / ("timings_" + tag + ".json");
  std::ostringstream out, err;
  const auto outcome = urysohn::cli::run(
      {"suite", "all", "--seed", "0", "--out", report.string(), "--timings", timings.string()}, out, err);
  SuiteRun run;
  run.exit_code = outcome.exit_code;
  if (fs::exists(report)) run.bytes = slurp(report);
  if (fs::exists(timings)) run.timings = urysohn::io::read_file(timings);
  if (!err.str().empty()) std::cerr << err.str();
  return run;
}

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path dir = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "urysohn_acceptance";
  fs::create_directories(dir);

  const SuiteRun first = run_suite(dir, "a");
  const SuiteRun second = run_suite(dir, "b");
  if (first.bytes.empty()) {
    std::cout << "FAIL suite all produced no report (exit " << first.exit_code << ")\n";
    return 1;
  }

  std::map<std::string, Json> certificates;
  const Json report = Json::parse(first.bytes);
  for (const auto& c : report["certificates"]) certificates[c["property"].get<std::string>()] = c;

  int failed = 0;
  for (const auto& criterion : criteria) {
    std::vector<std::string> problems;
    for (const auto& name : criterion.certificates) {
      auto it = certificates.find(name);
      if (it == certificates.end()) {
        problems.push_back(name + " missing");
      } else if (it->second["verdict"] != "pass") {
        problems.push_back(name + " failed");
      }
    }
    double elapsed = 0;
    for (const auto& group : criterion.timed_groups) elapsed += first.timings.value(group, 0.0);
    std::string timing;
    if (criterion.limit_seconds > 0) {
      timing = ", " + seconds(elapsed) + " <= " + seconds(criterion.limit_seconds);
      if (elapsed > criterion.limit_seconds) problems.push_back("runtime " + seconds(elapsed) + " over budget");
    }
    const bool pass = problems.empty();
    failed += pass ? 0 : 1;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion.id << " (" << criterion.title << "): ";
    if (pass) {
      std::cout << criterion.certificates.size() << " certificates pass" << timing;
    } else {
      for (std::size_t i = 0; i < problems.size(); ++i) std::cout << (i ? "; " : "") << problems[i];
    }
    std::cout << "\n";
  }

  const bool identical = !second.bytes.empty() && first.bytes == second.bytes;
  failed += identical ? 0 : 1;
  std::cout << (identical ? "PASS" : "FAIL") << " criterion 10 (determinism): " << first.bytes.size() << " bytes, "
            << (identical ? "identical" : "different") << " across two runs\n";

  std::cout << "suite all: " << seconds(first.timings.value("total", 0.0)) << " per run, exit " << first.exit_code
            << "\n";
  return failed == 0 ? 0 : 1;
}
