#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "urysohn/io.hpp"

namespace urysohn::cli {

using io::Json;

/// verdict is "pass", "fail" or "report"; only "fail" affects the exit code.
struct Certificate {
  std::string property;
  std::string verdict;
  Json witness = Json::object();
  std::string bound;
};

Certificate pass_if(bool ok, std::string property, Json witness, std::string bound = "");

struct RunReport {
  std::string command;
  Json inputs = Json::array();
  Json parameters = Json::object();
  Json result = Json::object();
  std::vector<Certificate> certificates;
  int exit_code = 0;
};

/// 1 if any certificate failed, 0 otherwise.
int exit_code_for(const std::vector<Certificate>& certificates);

/// Certificates are emitted sorted by property name (stable).
Json to_json(const RunReport& report);
/// One certificate per row: property,verdict,bound,witness.
std::string to_csv(const RunReport& report);

/// {"path", "bytes", "fnv1a64"} for an input file.
Json file_digest(const std::filesystem::path& path);

}  // namespace urysohn::cli
