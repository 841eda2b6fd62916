#include "urysohn/cli/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

namespace urysohn::cli {

namespace {

std::vector<Certificate> sorted(std::vector<Certificate> certificates) {
  std::stable_sort(certificates.begin(), certificates.end(),
                   [](const Certificate& a, const Certificate& b) { return a.property < b.property; });
  return certificates;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Certificate pass_if(bool ok, std::string property, Json witness, std::string bound) {
  return {std::move(property), ok ? "pass" : "fail", std::move(witness), std::move(bound)};
}

int exit_code_for(const std::vector<Certificate>& certificates) {
  return std::any_of(certificates.begin(), certificates.end(), [](const Certificate& c) { return c.verdict == "fail"; })
             ? 1
             : 0;
}

Json to_json(const RunReport& report) {
  Json certificates = Json::array();
  for (const Certificate& c : sorted(report.certificates)) {
    certificates.push_back({{"property", c.property}, {"verdict", c.verdict}, {"witness", c.witness}, {"bound", c.bound}});
  }
  return {{"schema", "1"},
          {"command", report.command},
          {"inputs", report.inputs},
          {"parameters", report.parameters},
          {"result", report.result},
          {"certificates", certificates},
          {"exit_code", report.exit_code}};
}

std::string to_csv(const RunReport& report) {
  std::ostringstream out;
  out << "property,verdict,bound,witness\n";
  for (const Certificate& c : sorted(report.certificates)) {
    out << csv_field(c.property) << ',' << csv_field(c.verdict) << ',' << csv_field(c.bound) << ','
        << csv_field(c.witness.dump()) << '\n';
  }
  return out.str();
}

Json file_digest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path.string(), "cannot open file");
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  return {{"path", path.string()}, {"bytes", bytes.size()}, {"fnv1a64", hex}};
}

}  // namespace urysohn::cli
