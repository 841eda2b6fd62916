#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "urysohn/flows.hpp"
#include "urysohn/katetov.hpp"
#include "urysohn/metric.hpp"
#include "urysohn/roelcke.hpp"
#include "urysohn/syndetic.hpp"

// JSON documents for every input and output type. Readers throw FormatError
// naming the offending field; they check structure only, and leave the
// mathematical validation to the module that consumes the value.
namespace urysohn::io {

using Json = nlohmann::json;

Json to_json(const Rational& value);
Rational rational_from_json(const Json& j, const std::string& field);

Json to_json(const Violation& violation);

struct MetricDocument {
  metric::Matrix d;
  std::vector<std::string> labels;
};

MetricDocument read_metric_document(const Json& j, const std::string& field = "");
Json to_json(const metric::FiniteMetricSpace& space);
/// Reads and validates; throws DomainError describing the first violation.
metric::FiniteMetricSpace metric_from_json(const Json& j, const std::string& field = "");

Json to_json(const katetov::KatetovFunction& f);
katetov::KatetovFunction katetov_from_json(const Json& j);

Json to_json(const katetov::ExtensionStep& step);

struct BiKatetovDocument {
  metric::FiniteMetricSpace left;
  metric::FiniteMetricSpace right;
  metric::Matrix p;
};

BiKatetovDocument read_bikatetov_document(const Json& j);
Json to_json(const roelcke::BiKatetovMatrix& m);

Json to_json(const roelcke::StaircaseRelation& rel);
roelcke::StaircaseRelation staircase_from_json(const Json& j);

Json to_json(const flows::SelfMap& map);
flows::SelfMap selfmap_from_json(const Json& j, const std::string& field);

Json to_json(const flows::FiniteAction& action);
flows::FiniteAction action_from_json(const Json& j);

Json to_json(const syndetic::IntegerWindowSet& set);
syndetic::IntegerWindowSet window_set_from_json(const Json& j);

Json to_json(const syndetic::BohrSpec& spec);
syndetic::BohrSpec spec_from_json(const Json& j);

Json group_to_json(const syndetic::GroupTable& table);
syndetic::GroupTable group_from_json(const Json& j);

/// Parses a JSON file; throws FormatError on I/O or syntax errors.
Json read_file(const std::filesystem::path& path);
/// Writes two-space indented JSON followed by a newline.
void write_file(const std::filesystem::path& path, const Json& j);

}  // namespace urysohn::io
