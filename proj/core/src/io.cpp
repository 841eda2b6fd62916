#include "urysohn/io.hpp"

#include <fstream>
#include <limits>

namespace urysohn::io {

namespace {

const Json& require(const Json& j, const char* key, const std::string& field) {
  if (!j.is_object()) throw FormatError(field, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(field.empty() ? key : field + "." + key, "missing field");
  return *it;
}

std::string child(const std::string& field, const char* key) { return field.empty() ? key : field + "." + key; }

std::string child(const std::string& field, std::size_t index) { return field + "[" + std::to_string(index) + "]"; }

std::int64_t integer(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) throw FormatError(field, "expected an integer");
  return j.get<std::int64_t>();
}

std::size_t index_value(const Json& j, const std::string& field) {
  std::int64_t v = integer(j, field);
  if (v < 0) throw FormatError(field, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

const Json& array(const Json& j, const std::string& field) {
  if (!j.is_array()) throw FormatError(field, "expected an array");
  return j;
}

std::vector<std::size_t> index_array(const Json& j, const std::string& field) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < array(j, field).size(); ++i) out.push_back(index_value(j[i], child(field, i)));
  return out;
}

Json matrix_to_json(const metric::Matrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const Rational& v : row) r.push_back(v.str());
    rows.push_back(std::move(r));
  }
  return rows;
}

metric::Matrix matrix_from_json(const Json& j, const std::string& field) {
  metric::Matrix m;
  for (std::size_t i = 0; i < array(j, field).size(); ++i) {
    const std::string row_field = child(field, i);
    std::vector<Rational> row;
    for (std::size_t k = 0; k < array(j[i], row_field).size(); ++k) {
      row.push_back(rational_from_json(j[i][k], child(row_field, k)));
    }
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace

Json to_json(const Rational& value) { return value.str(); }

Rational rational_from_json(const Json& j, const std::string& field) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  } catch (const std::exception& e) {
    throw FormatError(field, e.what());
  }
  throw FormatError(field, "expected a rational string \"p/q\"");
}

Json to_json(const Violation& violation) {
  return {{"rule", violation.rule}, {"witness", violation.witness}, {"detail", violation.detail}};
}

MetricDocument read_metric_document(const Json& j, const std::string& field) {
  const std::string& base = field;
  MetricDocument doc;
  const std::size_t n = index_value(require(j, "n", base), child(base, "n"));
  doc.d = matrix_from_json(require(j, "d", base), child(base, "d"));
  if (doc.d.size() != n) throw FormatError(child(base, "d"), "expected " + std::to_string(n) + " rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (doc.d[i].size() != n) throw FormatError(child(child(base, "d"), i), "expected " + std::to_string(n) + " entries");
  }
  if (j.contains("labels")) {
    const std::string lf = child(base, "labels");
    const Json& labels = array(j["labels"], lf);
    if (labels.size() != n) throw FormatError(lf, "expected " + std::to_string(n) + " labels");
    for (std::size_t i = 0; i < n; ++i) {
      if (!labels[i].is_string()) throw FormatError(child(lf, i), "expected a string");
      doc.labels.push_back(labels[i].get<std::string>());
    }
  }
  return doc;
}

Json to_json(const metric::FiniteMetricSpace& space) {
  Json j = {{"n", space.size()}, {"d", matrix_to_json(space.matrix())}};
  if (!space.labels().empty()) j["labels"] = space.labels();
  return j;
}

metric::FiniteMetricSpace metric_from_json(const Json& j, const std::string& field) {
  MetricDocument doc = read_metric_document(j, field);
  auto result = metric::validate_metric(doc.d, doc.labels);
  if (auto* v = std::get_if<Violation>(&result)) throw DomainError(metric::describe(*v));
  return std::get<metric::FiniteMetricSpace>(std::move(result));
}

Json to_json(const katetov::KatetovFunction& f) {
  Json values = Json::array();
  for (const Rational& v : f.values) values.push_back(v.str());
  return {{"base", f.base}, {"values", values}};
}

katetov::KatetovFunction katetov_from_json(const Json& j) {
  katetov::KatetovFunction f;
  f.base = index_array(require(j, "base", ""), "base");
  const Json& values = array(require(j, "values", ""), "values");
  for (std::size_t i = 0; i < values.size(); ++i) f.values.push_back(rational_from_json(values[i], child("values", i)));
  if (f.values.size() != f.base.size()) throw FormatError("values", "expected one value per base point");
  return f;
}

Json to_json(const katetov::ExtensionStep& step) {
  Json adjoined = Json::array();
  for (const auto& a : step.adjoined) {
    adjoined.push_back({{"function", to_json(a.function)}, {"point", a.point}, {"merged", a.merged}});
  }
  return {{"before", to_json(step.before)},
          {"after", to_json(step.after)},
          {"embedding", step.embedding},
          {"adjoined", adjoined}};
}

BiKatetovDocument read_bikatetov_document(const Json& j) {
  BiKatetovDocument doc;
  doc.left = metric_from_json(require(j, "left", ""), "left");
  doc.right = metric_from_json(require(j, "right", ""), "right");
  doc.p = matrix_from_json(require(j, "p", ""), "p");
  if (doc.p.size() != doc.left.size()) throw FormatError("p", "expected one row per point of left");
  for (std::size_t i = 0; i < doc.p.size(); ++i) {
    if (doc.p[i].size() != doc.right.size()) throw FormatError(child("p", i), "expected one entry per point of right");
  }
  return doc;
}

Json to_json(const roelcke::BiKatetovMatrix& m) {
  return {{"left", to_json(m.left())}, {"right", to_json(m.right())}, {"p", matrix_to_json(m.matrix())}};
}

Json to_json(const roelcke::StaircaseRelation& rel) {
  Json cells = Json::array();
  for (const auto& [i, k] : rel.cells) cells.push_back({i, k});
  return {{"n", rel.n}, {"cells", cells}};
}

roelcke::StaircaseRelation staircase_from_json(const Json& j) {
  roelcke::StaircaseRelation rel;
  rel.n = index_value(require(j, "n", ""), "n");
  const Json& cells = array(require(j, "cells", ""), "cells");
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const std::string f = child("cells", c);
    if (!cells[c].is_array() || cells[c].size() != 2) throw FormatError(f, "expected a pair [i, j]");
    rel.cells.emplace_back(index_value(cells[c][0], child(f, std::size_t{0})), index_value(cells[c][1], child(f, std::size_t{1})));
  }
  return rel;
}

Json to_json(const flows::SelfMap& map) { return map.images(); }

flows::SelfMap selfmap_from_json(const Json& j, const std::string& field) {
  std::vector<std::uint32_t> images;
  for (std::size_t i = 0; i < array(j, field).size(); ++i) {
    std::size_t v = index_value(j[i], child(field, i));
    if (v > std::numeric_limits<std::uint32_t>::max()) throw FormatError(child(field, i), "image too large");
    images.push_back(static_cast<std::uint32_t>(v));
  }
  try {
    return flows::SelfMap(std::move(images));
  } catch (const DomainError& e) {
    throw FormatError(field, e.what());
  }
}

Json to_json(const flows::FiniteAction& action) {
  Json gens = Json::array();
  for (const auto& g : action.generators) gens.push_back(to_json(g));
  return {{"n", action.n}, {"generators", gens}};
}

flows::FiniteAction action_from_json(const Json& j) {
  flows::FiniteAction action;
  action.n = index_value(require(j, "n", ""), "n");
  const Json& gens = array(require(j, "generators", ""), "generators");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    action.generators.push_back(selfmap_from_json(gens[i], child("generators", i)));
    if (action.generators.back().size() != action.n) {
      throw FormatError(child("generators", i), "expected " + std::to_string(action.n) + " images");
    }
  }
  return action;
}

Json to_json(const syndetic::IntegerWindowSet& set) { return {{"window", set.window}, {"members", set.members}}; }

syndetic::IntegerWindowSet window_set_from_json(const Json& j) {
  const std::int64_t window = integer(require(j, "window", ""), "window");
  const Json& members = array(require(j, "members", ""), "members");
  std::vector<std::int64_t> values;
  for (std::size_t i = 0; i < members.size(); ++i) values.push_back(integer(members[i], child("members", i)));
  try {
    return syndetic::make_window_set(window, std::move(values));
  } catch (const DomainError& e) {
    throw FormatError("members", e.what());
  }
}

Json to_json(const syndetic::BohrSpec& spec) {
  Json thetas = Json::array();
  for (const Rational& t : spec.thetas) thetas.push_back(t.str());
  return {{"thetas", thetas}, {"eps", spec.eps.str()}};
}

syndetic::BohrSpec spec_from_json(const Json& j) {
  syndetic::BohrSpec spec;
  const Json& thetas = array(require(j, "thetas", ""), "thetas");
  for (std::size_t i = 0; i < thetas.size(); ++i) spec.thetas.push_back(rational_from_json(thetas[i], child("thetas", i)));
  spec.eps = rational_from_json(require(j, "eps", ""), "eps");
  return spec;
}

Json group_to_json(const syndetic::GroupTable& table) { return {{"table", table}}; }

syndetic::GroupTable group_from_json(const Json& j) {
  syndetic::GroupTable table;
  const Json& rows = array(require(j, "table", ""), "table");
  for (std::size_t i = 0; i < rows.size(); ++i) table.push_back(index_array(rows[i], child("table", i)));
  return table;
}

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path.string(), "cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path.string(), e.what());
  }
}

void write_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError(path.string(), "cannot write file");
  out << j.dump(2) << '\n';
}

}  // namespace urysohn::io
