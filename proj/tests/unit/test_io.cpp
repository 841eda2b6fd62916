#include <doctest.h>

#include "helpers.hpp"
#include "urysohn/errors.hpp"
#include "urysohn/io.hpp"

using namespace urysohn;
using urysohn::io::Json;

namespace {

std::string field_of(auto&& read) {
  try {
    read();
  } catch (const FormatError& e) {
    return e.field();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("metric documents round-trip") {
  const auto l = testing::line({0, 1, 4});
  const Json j = io::to_json(l);
  CHECK(j["d"][0][2] == "4");
  CHECK(io::metric_from_json(j) == l);
  CHECK(io::metric_from_json(Json::parse(R"({"n": 2, "d": [[0, "1/2"], ["1/2", 0]]})"))(0, 1) == testing::q("1/2"));
}

TEST_CASE("malformed documents name the field") {
  CHECK(field_of([] { io::metric_from_json(Json::parse(R"({"d": []})")); }) == "n");
  CHECK(field_of([] { io::metric_from_json(Json::parse(R"({"n": 2, "d": [[0, 1], [1]]})")); }) == "d[1]");
  CHECK(field_of([] { io::metric_from_json(Json::parse(R"({"n": 2, "d": [[0, "x"], [1, 0]]})")); }) == "d[0][1]");
  CHECK(field_of([] { io::metric_from_json(Json::parse(R"({"n": 1, "d": [[0]], "labels": [3]})")); }) ==
        "labels[0]");
  CHECK(field_of([] { io::katetov_from_json(Json::parse(R"({"base": [0, 1], "values": ["1"]})")); }) == "values");
  CHECK(field_of([] { io::read_bikatetov_document(Json::parse(R"({"left": {"n": 1, "d": [[0]]}})")); }) ==
        "right");
  CHECK(field_of([] { io::action_from_json(Json::parse(R"({"n": 2, "generators": [[0, 1, 2]]})")); }) ==
        "generators[0]");
  CHECK(field_of([] { io::window_set_from_json(Json::parse(R"({"window": 3, "members": [1, "a"]})")); }) ==
        "members[1]");
  CHECK(field_of([] { io::spec_from_json(Json::parse(R"({"thetas": ["1/2"]})")); }) == "eps");
  CHECK(field_of([] { io::group_from_json(Json::parse(R"({"table": [[0], [-1]]})")); }) == "table[1][0]");
  CHECK(field_of([] { io::staircase_from_json(Json::parse(R"({"n": 1, "cells": [[0]]})")); }) == "cells[0]");
}

TEST_CASE("invalid metrics are domain errors") {
  CHECK_THROWS_AS(io::metric_from_json(Json::parse(R"({"n": 3, "d": [[0,1,3],[1,0,1],[3,1,0]]})")), DomainError);
}

TEST_CASE("other documents round-trip") {
  const katetov::KatetovFunction f{{0, 2}, {testing::q("1/2"), 1}};
  CHECK(io::katetov_from_json(io::to_json(f)) == f);

  const flows::FiniteAction action{3, {flows::SelfMap({1, 2, 0})}};
  const auto back = io::action_from_json(io::to_json(action));
  CHECK(back.n == 3);
  CHECK(back.generators == action.generators);

  const auto set = syndetic::make_window_set(5, {3, -2, 3});
  CHECK(io::window_set_from_json(io::to_json(set)) == set);

  const syndetic::BohrSpec spec{{Rational(1, 3)}, Rational(1, 2)};
  CHECK(io::spec_from_json(io::to_json(spec)) == spec);

  const roelcke::StaircaseRelation rel = roelcke::diagonal_staircase(2);
  CHECK(io::staircase_from_json(io::to_json(rel)) == rel);
}
