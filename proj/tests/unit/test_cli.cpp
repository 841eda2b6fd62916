#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "urysohn/cli/cli.hpp"
#include "urysohn/cli/suites.hpp"
#include "urysohn/io.hpp"
#include "urysohn/katetov.hpp"
#include "urysohn/metric.hpp"

using urysohn::io::Json;
namespace fs = std::filesystem;

namespace {

const fs::path data_dir = URYSOHN_TEST_DATA;

struct Run {
  int exit_code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const auto outcome = urysohn::cli::run(args, out, err);
  return {outcome.exit_code, out.str(), err.str()};
}

std::string data(const char* name) { return (data_dir / name).string(); }

fs::path scratch(const char* name) {
  const fs::path dir = fs::temp_directory_path() / "urysohn_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& path, const Json& j) { urysohn::io::write_file(path, j); }

}  // namespace

TEST_CASE("metric validate reports the violated triple") {
  const auto r = run({"metric", "validate", "--in", data("tri_bad.json")});
  CHECK(r.exit_code == 1);
  const Json report = Json::parse(r.out);
  CHECK(report["schema"] == "1");
  CHECK(report["exit_code"] == 1);
  CHECK(report["certificates"][0]["verdict"] == "fail");
  CHECK(report["certificates"][0]["witness"]["witness"] == Json::array({0, 1, 2}));
  CHECK(r.err.find("metric validate") != std::string::npos);
}

TEST_CASE("equivariant points-to-chains search is empty and exhaustive") {
  const auto r = run({"flows", "equivariant", "--in", data("s3_points.json"), "--target", "chains"});
  CHECK(r.exit_code == 0);
  const Json report = Json::parse(r.out);
  CHECK(report["result"]["maps"] == Json::array());
  CHECK(report["certificates"][0]["witness"]["exhaustive"] == true);
}

TEST_CASE("composing identities gives the metric") {
  const auto r = run({"roelcke", "compose", "--in", data("identity2.json"), "--in2", data("identity2.json")});
  CHECK(r.exit_code == 0);
  const Json report = Json::parse(r.out);
  CHECK(report["result"]["p"] == report["result"]["left"]["d"]);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"suite", "bogus"}).exit_code == 2);
  CHECK(run({}).exit_code == 2);
  CHECK(run({"metric"}).exit_code == 2);
  CHECK(run({"metric", "frobnicate"}).exit_code == 2);
  CHECK(run({"metric", "validate"}).exit_code == 2);
  CHECK(run({"metric", "validate", "--in", data("tri_bad.json"), "--bogus"}).exit_code == 2);
  CHECK(run({"metric", "validate", "--in", data("missing.json")}).exit_code == 2);
  CHECK(run({"katetov", "score", "--in", data("tri_bad.json"), "--delta", "x"}).exit_code == 2);
  CHECK(run({"metric", "validate", "--in", data("tri_bad.json"), "--format", "xml"}).exit_code == 2);
  CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("malformed input names the field") {
  const auto path = scratch("malformed.json");
  write(path, Json::parse(R"({"n": 2, "d": [[0, 1], [1, "oops"]]})"));
  const auto r = run({"metric", "validate", "--in", path.string()});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("d[1][1]") != std::string::npos);

  write(path, Json::parse(R"({"n": 2, "generators": [[0, 1], [1]]})"));
  const auto g = run({"flows", "semigroup", "--in", path.string()});
  CHECK(g.exit_code == 2);
  CHECK(g.err.find("generators[1]") != std::string::npos);
}

TEST_CASE("reports round-trip through --out") {
  const auto space_path = scratch("space.json");
  const auto request_path = scratch("request.json");
  const auto report_path = scratch("report.json");
  const auto space = urysohn::metric::random_metric(4, 4, std::nullopt, 2);
  write(space_path, urysohn::io::to_json(space));
  write(request_path, urysohn::io::to_json(urysohn::katetov::point_function(space, 0)));

  const auto r = run({"katetov", "adjoin", "--in", space_path.string(), "--in2", request_path.string(), "--out",
                      report_path.string()});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("katetov adjoin") != std::string::npos);
  const Json report = urysohn::io::read_file(report_path);
  CHECK(report["inputs"].size() == 2);
  CHECK(report["inputs"][0]["fnv1a64"].get<std::string>().size() == 16);
  const auto before = urysohn::io::metric_from_json(report["result"]["before"]);
  const auto after = urysohn::io::metric_from_json(report["result"]["after"]);
  const auto embedding = report["result"]["embedding"].get<std::vector<std::size_t>>();
  CHECK(before == space);
  CHECK(urysohn::metric::is_isometric_embedding(before, after, embedding) ==
        (report["certificates"][0]["verdict"] == "pass"));

  const auto bad = run({"metric", "validate", "--in", data("tri_bad.json"), "--out", report_path.string()});
  const Json failing = urysohn::io::read_file(report_path);
  const auto d = urysohn::io::read_metric_document(urysohn::io::read_file(data("tri_bad.json"))).d;
  const auto w = failing["certificates"][0]["witness"]["witness"].get<std::vector<std::size_t>>();
  CHECK(d[w[0]][w[2]] > d[w[0]][w[1]] + d[w[1]][w[2]]);
  CHECK(failing["exit_code"] == bad.exit_code);
}

TEST_CASE("csv output has one row per certificate") {
  const auto r = run({"flows", "orders", "--n", "3", "--format", "csv"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("property,verdict,bound,witness\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 2);
}

TEST_CASE("identical arguments give identical reports") {
  const std::vector<std::string> args{"metric", "random", "--n", "5", "--denom", "6", "--seed", "42"};
  CHECK(run(args).out == run(args).out);
  CHECK(run(args).out != run({"metric", "random", "--n", "5", "--denom", "6", "--seed", "43"}).out);
}

TEST_CASE("subcommands run on small inputs") {
  const auto space_path = scratch("line.json");
  write(space_path, Json::parse(R"({"n": 2, "d": [[0, "1/2"], ["1/2", 0]]})"));
  CHECK(run({"metric", "isometry", "--in", space_path.string(), "--in2", space_path.string()}).exit_code == 0);
  CHECK(run({"katetov", "score", "--in", space_path.string(), "--delta", "1/2", "--cap", "1"}).exit_code == 0);
  CHECK(run({"katetov", "urysohn", "--in", space_path.string(), "--iters", "1", "--delta", "1/2", "--cap", "1"})
            .exit_code == 0);
  CHECK(run({"roelcke", "idempotent", "--in", space_path.string(), "--subset", "0"}).exit_code == 0);
  CHECK(run({"roelcke", "idempotent", "--in", space_path.string(), "--delta", "1/2"}).exit_code == 0);
  CHECK(run({"flows", "chains", "--n", "4"}).exit_code == 0);
  CHECK(run({"flows", "ideals", "--in", data("s3_points.json")}).exit_code == 0);

  const auto set_path = scratch("set.json");
  const auto spec_path = scratch("spec.json");
  write(set_path, Json::parse(R"({"window": 30, "members": [-30, -20, -10, 0, 10, 20, 30]})"));
  write(spec_path, Json::parse(R"({"thetas": ["1/10"], "eps": "1/2"})"));
  CHECK(run({"syndetic", "gaps", "--in", set_path.string()}).exit_code == 0);
  CHECK(run({"syndetic", "bohr", "--in", spec_path.string(), "--window", "40"}).exit_code == 0);
  CHECK(run({"syndetic", "triple", "--in", set_path.string(), "--in2", spec_path.string()}).exit_code == 0);

  const auto group_path = scratch("group.json");
  write(group_path, Json::parse(R"({"table": [[0, 1], [1, 0]]})"));
  CHECK(run({"syndetic", "pestov", "--in", group_path.string()}).exit_code == 0);
  write(group_path, Json::parse(R"({"table": [[0, 1], [0, 1]]})"));
  CHECK(run({"syndetic", "pestov", "--in", group_path.string()}).exit_code == 2);
}

TEST_CASE("suite names") {
  CHECK(urysohn::cli::is_suite("all"));
  CHECK_FALSE(urysohn::cli::is_suite("bogus"));
  CHECK_THROWS_AS(urysohn::cli::run_suite("bogus", 0), std::invalid_argument);
}
