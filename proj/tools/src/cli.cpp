#include "urysohn/cli/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include "urysohn/cli/suites.hpp"
#include "urysohn/flows.hpp"
#include "urysohn/katetov.hpp"
#include "urysohn/metric.hpp"
#include "urysohn/roelcke.hpp"
#include "urysohn/syndetic.hpp"

namespace urysohn::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string in;
  std::string in2;
  std::string out;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::size_t n = 3;
  std::int64_t denom = 4;
  std::string delta = "1/4";
  std::string cap;
  std::size_t max_subset = 3;
  std::size_t iters = 1;
  std::int64_t window = 100;
  double budget = 0;
  std::string target = "chains";
  std::string subset;
  std::size_t samples = 0;
  std::string timings;
  std::string suite;
};

Rational parse_rational(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + ": expected a rational \"p/q\", got \"" + text + "\"");
  }
}

std::vector<std::size_t> parse_indices(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw UsageError("--subset: expected comma-separated indices, got \"" + text + "\"");
    }
  }
  return out;
}

Json load(const std::string& path, const char* flag, RunReport& report) {
  if (path.empty()) throw UsageError(std::string(flag) + " is required");
  Json j = io::read_file(path);
  report.inputs.push_back(file_digest(path));
  return j;
}

std::vector<flows::SelfMap> load_generators(const Json& j) {
  const Json& gens = j.is_object() && j.contains("generators") ? j["generators"] : j;
  if (!gens.is_array()) throw FormatError("generators", "expected an array of self-maps");
  std::vector<flows::SelfMap> out;
  for (std::size_t i = 0; i < gens.size(); ++i) out.push_back(io::selfmap_from_json(gens[i], "generators[" + std::to_string(i) + "]"));
  if (out.empty()) throw FormatError("generators", "expected at least one self-map");
  for (const auto& g : out) {
    if (g.size() != out.front().size()) throw FormatError("generators", "self-maps of different degree");
  }
  return out;
}

Json selfmaps_json(const flows::TransformationSemigroup& s, const std::vector<std::size_t>& indices) {
  Json out = Json::array();
  for (std::size_t i : indices) out.push_back(io::to_json(s.element(i)));
  return out;
}

// ---------------------------------------------------------------- metric

void metric_validate(const Options& o, RunReport& r) {
  const auto doc = io::read_metric_document(load(o.in, "--in", r));
  try {
    auto result = metric::validate_metric(doc.d, doc.labels);
    if (auto* v = std::get_if<Violation>(&result)) {
      r.result = {{"valid", false}, {"violation", io::to_json(*v)}, {"message", metric::describe(*v)}};
      r.certificates.push_back({"metric.valid", "fail", io::to_json(*v), "exact"});
    } else {
      const auto& space = std::get<metric::FiniteMetricSpace>(result);
      r.result = {{"valid", true}, {"n", space.size()}, {"diameter", space.diameter().str()}};
      r.certificates.push_back({"metric.valid", "pass", Json::object(), "exact"});
    }
  } catch (const DomainError& e) {
    r.result = {{"valid", false}, {"message", e.what()}};
    r.certificates.push_back({"metric.valid", "fail", {{"rule", "non-negative"}, {"detail", e.what()}}, "exact"});
  }
}

void metric_random(const Options& o, RunReport& r) {
  std::optional<Rational> cap;
  if (!o.cap.empty()) cap = parse_rational(o.cap, "--cap");
  r.parameters = {{"n", o.n}, {"denom", o.denom}, {"cap", o.cap.empty() ? Json() : Json(o.cap)}, {"seed", o.seed}};
  const auto space = metric::random_metric(o.n, o.denom, cap, o.seed);
  r.result = {{"space", io::to_json(space)}};
  const bool valid = std::holds_alternative<metric::FiniteMetricSpace>(metric::validate_metric(space.matrix()));
  r.certificates.push_back(pass_if(valid, "metric.valid", Json::object(), "exact"));
}

void metric_isometry(const Options& o, RunReport& r) {
  const auto a = io::metric_from_json(load(o.in, "--in", r));
  const auto b = io::metric_from_json(load(o.in2, "--in2", r));
  const auto found = metric::back_and_forth(a, b);
  r.result = {{"isometric", found.has_value()}, {"map", found ? Json(*found) : Json()}};
  const bool verified = !found || metric::is_isometric_embedding(a, b, *found);
  r.certificates.push_back(pass_if(verified, "metric.isometry_search", {{"found", found.has_value()}},
                                   "exhaustive back-and-forth"));
}

// ---------------------------------------------------------------- katetov

std::optional<Rational> optional_cap(const Options& o) {
  if (o.cap.empty()) return std::nullopt;
  return parse_rational(o.cap, "--cap");
}

void katetov_check(const Options& o, RunReport& r) {
  const auto space = io::metric_from_json(load(o.in, "--in", r));
  const auto f = io::katetov_from_json(load(o.in2, "--in2", r));
  const auto violation = katetov::katetov_violation(space, f);
  r.result = {{"katetov", !violation}, {"violation", violation ? io::to_json(*violation) : Json()}};
  r.certificates.push_back(pass_if(!violation, "katetov.function", violation ? io::to_json(*violation) : Json::object(),
                                   "exact"));
}

void katetov_extend(const Options& o, RunReport& r) {
  const auto space = io::metric_from_json(load(o.in, "--in", r));
  const auto f = io::katetov_from_json(load(o.in2, "--in2", r));
  const auto g = katetov::kappa_extend(space, f);
  bool agrees = true;
  for (std::size_t y : f.base) agrees = agrees && g.at(y) == f.at(y);
  r.result = {{"extension", io::to_json(g)}};
  r.certificates.push_back(pass_if(agrees, "katetov.extends", Json::object(), "exact"));
  r.certificates.push_back(pass_if(katetov::is_katetov(space, g), "katetov.is_katetov", Json::object(), "exact"));
}

void katetov_adjoin(const Options& o, RunReport& r) {
  const auto space = io::metric_from_json(load(o.in, "--in", r));
  const Json j = load(o.in2, "--in2", r);
  const Json& list = j.is_object() && j.contains("requests") ? j["requests"] : j;
  std::vector<katetov::KatetovFunction> requests;
  if (list.is_array()) {
    for (const auto& item : list) requests.push_back(io::katetov_from_json(item));
  } else {
    requests.push_back(io::katetov_from_json(list));
  }
  const auto step = katetov::adjoin(space, requests);
  r.result = io::to_json(step);
  r.certificates.push_back(pass_if(metric::is_isometric_embedding(step.before, step.after, step.embedding),
                                   "katetov.embedding_isometric", Json::object(), "exact"));
}

void katetov_urysohn(const Options& o, RunReport& r) {
  const auto seed_space = io::metric_from_json(load(o.in, "--in", r));
  katetov::Grid grid = katetov::default_grid(seed_space);
  grid.delta = parse_rational(o.delta, "--delta");
  if (auto cap = optional_cap(o)) grid.cap = *cap;
  grid.max_subset = o.max_subset;
  katetov::Strategy strategy = katetov::Full{grid};
  if (o.samples > 0) strategy = katetov::Sampled{grid, o.samples, o.seed};
  r.parameters = {{"iters", o.iters},      {"delta", grid.delta.str()}, {"cap", grid.cap.str()},
                  {"max_subset", o.max_subset}, {"samples", o.samples}, {"seed", o.seed}};
  const auto steps = katetov::urysohn_approx(seed_space, o.iters, strategy);
  Json sizes = Json::array({seed_space.size()});
  bool isometric = true;
  for (const auto& step : steps) {
    sizes.push_back(step.after.size());
    isometric = isometric && metric::is_isometric_embedding(step.before, step.after, step.embedding);
  }
  r.result = {{"sizes", sizes}, {"final", io::to_json(steps.empty() ? seed_space : steps.back().after)}};
  r.certificates.push_back(pass_if(isometric, "katetov.steps_isometric", {{"steps", steps.size()}}, "exact"));
  if (!steps.empty() && steps.back().before.size() <= 12) {
    const auto& last = steps.back();
    const auto score =
        katetov::extension_property_score(last.after, grid.max_subset, grid.delta, grid.cap, last.embedding);
    r.certificates.push_back({"katetov.last_step_score", "report",
                              {{"realized", score.realized}, {"total", score.total}, {"value", score.value().str()}},
                              "requests over the previous space"});
  }
}

void katetov_score(const Options& o, RunReport& r) {
  const auto space = io::metric_from_json(load(o.in, "--in", r));
  const Rational delta = parse_rational(o.delta, "--delta");
  const Rational cap = optional_cap(o).value_or(katetov::default_grid(space).cap);
  r.parameters = {{"delta", delta.str()}, {"cap", cap.str()}, {"max_subset", o.max_subset}};
  const auto score = katetov::extension_property_score(space, o.max_subset, delta, cap);
  r.result = {{"realized", score.realized}, {"total", score.total}, {"value", score.value().str()}};
  r.certificates.push_back({"katetov.extension_score", "report", r.result, "exhaustive over grid requests"});
}

// ---------------------------------------------------------------- roelcke

void roelcke_validate(const Options& o, RunReport& r) {
  const auto doc = io::read_bikatetov_document(load(o.in, "--in", r));
  auto result = roelcke::validate_bikatetov(doc.left, doc.right, doc.p);
  if (auto* v = std::get_if<Violation>(&result)) {
    r.result = {{"valid", false}, {"violation", io::to_json(*v)}};
    r.certificates.push_back({"roelcke.bikatetov", "fail", io::to_json(*v), "exact"});
  } else {
    r.result = {{"valid", true}};
    r.certificates.push_back({"roelcke.bikatetov", "pass", Json::object(), "exact"});
  }
}

roelcke::BiKatetovMatrix load_bikatetov(const std::string& path, const char* flag, RunReport& r) {
  const auto doc = io::read_bikatetov_document(load(path, flag, r));
  return roelcke::make_bikatetov(doc.left, doc.right, doc.p);
}

void roelcke_compose(const Options& o, RunReport& r) {
  const auto p = load_bikatetov(o.in, "--in", r);
  const auto q = load_bikatetov(o.in2, "--in2", r);
  const auto pq = roelcke::compose(p, q);
  r.result = io::to_json(pq);
  const bool valid =
      std::holds_alternative<roelcke::BiKatetovMatrix>(roelcke::validate_bikatetov(pq.left(), pq.right(), pq.matrix()));
  r.certificates.push_back(pass_if(valid, "roelcke.composition_valid", Json::object(), "exact"));
}

void roelcke_idempotent(const Options& o, RunReport& r) {
  const auto space = io::metric_from_json(load(o.in, "--in", r));
  if (!o.subset.empty()) {
    auto subset = parse_indices(o.subset);
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    const auto p = roelcke::idempotent_from_subset(space, subset);
    r.parameters = {{"subset", subset}};
    r.result = io::to_json(p);
    r.certificates.push_back(pass_if(roelcke::is_idempotent(p), "roelcke.idempotent", Json::object(), "exact"));
    r.certificates.push_back(pass_if(roelcke::subset_from_idempotent(p) == subset, "roelcke.subset_round_trip",
                                     Json::object(), "exact"));
    return;
  }
  const Rational delta = parse_rational(o.delta, "--delta");
  r.parameters = {{"delta", delta.str()}};
  Json list = Json::array();
  std::size_t from_subsets = 0;
  for (const auto& g : roelcke::enumerate_grid_idempotents(space, delta)) {
    list.push_back({{"p", io::to_json(g.element)["p"]}, {"subset", g.subset ? Json(*g.subset) : Json()}});
    from_subsets += g.subset ? 1 : 0;
  }
  r.result = {{"idempotents", list}};
  r.certificates.push_back({"roelcke.grid_idempotents", "report",
                            {{"count", list.size()}, {"from_subsets", from_subsets}}, "exhaustive over the grid"});
}

void roelcke_staircase(const Options& o, RunReport& r) {
  const auto a = io::staircase_from_json(load(o.in, "--in", r));
  const auto b = io::staircase_from_json(load(o.in2, "--in2", r));
  if (!roelcke::is_staircase(a)) throw DomainError("--in is not a staircase");
  if (!roelcke::is_staircase(b)) throw DomainError("--in2 is not a staircase");
  const auto c = roelcke::staircase_compose(a, b);
  const auto raw = roelcke::normalize({a.n, roelcke::relational_composite(a, b)});
  r.result = {{"composite", io::to_json(c)}, {"raw", io::to_json(raw)}, {"raw_is_staircase", roelcke::is_staircase(raw)}};
  r.certificates.push_back(pass_if(roelcke::is_staircase(c), "roelcke.staircase", Json::object(), "exact"));
}

// ---------------------------------------------------------------- flows

void flows_semigroup(const Options& o, RunReport& r) {
  const auto gens = load_generators(load(o.in, "--in", r));
  const auto s = flows::generate_semigroup(gens);
  const std::size_t power = flows::find_idempotent(s);
  const std::size_t descent = flows::find_idempotent_by_descent(s);
  r.result = {{"degree", s.degree()},
              {"size", s.size()},
              {"power_idempotent", io::to_json(s.element(power))},
              {"descent_idempotent", io::to_json(s.element(descent))}};
  r.certificates.push_back(pass_if(s.element(power).is_idempotent() && s.element(descent).is_idempotent(),
                                   "flows.idempotent", Json::object(), "exact"));
}

void flows_ideals(const Options& o, RunReport& r) {
  const auto gens = load_generators(load(o.in, "--in", r));
  const auto s = flows::generate_semigroup(gens);
  Json ideals = Json::array();
  bool holds = true;
  for (const auto& m : flows::minimal_left_ideals(s)) {
    const auto report = flows::verify_ideal_structure(s, m);
    holds = holds && report.holds();
    ideals.push_back({{"elements", selfmaps_json(s, m)},
                      {"right_identity", report.right_identity ? io::to_json(s.element(*report.right_identity)) : Json()},
                      {"equivariant_maps", report.equivariant_maps.size()},
                      {"holds", report.holds()}});
  }
  r.result = {{"size", s.size()}, {"ideals", ideals}};
  r.certificates.push_back(pass_if(holds, "flows.ideal_structure", {{"ideals", ideals.size()}}, "exhaustive"));
}

void flows_chains(const Options& o, RunReport& r) {
  if (o.n == 0 || o.n > 8) throw UsageError("--n: chains are listed for 1 <= n <= 8");
  r.parameters = {{"n", o.n}};
  const auto chains = flows::maximal_chains(o.n);
  Json orders = Json::array();
  for (const auto& c : chains) orders.push_back(c.order());
  std::size_t factorial = 1;
  for (std::size_t k = 2; k <= o.n; ++k) factorial *= k;
  r.result = {{"count", chains.size()}, {"orders", orders}};
  r.certificates.push_back(pass_if(chains.size() == factorial, "flows.chain_count", {{"count", chains.size()}}, "exact"));
}

void flows_equivariant(const Options& o, RunReport& r) {
  const auto source = io::action_from_json(load(o.in, "--in", r));
  flows::validate_action(source);
  flows::FiniteAction target;
  if (!o.in2.empty()) {
    target = io::action_from_json(load(o.in2, "--in2", r));
  } else if (o.target == "chains") {
    target = flows::chain_space_action(source);
  } else if (o.target == "points") {
    target = source;
  } else {
    throw UsageError("--target: expected chains or points (or give --in2)");
  }
  r.parameters = {{"target", o.in2.empty() ? o.target : "file"}};
  const auto search = flows::equivariant_maps(source, target);
  r.result = {{"maps", search.maps}, {"count", search.count}, {"exhaustive", search.exhaustive}};
  r.certificates.push_back(pass_if(search.exhaustive, "flows.equivariant_search",
                                   {{"exhaustive", search.exhaustive}, {"count", search.count}},
                                   "stabilizer-fixed targets over all orbit representatives"));
}

void flows_orders(const Options& o, RunReport& r) {
  r.parameters = {{"n", o.n}};
  const auto flow = flows::linear_orders_flow(o.n);
  r.result = {{"orders", flow.orders.size()},
              {"invariant", flow.invariant},
              {"orbits", flow.orbit_count},
              {"minimal", flow.minimal},
              {"full_space_orbit_sizes", flow.full_space_orbit_sizes}};
  r.certificates.push_back(pass_if(flow.minimal, "flows.linear_orders_minimal", Json::object(), "exact"));
}

// ---------------------------------------------------------------- syndetic

void syndetic_gaps(const Options& o, RunReport& r) {
  const auto s = io::window_set_from_json(load(o.in, "--in", r));
  const auto gaps = syndetic::is_syndetic(s);
  r.result = {{"syndetic", gaps.syndetic},
              {"max_gap", gaps.max_gap},
              {"widest", gaps.widest ? Json({gaps.widest->first, gaps.widest->second}) : Json()},
              {"growing_gaps", gaps.growing_gaps},
              {"window", s.window}};
  r.certificates.push_back({"syndetic.gaps", "report", r.result, "window [-N, N]"});
}

void syndetic_bohr(const Options& o, RunReport& r) {
  const auto spec = io::spec_from_json(load(o.in, "--in", r));
  r.parameters = {{"window", o.window}};
  const auto members = syndetic::bohr_members(spec, o.window);
  r.result = io::to_json(members);
  r.certificates.push_back({"syndetic.bohr", "report", {{"size", members.members.size()}}, "exact"});
}

void syndetic_triple(const Options& o, RunReport& r) {
  const auto s = io::window_set_from_json(load(o.in, "--in", r));
  const auto spec = io::spec_from_json(load(o.in2, "--in2", r));
  const auto check = syndetic::check_triple_sum_bohr(s, spec);
  r.result = {{"window", check.window},
              {"syndetic", check.syndetic},
              {"triple_reliable", check.triple_reliable},
              {"difference_reliable", check.difference_reliable},
              {"bohr_size", check.bohr_size},
              {"violations", check.violations},
              {"difference_misses", check.difference_misses}};
  r.certificates.push_back(pass_if(check.holds(), "syndetic.triple_sum_bohr", {{"violations", check.violations.size()}},
                                   "[-N/3, N/3]"));
  r.certificates.push_back({"syndetic.difference_set_bohr", "report",
                            {{"misses", check.difference_misses.size()}}, "[-N/2, N/2]"});
}

void syndetic_pestov(const Options& o, RunReport& r) {
  const auto table = io::group_from_json(load(o.in, "--in", r));
  const auto w = syndetic::pestov_witness(table);
  r.result = {{"extremely_amenable", w.extremely_amenable},
              {"s", w.s},
              {"f", w.f},
              {"s_s_inverse", w.s_s_inverse},
              {"proper_subsets", w.proper_subsets ? Json(*w.proper_subsets) : Json()}};
  const bool ok = w.extremely_amenable ? table.size() == 1 : (w.fs_covers && w.s_s_inverse_proper);
  r.certificates.push_back(pass_if(ok, "syndetic.pestov", {{"fs_covers", w.fs_covers}, {"proper", w.s_s_inverse_proper}},
                                   table.size() <= 12 ? "exhaustive over subsets" : "S = {e}"));
}

// ---------------------------------------------------------------- suite

void suite(const Options& o, RunReport& r) {
  if (!is_suite(o.suite)) throw UsageError("unknown suite: " + o.suite);
  r.command = "suite " + o.suite;
  r.parameters = {{"seed", o.seed}};
  const auto start = std::chrono::steady_clock::now();
  auto run = run_suite(o.suite, o.seed);
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.result = {{"suite", o.suite}, {"groups", suite_groups(o.suite)}};
  r.certificates = std::move(run.certificates);
  if (o.budget > 0 && total > o.budget) {
    r.certificates.push_back({"suite.budget", "fail", {{"budget_seconds", o.budget}}, "wall clock"});
  }
  if (!o.timings.empty()) {
    Json t = Json::object();
    for (const auto& [name, seconds] : run.seconds) t[name] = seconds;
    t["total"] = total;
    io::write_file(o.timings, t);
  }
}

}  // namespace

Outcome run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite experiments with Katetov extensions, Roelcke compactifications, flows and Bohr sets", "urysohn"};
  app.require_subcommand(1);

  using Handler = void (*)(const Options&, RunReport&);
  Handler handler = nullptr;
  std::string command;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& description, Handler h) {
    CLI::App* sub = parent->add_subcommand(name, description);
    sub->add_option("--out", o.out, "Report path (default: stdout)");
    sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--seed", o.seed, "Random seed");
    sub->callback([&, h, parent, name] {
      handler = h;
      command = parent->get_name() + " " + name;
    });
    return sub;
  };
  auto group = [&](const std::string& name, const std::string& description) {
    CLI::App* g = app.add_subcommand(name, description);
    g->require_subcommand(1);
    return g;
  };
  auto in = [&](CLI::App* sub) { sub->add_option("--in", o.in, "Input file")->required(); };
  auto in2 = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--in2", o.in2, "Second input file");
    if (required) opt->required();
  };

  CLI::App* metric_group = group("metric", "Finite metric spaces");
  in(leaf(metric_group, "validate", "Check the metric axioms", metric_validate));
  {
    auto* sub = leaf(metric_group, "random", "Seeded random metric on a grid", metric_random);
    sub->add_option("--n", o.n, "Number of points");
    sub->add_option("--denom", o.denom, "Grid denominator");
    sub->add_option("--cap", o.cap, "Largest distance");
  }
  {
    auto* sub = leaf(metric_group, "isometry", "Back-and-forth isometry search", metric_isometry);
    in(sub);
    in2(sub);
  }

  CLI::App* katetov_group = group("katetov", "Katetov functions and one-point extensions");
  for (auto [name, description, h] : std::vector<std::tuple<std::string, std::string, Handler>>{
           {"check", "Check a Katetov function", katetov_check},
           {"extend", "Kappa extension to the whole space", katetov_extend},
           {"adjoin", "Adjoin points realizing Katetov functions", katetov_adjoin}}) {
    auto* sub = leaf(katetov_group, name, description, h);
    in(sub);
    in2(sub);
  }
  {
    auto* sub = leaf(katetov_group, "urysohn", "Iterated grid extension", katetov_urysohn);
    in(sub);
    sub->add_option("--iters", o.iters, "Number of steps");
    sub->add_option("--delta", o.delta, "Grid step");
    sub->add_option("--cap", o.cap, "Largest grid value");
    sub->add_option("--max-subset", o.max_subset, "Largest request support");
    sub->add_option("--samples", o.samples, "Sampled requests per step (0: all)");
  }
  {
    auto* sub = leaf(katetov_group, "score", "Extension-property score", katetov_score);
    in(sub);
    sub->add_option("--delta", o.delta, "Grid step");
    sub->add_option("--cap", o.cap, "Largest grid value");
    sub->add_option("--max-subset", o.max_subset, "Largest request support");
  }

  CLI::App* roelcke_group = group("roelcke", "Bi-Katetov matrices and staircases");
  in(leaf(roelcke_group, "validate", "Check a bi-Katetov matrix", roelcke_validate));
  {
    auto* sub = leaf(roelcke_group, "compose", "Capped min-plus composition", roelcke_compose);
    in(sub);
    in2(sub);
  }
  {
    auto* sub = leaf(roelcke_group, "idempotent", "Subset idempotent or grid idempotent enumeration", roelcke_idempotent);
    in(sub);
    sub->add_option("--subset", o.subset, "Comma-separated subset A");
    sub->add_option("--delta", o.delta, "Grid step for enumeration");
  }
  {
    auto* sub = leaf(roelcke_group, "staircase", "Compose two staircase relations", roelcke_staircase);
    in(sub);
    in2(sub);
  }

  CLI::App* flows_group = group("flows", "Finite semigroups and group actions");
  in(leaf(flows_group, "semigroup", "Generate a semigroup and find idempotents", flows_semigroup));
  in(leaf(flows_group, "ideals", "Minimal left ideals and their structure", flows_ideals));
  leaf(flows_group, "chains", "Maximal chains of subsets", flows_chains)->add_option("--n", o.n, "Number of points");
  {
    auto* sub = leaf(flows_group, "equivariant", "Exhaustive equivariant-map search", flows_equivariant);
    in(sub);
    in2(sub, false);
    sub->add_option("--target", o.target, "chains or points");
  }
  leaf(flows_group, "orders", "Linear orders flow", flows_orders)->add_option("--n", o.n, "Number of points");

  CLI::App* syndetic_group = group("syndetic", "Syndetic sets, Bohr sets and Pestov witnesses");
  in(leaf(syndetic_group, "gaps", "Gap report", syndetic_gaps));
  {
    auto* sub = leaf(syndetic_group, "bohr", "Bohr set in a window", syndetic_bohr);
    in(sub);
    sub->add_option("--window", o.window, "Window bound N");
  }
  {
    auto* sub = leaf(syndetic_group, "triple", "S - S + S against a Bohr set", syndetic_triple);
    in(sub);
    in2(sub);
  }
  in(leaf(syndetic_group, "pestov", "Non-extreme-amenability witness", syndetic_pestov));

  {
    CLI::App* sub = app.add_subcommand("suite", "Run an acceptance suite");
    sub->add_option("name", o.suite, "katetov, roelcke, flows, syndetic or all")->required();
    sub->add_option("--seed", o.seed, "Random seed");
    sub->add_option("--budget", o.budget, "Time budget in seconds (0: none)");
    sub->add_option("--timings", o.timings, "Write per-group timings to this file");
    sub->add_option("--out", o.out, "Report path (default: stdout)");
    sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    sub->callback([&] {
      handler = suite;
      command = "suite";
    });
  }

  std::vector<const char*> argv{"urysohn"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return {0, std::nullopt};
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return {0, std::nullopt};
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return {2, std::nullopt};
  }

  RunReport report;
  report.command = command;
  try {
    handler(o, report);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return {2, std::nullopt};
  } catch (const FormatError& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return {2, std::nullopt};
  } catch (const std::invalid_argument& e) {
    err << "error: invalid input: " << e.what() << "\n";
    return {2, std::nullopt};
  } catch (const std::domain_error& e) {
    err << "error: invalid input: " << e.what() << "\n";
    return {2, std::nullopt};
  } catch (const PreconditionError& e) {
    err << "error: precondition failed: " << e.what() << "\n";
    return {2, std::nullopt};
  } catch (const GenerationError& e) {
    err << "error: " << e.what() << "\n";
    return {2, std::nullopt};
  }
  report.exit_code = exit_code_for(report.certificates);

  const std::string body = o.format == "csv" ? to_csv(report) : to_json(report).dump(2) + "\n";
  std::size_t failed = 0;
  for (const auto& c : report.certificates) failed += c.verdict == "fail" ? 1 : 0;
  std::ostringstream summary;
  summary << report.command << ": " << (report.exit_code == 0 ? "ok" : "violation") << " ("
          << report.certificates.size() << " certificates, " << failed << " failed)";
  if (!o.out.empty()) {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << o.out << "\n";
      return {2, std::nullopt};
    }
    file << body;
    out << summary.str() << "\n";
  } else {
    out << body;
    err << summary.str() << "\n";
  }
  return {report.exit_code, std::move(report)};
}

}  // namespace urysohn::cli
