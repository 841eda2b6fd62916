#include <doctest.h>

#include "helpers.hpp"
#include "urysohn/errors.hpp"
#include "urysohn/katetov.hpp"
#include "urysohn/oracle.hpp"

using namespace urysohn;
using namespace urysohn::katetov;
using testing::line;
using testing::q;
using testing::uniform;

TEST_CASE("katetov_violation on small spaces") {
  const auto two = uniform(2, 1);
  CHECK(is_katetov(two, on_all_points({0, 1})));
  auto v = katetov_violation(two, on_all_points({0, 0}));
  REQUIRE(v.has_value());
  CHECK(v->rule == "triangle");
  CHECK(is_katetov(uniform(3, 1), on_all_points({q("1/2"), q("1/2"), q("1/2")})));
  CHECK(katetov_violation(two, on_all_points({0, 2}))->rule == "lipschitz");

  CHECK_THROWS_AS(katetov_violation(two, KatetovFunction{{}, {}}), DomainError);
  CHECK_THROWS_AS(katetov_violation(two, KatetovFunction{{0, 5}, {1, 1}}), DomainError);
  CHECK_THROWS_AS(katetov_violation(two, KatetovFunction{{0, 1}, {1}}), DomainError);
  CHECK_THROWS_AS(katetov_violation(two, on_all_points({-1, 1})), DomainError);
}

TEST_CASE("point functions are rows of the metric") {
  CHECK(point_function(uniform(2, 1), 0).values == std::vector<Rational>{0, 1});
  CHECK(point_function(line({0, 1, 2}), 1).values == std::vector<Rational>{1, 0, 1});
  const auto l = line({0, 3, 7, 8});
  for (std::size_t x = 0; x < l.size(); ++x) CHECK(point_function(l, x).at(x) == 0);
}

TEST_CASE("kappa_extend examples") {
  const auto l = line({0, 1, 2});
  const auto f = on_all_points({1, 1, 2});
  CHECK(kappa_extend(l, f) == f);
  CHECK(kappa_extend(uniform(2, 1), KatetovFunction{{0}, {2}}).values == std::vector<Rational>{2, 3});
  // (1, 1) on two points at distance 3 is not Katetov and is rejected.
  CHECK_THROWS_AS(kappa_extend(line({0, 1, 3}), KatetovFunction{{0, 2}, {1, 1}}), PreconditionError);
  const auto g = kappa_extend(line({0, 1, 3}), KatetovFunction{{0, 2}, {1, 2}});
  CHECK(g.values == std::vector<Rational>{1, 2, 2});
}

TEST_CASE("sup_distance examples") {
  const auto f = on_all_points({2, 3});
  CHECK(sup_distance(f, f) == 0);
  CHECK(sup_distance(f, on_all_points({2, 2})) == 1);
  const auto l = line({0, 2, 5, 6});
  for (std::size_t x = 0; x < 4; ++x) {
    for (std::size_t y = 0; y < 4; ++y) CHECK(sup_distance(point_function(l, x), point_function(l, y)) == l(x, y));
  }
}

TEST_CASE("adjoin merges duplicates and realizes requests") {
  const auto l = line({0, 1, 3});
  const KatetovFunction h = point_function(l, 1);
  const auto merged = adjoin(l, std::vector{h});
  CHECK(merged.after == l);
  CHECK(merged.adjoined.front().merged);
  CHECK(merged.adjoined.front().point == 1);

  const auto two = uniform(2, 1);
  const auto step = adjoin(two, std::vector{on_all_points({2, 3})});
  REQUIRE(step.after.size() == 3);
  CHECK(step.after(2, 0) == 2);
  CHECK(step.after(2, 1) == 3);

  const auto f = on_all_points({1, 1});
  const auto g = on_all_points({q("1/2"), q("3/2")});
  const auto both = adjoin(two, std::vector{f, g});
  CHECK(both.after(2, 3) == sup_distance(f, g));
  CHECK(metric::is_isometric_embedding(both.before, both.after, both.embedding));
}

TEST_CASE("one_point_extension embeds K") {
  const auto x = line({0, 1, 5});
  const auto k2 = uniform(2, 1);
  const std::vector<std::size_t> subset{0};
  const std::vector<std::size_t> phi{2};
  auto ext = one_point_extension(x, k2, subset, phi);
  CHECK(metric::is_isometric_embedding(k2, ext.step.after, ext.k_embedding));
  const std::size_t p = ext.k_embedding[1];
  CHECK(ext.step.after(p, 2) == 1);
  CHECK(ext.step.after(p, 0) == 6);

  const auto tri = uniform(3, 1);
  const auto host = uniform(2, 1);
  auto ext3 = one_point_extension(host, tri, std::vector<std::size_t>{0, 1}, std::vector<std::size_t>{1, 0});
  CHECK(metric::is_isometric_embedding(tri, ext3.step.after, ext3.k_embedding));

  // Distances (1, 2) to a pair at distance 3 are fine (equality); (1, 1) is
  // not a metric, so such a K is rejected before any extension.
  CHECK_NOTHROW(testing::space({{0, 3, 1}, {3, 0, 2}, {1, 2, 0}}));
  CHECK_THROWS_AS(testing::space({{0, 3, 1}, {3, 0, 1}, {1, 1, 0}}), DomainError);
}

TEST_CASE("urysohn_approx on a single point") {
  const auto seed = uniform(1, 0);
  CHECK(urysohn_approx(seed, 0, Full{default_grid(seed)}).empty());
  const auto steps = urysohn_approx(seed, 1, Full{Grid{q("1/2"), 1, 1}});
  REQUIRE(steps.size() == 1);
  const auto& after = steps.front().after;
  REQUIRE(after.size() == 3);
  CHECK(after(0, 1) == q("1/2"));
  CHECK(after(0, 2) == 1);
  CHECK(after(1, 2) == q("1/2"));
}

TEST_CASE("every earlier space embeds in every later one") {
  const auto seed = line({0, 1});
  const auto steps = urysohn_approx(seed, 2, Sampled{Grid{q("1/2"), 2, 2}, 6, 3});
  REQUIRE(steps.size() == 2);
  for (const auto& step : steps) CHECK(metric::is_isometric_embedding(step.before, step.after, step.embedding));
  CHECK(steps[0].after == steps[1].before);
}

TEST_CASE("grid_functions agrees with the oracle") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto space = metric::random_metric(1 + seed % 4, 4, std::nullopt, seed);
    const Grid grid{q("1/4"), 2, 3};
    std::vector<std::size_t> points(space.size());
    for (std::size_t i = 0; i < points.size(); ++i) points[i] = i;
    for (const auto& subset : small_subsets(points, 3)) {
      CHECK(grid_functions(space, subset, grid) == oracle::grid_functions(space, subset, grid));
    }
  }
}

TEST_CASE("extension_property_score") {
  const auto one = uniform(1, 0);
  const auto s = extension_property_score(one, 1, q("1/2"), 2);
  CHECK(s.total == 5);
  CHECK(s.realized == 1);
  CHECK(s.value() == q("1/5"));

  const Grid grid{q("1/2"), 1, 2};
  const auto base = line({0, 1});
  const auto steps = urysohn_approx(base, 1, Full{grid});
  const auto& step = steps.front();
  CHECK(extension_property_score(step.after, grid.max_subset, grid.delta, grid.cap, step.embedding).value() == 1);

  // Adding points never lowers the score.
  const auto before = extension_property_score(base, 2, q("1/2"), 1);
  const auto after = extension_property_score(step.after, 2, q("1/2"), 1, step.embedding);
  CHECK(after.total == before.total);
  CHECK(after.realized >= before.realized);
}
