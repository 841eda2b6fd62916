#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "helpers.hpp"
#include "urysohn/errors.hpp"
#include "urysohn/metric.hpp"
#include "urysohn/oracle.hpp"

using namespace urysohn;
using namespace urysohn::metric;
using testing::line;
using testing::q;
using testing::uniform;

TEST_CASE("validate_metric accepts the smallest examples") {
  auto two = validate_metric({{0, 1}, {1, 0}});
  REQUIRE(std::holds_alternative<FiniteMetricSpace>(two));
  CHECK(std::get<FiniteMetricSpace>(two).size() == 2);
  CHECK(line({0, 1, 2, 3}).size() == 4);
  CHECK(line({0, 1, 2, 3})(0, 3) == 3);
}

TEST_CASE("validate_metric reports the first failed axiom") {
  auto tri = validate_metric({{0, 1, 3}, {1, 0, 1}, {3, 1, 0}});
  REQUIRE(std::holds_alternative<Violation>(tri));
  const auto& v = std::get<Violation>(tri);
  CHECK(v.rule == "triangle");
  CHECK(v.witness == std::vector<std::size_t>{0, 1, 2});

  auto diag = std::get<Violation>(validate_metric({{1, 1}, {1, 0}}));
  CHECK(diag.rule == "diagonal");
  CHECK(diag.witness == std::vector<std::size_t>{0});

  auto sym = std::get<Violation>(validate_metric({{0, 1}, {2, 0}}));
  CHECK(sym.rule == "symmetry");

  auto sep = std::get<Violation>(validate_metric({{0, 0}, {0, 0}}));
  CHECK(sep.rule == "separation");
  CHECK(std::holds_alternative<FiniteMetricSpace>(validate_metric({{0, 0}, {0, 0}}, {}, Separation::pseudo)));

  CHECK_THROWS_AS(validate_metric({{0, 1}, {1}}), ShapeError);
  CHECK_THROWS_AS(validate_metric({{0, -1}, {-1, 0}}), DomainError);
  CHECK_THROWS_AS(validate_metric({{0, 1}, {1, 0}}, {"a"}), ShapeError);
  CHECK_THROWS_AS(make_metric({{0, 1, 3}, {1, 0, 1}, {3, 1, 0}}), DomainError);
}

TEST_CASE("restrict keeps induced distances") {
  const auto l = line({0, 1, 2, 3});
  const std::vector<std::size_t> all{0, 1, 2, 3};
  CHECK(restrict(l, all) == l);
  const std::vector<std::size_t> ends{3, 0, 3};
  const auto r = restrict(l, ends);
  CHECK(r.size() == 2);
  CHECK(r(0, 1) == 3);
  const std::vector<std::size_t> pair{0, 1};
  CHECK(restrict(uniform(3, 1), pair) == uniform(2, 1));
}

TEST_CASE("isometric_embeddings enumerates in lexicographic order") {
  CHECK(isometric_embeddings(uniform(1, 1), line({0, 1, 2, 3, 4})).size() == 5);
  CHECK(isometric_embeddings(uniform(3, 1), uniform(3, 1)).size() == 6);
  const auto pair_into_line = isometric_embeddings(uniform(2, 1), line({0, 1, 2}));
  CHECK(pair_into_line == std::vector<Embedding>{{0, 1}, {1, 0}, {1, 2}, {2, 1}});
}

TEST_CASE("back_and_forth on the documented examples") {
  const auto l = line({0, 1, 2, 4});
  CHECK(back_and_forth(l, l) == Embedding{0, 1, 2, 3});
  CHECK_FALSE(back_and_forth(line({0, 1, 2}), uniform(3, 1)).has_value());
  const auto reversed = line({4, 2, 1, 0});
  auto found = back_and_forth(l, reversed);
  REQUIRE(found.has_value());
  CHECK(is_isometric_embedding(l, reversed, *found));
  CHECK(*found == Embedding{3, 2, 1, 0});
}

TEST_CASE("back_and_forth agrees with the brute-force oracle") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const std::size_t n = 1 + seed % 6;
    const auto a = random_metric(n, 2, std::nullopt, seed);
    // Relabel a, or draw an independent space of the same size.
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::rotate(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(seed % n), perm.end());
    Matrix d(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[perm[i]][perm[j]] = a(i, j);
    }
    const auto b = seed % 2 ? make_metric(d) : random_metric(n, 2, std::nullopt, seed + 1000);
    const auto found = back_and_forth(a, b);
    const auto expected = oracle::isometric_embedding(a, b);
    CAPTURE(seed);
    CHECK(found.has_value() == expected.has_value());
    if (found) CHECK(is_isometric_embedding(a, b, *found));
  }
}

TEST_CASE("random_metric stays on its grid and satisfies the axioms") {
  CHECK(random_metric(1, 4, std::nullopt, 3).size() == 1);
  const std::set<Rational> grid{q("1/4"), q("1/2"), q("3/4"), q("1")};
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto two = random_metric(2, 4, Rational(1), seed);
    CHECK(grid.count(two(0, 1)) == 1);
    const auto m = random_metric(6, 8, std::nullopt, seed);
    CHECK(std::holds_alternative<FiniteMetricSpace>(validate_metric(m.matrix())));
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = 0; j < 6; ++j) CHECK((m(i, j) * Rational(8)).is_integer());
    }
  }
  CHECK(random_metric(5, 6, std::nullopt, 9) == random_metric(5, 6, std::nullopt, 9));
}

TEST_CASE("extend_random keeps the base") {
  const auto base = line({0, 2, 5});
  const auto grown = extend_random(base, 3, 4, std::nullopt, 5);
  CHECK(grown.size() == 6);
  CHECK(restrict(grown, std::vector<std::size_t>{0, 1, 2}) == base);
  CHECK(std::holds_alternative<FiniteMetricSpace>(validate_metric(grown.matrix())));
}

TEST_CASE("merge_zero_distances identifies coincident points") {
  auto pseudo = std::get<FiniteMetricSpace>(
      validate_metric({{0, 0, 1}, {0, 0, 1}, {1, 1, 0}}, {}, Separation::pseudo));
  const auto quotient = merge_zero_distances(pseudo);
  CHECK(quotient.space == uniform(2, 1));
  CHECK(quotient.class_of == std::vector<std::size_t>{0, 0, 1});
}
