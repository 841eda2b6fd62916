#include <doctest.h>

#include "helpers.hpp"
#include "urysohn/errors.hpp"
#include "urysohn/roelcke.hpp"

using namespace urysohn;
using namespace urysohn::roelcke;
using testing::q;
using testing::uniform;

namespace {

metric::Matrix constant(std::size_t rows, std::size_t cols, Rational value) {
  return metric::Matrix(rows, std::vector<Rational>(cols, value));
}

}  // namespace

TEST_CASE("validate_bikatetov") {
  const auto x = uniform(3, q("1/2"));
  CHECK(std::holds_alternative<BiKatetovMatrix>(validate_bikatetov(x, x, x.matrix())));
  const auto y = uniform(2, 1);
  CHECK(std::holds_alternative<BiKatetovMatrix>(validate_bikatetov(x, y, constant(3, 2, 1))));

  const auto half = uniform(2, q("1/2"));
  const auto v = validate_bikatetov(half, half, {{0, q("1/2")}, {1, q("1/2")}});
  REQUIRE(std::holds_alternative<Violation>(v));
  CHECK(std::get<Violation>(v).rule == "column-lipschitz");

  CHECK_THROWS_AS(validate_bikatetov(testing::line({0, 2}), y, constant(2, 2, 1)), DomainError);
  CHECK_THROWS_AS(validate_bikatetov(y, y, constant(2, 2, 2)), DomainError);
  CHECK_THROWS_AS(validate_bikatetov(y, y, constant(2, 3, 1)), ShapeError);
}

TEST_CASE("amalgam") {
  const auto x = uniform(3, q("1/2"));
  const auto same = amalgam(identity_element(x));
  CHECK(same.space == x);
  CHECK(same.left_embedding == same.right_embedding);

  const auto y = uniform(2, 1);
  const auto apart = amalgam(make_bikatetov(x, y, constant(3, 2, 1)));
  CHECK(apart.space.size() == 5);
  CHECK(apart.space(apart.left_embedding[0], apart.right_embedding[1]) == 1);

  const auto point = uniform(1, 0);
  CHECK(amalgam(make_bikatetov(point, point, {{q("1/3")}})).space.size() == 2);
  CHECK(amalgam(make_bikatetov(point, point, {{0}})).space.size() == 1);
}

TEST_CASE("compose examples") {
  const auto x = uniform(2, 1);
  const auto half = make_bikatetov(x, x, constant(2, 2, q("1/2")));
  CHECK(compose(half, half).matrix() == constant(2, 2, 1));
  CHECK(compose(identity_element(x), half) == half);
  CHECK(compose(half, identity_element(x)) == half);
  CHECK(compose(identity_element(x), identity_element(x)).matrix() == x.matrix());
}

TEST_CASE("graph elements") {
  const auto x = uniform(2, 1);
  CHECK(graph_element(x, std::vector<std::size_t>{0, 1}).matrix() == x.matrix());
  const auto swap = graph_element(x, std::vector<std::size_t>{1, 0});
  CHECK(swap.matrix() == metric::Matrix{{1, 0}, {0, 1}});

  const auto tri = uniform(3, q("1/2"));
  const std::vector<std::size_t> g{1, 2, 0};
  const std::vector<std::size_t> h{1, 0, 2};
  std::vector<std::size_t> hg(3);
  for (std::size_t i = 0; i < 3; ++i) hg[i] = h[g[i]];
  CHECK(compose(graph_element(tri, g), graph_element(tri, h)) == graph_element(tri, hg));
  CHECK_THROWS(graph_element(testing::line({0, 1, 3}), std::vector<std::size_t>{1, 0, 2}));
}

TEST_CASE("subset idempotents") {
  const auto x = uniform(2, 1);
  CHECK(idempotent_from_subset(x, std::vector<std::size_t>{0, 1}).matrix() == x.matrix());
  const auto p = idempotent_from_subset(x, std::vector<std::size_t>{0});
  CHECK(p.matrix() == metric::Matrix{{0, 1}, {1, 1}});
  CHECK(is_idempotent(p));

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 1 + seed % 5;
    const auto space = metric::random_metric(n, 4, Rational(1, 2), seed);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<std::size_t> a;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) a.push_back(i);
      }
      const auto pa = idempotent_from_subset(space, a);
      CHECK(is_idempotent(pa));
      CHECK(subset_from_idempotent(pa) == a);
    }
  }
}

TEST_CASE("pointwise order is monotone under composition") {
  const auto x = uniform(2, 1);
  const auto low = make_bikatetov(x, x, constant(2, 2, q("1/2")));
  const auto high = make_bikatetov(x, x, constant(2, 2, 1));
  CHECK(pointwise_leq(low, high));
  CHECK_FALSE(pointwise_leq(high, low));
  const auto id = identity_element(x);
  CHECK(pointwise_leq(compose(low, id), compose(high, id)));
}

TEST_CASE("grid idempotents include every subset idempotent") {
  const auto x = uniform(2, 1);
  const auto found = enumerate_grid_idempotents(x, q("1/2"));
  std::size_t from_subsets = 0;
  for (const auto& g : found) {
    CHECK(is_idempotent(g.element));
    if (g.subset) {
      ++from_subsets;
      CHECK(idempotent_from_subset(x, *g.subset) == g.element);
    }
  }
  CHECK(from_subsets == 3);
  CHECK_THROWS_AS(enumerate_grid_idempotents(uniform(3, 1), q("1/8"), 1000), DomainError);
}

TEST_CASE("staircases") {
  const auto diag = diagonal_staircase(4);
  CHECK(is_staircase(diag));
  CHECK(staircase_compose(diag, diag) == diag);

  StaircaseRelation l{3, {}};
  for (std::size_t j = 0; j <= 3; ++j) l.cells.emplace_back(0, j);
  for (std::size_t i = 1; i <= 3; ++i) l.cells.emplace_back(i, 3);
  l = normalize(l);
  REQUIRE(is_staircase(l));
  CHECK(staircase_compose(l, diagonal_staircase(3)) == l);
  CHECK(staircase_compose(diagonal_staircase(3), l) == l);

  // The raw composite of these two is not a path; the repaired one is.
  const auto a = normalize({1, {{0, 0}, {0, 1}, {1, 1}}});
  const auto b = normalize({1, {{0, 0}, {1, 0}, {1, 1}}});
  const auto raw = normalize({1, relational_composite(a, b)});
  CHECK_FALSE(is_staircase(raw));
  const auto c = staircase_compose(a, b);
  CHECK(is_staircase(c));
  CHECK(c.cells.front() == std::pair<std::size_t, std::size_t>{0, 0});
  CHECK(c.cells.back() == std::pair<std::size_t, std::size_t>{1, 1});

  CHECK_FALSE(is_staircase(normalize({2, {{0, 0}, {2, 2}}})));
  CHECK_THROWS_AS(staircase_compose(diag, diagonal_staircase(3)), DomainError);
}
