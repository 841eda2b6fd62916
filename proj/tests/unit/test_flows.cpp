#include <doctest.h>

#include <algorithm>
#include <random>

#include "urysohn/errors.hpp"
#include "urysohn/flows.hpp"
#include "urysohn/oracle.hpp"

using namespace urysohn;
using namespace urysohn::flows;

namespace {

SelfMap map(std::vector<std::uint32_t> images) { return SelfMap(std::move(images)); }

std::vector<SelfMap> random_generators(std::mt19937_64& rng, std::size_t n, std::size_t count) {
  std::uniform_int_distribution<std::uint32_t> image(0, static_cast<std::uint32_t>(n - 1));
  std::vector<SelfMap> gens;
  for (std::size_t g = 0; g < count; ++g) {
    std::vector<std::uint32_t> images(n);
    for (auto& v : images) v = image(rng);
    gens.emplace_back(images);
  }
  return gens;
}

}  // namespace

TEST_CASE("self-map products apply the left factor first") {
  const auto s = map({1, 2, 0});
  const auto t = map({0, 0, 2});
  CHECK(s.then(t) == map({0, 2, 0}));
  CHECK(t.then(s) == map({1, 1, 0}));
  CHECK(s.inverse() == map({2, 0, 1}));
  CHECK(map({2, 2, 2}).rank() == 1);
  CHECK_THROWS_AS(map({0, 3}), DomainError);
}

TEST_CASE("generate_semigroup examples") {
  const std::vector<SelfMap> involution{map({1, 0, 2})};
  CHECK(generate_semigroup(involution).size() == 2);
  const std::vector<SelfMap> constant{map({1, 1, 1})};
  CHECK(generate_semigroup(constant).size() == 1);
  const std::vector<SelfMap> mixed{map({1, 2, 0}), map({0, 0, 0})};
  const auto s = generate_semigroup(mixed);
  CHECK(s.size() == oracle::semigroup_closure(mixed).size());
  CHECK(s.generator_count() == 2);
  CHECK(s.element(0) == mixed[0]);
}

TEST_CASE("idempotent powers") {
  CHECK(find_idempotent(map({1, 2, 0})).idempotent == SelfMap::identity(3));
  CHECK(find_idempotent(map({1, 1, 1})).idempotent == map({1, 1, 1}));
  const auto p = find_idempotent(map({1, 2, 2}));
  CHECK(p.idempotent == map({2, 2, 2}));
  CHECK(p.exponent == 2);
}

TEST_CASE("both idempotent algorithms succeed on random semigroups") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
    const auto s = generate_semigroup(random_generators(rng, n, 1 + trial % 3));
    CHECK(s.element(find_idempotent(s)).is_idempotent());
    CHECK(s.element(find_idempotent_by_descent(s)).is_idempotent());
  }
}

TEST_CASE("minimal left ideals of a group and of constant maps") {
  const auto group = generate_semigroup(std::vector<SelfMap>{map({1, 2, 0}), map({1, 0, 2})});
  const auto ideals = minimal_left_ideals(group);
  REQUIRE(ideals.size() == 1);
  CHECK(ideals.front().size() == 6);
  const auto report = verify_ideal_structure(group, ideals.front());
  CHECK(report.holds());
  CHECK(group.element(*report.right_identity) == SelfMap::identity(3));

  // With "apply s, then t" a product of constants is its right factor, so
  // every constant is a left ideal by itself.
  const auto constants = generate_semigroup(std::vector<SelfMap>{map({0, 0}), map({1, 1})});
  const auto cideals = minimal_left_ideals(constants);
  CHECK(cideals.size() == 2);
  for (const auto& m : cideals) {
    CHECK(m.size() == 1);
    CHECK(verify_ideal_structure(constants, m).holds());
  }
  CHECK_THROWS_AS(verify_ideal_structure(group, std::vector<std::size_t>{0}), PreconditionError);
}

TEST_CASE("ideal structure agrees with the exhaustive oracles") {
  std::mt19937_64 rng(17);
  std::size_t checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
    const auto s = generate_semigroup(random_generators(rng, n, 2));
    if (s.size() > 300) continue;
    const auto ideals = minimal_left_ideals(s);
    CHECK(ideals == oracle::minimal_left_ideals(s));
    for (const auto& m : ideals) {
      CHECK(is_minimal_left_ideal(s, m));
      const auto report = verify_ideal_structure(s, m);
      CHECK(report.holds());
      CHECK(report.equivariant_maps == oracle::equivariant_self_maps(s, m));
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("orbits and transitivity") {
  CHECK(orbits(symmetric_group(3)).size() == 1);
  CHECK(is_minimal(symmetric_group(3)));
  const FiniteAction trivial{2, {SelfMap::identity(2)}};
  CHECK(orbits(trivial).size() == 2);
  CHECK_FALSE(is_minimal(trivial));
  const FiniteAction c2{3, {map({1, 0, 2})}};
  CHECK(orbits(c2) == std::vector<std::vector<std::size_t>>{{0, 1}, {2}});

  for (std::size_t n = 3; n <= 6; ++n) CHECK(is_k_transitive(symmetric_group(n), 3));
  const FiniteAction c3{3, {map({1, 2, 0})}};
  CHECK(is_k_transitive(c3, 1));
  CHECK_FALSE(is_k_transitive(c3, 2));
  CHECK(is_k_transitive(c3, 2) == oracle::is_k_transitive(c3, 2));
  CHECK_THROWS_AS(is_k_transitive(c3, 4), DomainError);
}

TEST_CASE("maximal chains") {
  CHECK(maximal_chains(1).size() == 1);
  const auto chains = maximal_chains(3);
  CHECK(chains.size() == 6);
  for (const auto& c : chains) {
    CHECK(chain_action(SelfMap::identity(3), c) == c);
    CHECK(MaximalChain::from_order(c.order()) == c);
  }
}

TEST_CASE("equivariant maps") {
  const auto s3 = symmetric_group(3);
  const auto to_self = equivariant_maps(s3, s3);
  CHECK(std::find(to_self.maps.begin(), to_self.maps.end(), std::vector<std::size_t>{0, 1, 2}) != to_self.maps.end());

  const auto to_chains = equivariant_maps(s3, chain_space_action(s3));
  CHECK(to_chains.maps.empty());
  CHECK(to_chains.count == 0);
  CHECK(to_chains.exhaustive);

  const FiniteAction point{1, {SelfMap::identity(1)}};
  const FiniteAction target{4, {SelfMap::identity(4)}};
  CHECK(equivariant_maps(point, target).count == 4);
  CHECK(equivariant_maps(point, target).maps == *oracle::equivariant_maps(point, target));
  // A nontrivial target generator constrains the image to its fixed points.
  const FiniteAction swapped{4, {map({1, 0, 2, 3})}};
  CHECK(equivariant_maps(point, swapped).maps == std::vector<std::vector<std::size_t>>{{2}, {3}});

  const FiniteAction two_gens{3, {map({1, 0, 2}), map({0, 1, 2})}};
  CHECK_THROWS_AS(equivariant_maps(s3, FiniteAction{3, {map({1, 0, 2})}}), DomainError);
  CHECK(equivariant_maps(s3, two_gens).maps == *oracle::equivariant_maps(s3, two_gens));
}

TEST_CASE("laminar chain maps") {
  const std::vector<std::uint64_t> flat{0b111, 0b001, 0b010, 0b100};
  const auto m = laminar_chain_map(3, flat, symmetric_group(3));
  CHECK(m.equivariant);
  CHECK(m.chains_nested);
  CHECK(m.chains[1] == std::vector<std::uint64_t>{0b010, 0b111});

  const std::vector<std::uint64_t> tree{0b1111, 0b0011, 0b1100, 0b0001, 0b0010, 0b0100, 0b1000};
  const FiniteAction automorphisms{4, {map({1, 0, 2, 3}), map({2, 3, 0, 1})}};
  const auto t = laminar_chain_map(4, tree, automorphisms);
  CHECK(t.equivariant);
  for (const auto& c : t.chains) CHECK(c.size() == 3);

  const std::vector<std::uint64_t> crossing{0b111, 0b011, 0b110, 0b001, 0b010, 0b100};
  CHECK_THROWS_AS(laminar_chain_map(3, crossing, FiniteAction{3, {SelfMap::identity(3)}}), DomainError);
  CHECK_THROWS_AS(laminar_chain_map(4, tree, symmetric_group(4)), DomainError);
}

TEST_CASE("linear orders flow") {
  std::size_t factorial = 1;
  for (std::size_t n = 1; n <= 5; ++n) {
    factorial *= n;
    const auto flow = linear_orders_flow(n);
    CHECK(flow.orders.size() == factorial);
    CHECK(flow.invariant);
    CHECK(flow.orbit_count == 1);
    CHECK(flow.minimal);
  }
  CHECK(linear_orders_flow(2).orders.size() == 2);
}
