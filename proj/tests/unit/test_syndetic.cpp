#include <doctest.h>

#include <numeric>
#include <random>

#include "urysohn/errors.hpp"
#include "urysohn/oracle.hpp"
#include "urysohn/syndetic.hpp"

using namespace urysohn;
using namespace urysohn::syndetic;

namespace {

IntegerWindowSet multiples(std::int64_t step, std::int64_t offset, std::int64_t window) {
  std::vector<std::int64_t> members;
  for (std::int64_t x = -window; x <= window; ++x) {
    if (((x - offset) % step + step) % step == 0) members.push_back(x);
  }
  return make_window_set(window, members);
}

}  // namespace

TEST_CASE("gap reports") {
  const auto evens = multiples(2, 0, 20);
  const auto r = is_syndetic(evens);
  CHECK(r.syndetic);
  CHECK(r.max_gap == 2);

  std::vector<std::int64_t> squares;
  for (std::int64_t k = 0; k * k <= 400; ++k) squares.push_back(k * k);
  const auto sq = is_syndetic(make_window_set(400, squares));
  CHECK(sq.max_gap == 39);
  CHECK(sq.widest == std::pair<std::int64_t, std::int64_t>{361, 400});
  CHECK(sq.growing_gaps);

  CHECK(is_syndetic(full_window(10)).max_gap == 1);
  CHECK_FALSE(is_syndetic(make_window_set(10, {})).syndetic);
  CHECK_FALSE(is_syndetic(make_window_set(10, {3})).syndetic);
  CHECK_THROWS_AS(make_window_set(5, {6}), DomainError);
  CHECK_THROWS_AS(make_window_set(-1, {}), DomainError);
}

TEST_CASE("difference and triple sums") {
  const auto evens = multiples(2, 0, 30);
  const auto d = difference_set(evens);
  CHECK(d.reliable == 15);
  for (std::int64_t x = -15; x <= 15; ++x) CHECK(d.set.contains(x) == (x % 2 == 0));

  const auto zero = make_window_set(9, {0});
  CHECK(difference_set(zero).set.members == std::vector<std::int64_t>{0});
  CHECK(triple_sum(zero).set.members == std::vector<std::int64_t>{0});
  CHECK(triple_sum(zero).reliable == 3);

  auto mixed = multiples(3, 0, 40);
  mixed.members.push_back(1);
  mixed = make_window_set(40, mixed.members);
  CHECK(difference_set(mixed).set == oracle::difference_set(mixed));
  CHECK(triple_sum(mixed).set == oracle::triple_sum(mixed));
}

TEST_CASE("window sums agree with the loops on random sets") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const std::int64_t window = 5 + trial * 3;
    std::bernoulli_distribution keep(0.3);
    std::vector<std::int64_t> members;
    for (std::int64_t x = -window; x <= window; ++x) {
      if (keep(rng)) members.push_back(x);
    }
    const auto s = make_window_set(window, members);
    CHECK(difference_set(s).set == oracle::difference_set(s));
    CHECK(triple_sum(s).set == oracle::triple_sum(s));
  }
}

TEST_CASE("chord comparisons are exact") {
  // 4 sin^2(pi/6) = 1, 4 sin^2(pi/4) = 2, 4 sin^2(pi/3) = 3, 4 sin^2(pi/2) = 4.
  CHECK_FALSE(chord_below(1, 6, 1));
  CHECK(chord_below(1, 6, Rational(1000001, 1000000)));
  CHECK_FALSE(chord_below(1, 4, 2));
  CHECK_FALSE(chord_below(1, 3, 3));
  CHECK_FALSE(chord_below(1, 2, 4));
  CHECK(chord_below(0, 5, Rational(1, 1000)));
  // 4 sin^2(pi/5) = (5 - sqrt 5) / 2 ~ 1.381966.
  CHECK(chord_below(1, 5, Rational(1382, 1000)));
  CHECK_FALSE(chord_below(1, 5, Rational(1381, 1000)));
}

TEST_CASE("Bohr sets") {
  const auto evens = bohr_members({{Rational(1, 2)}, 1}, 20);
  CHECK(evens == multiples(2, 0, 20));
  CHECK(bohr_members({{}, Rational(1, 10)}, 7) == full_window(7));
  CHECK(bohr_members({{Rational(1, 3)}, 3}, 12) == full_window(12));
  // The antipode is excluded at eps = 2 by the strict inequality.
  CHECK(bohr_members({{Rational(1, 2)}, 2}, 10) == multiples(2, 0, 10));
  CHECK(bohr_members({{Rational(1, 2)}, Rational(201, 100)}, 10) == full_window(10));
  CHECK_THROWS_AS(validate_spec({{Rational(3, 2)}, 1}), DomainError);
  CHECK_THROWS_AS(validate_spec({{Rational(1, 2)}, 0}), DomainError);

  const BohrSpec spec{{Rational(1, 5), Rational(2, 7)}, Rational(3, 2)};
  const auto b = bohr_members(spec, 200);
  for (std::int64_t n = -200; n <= 165; ++n) CHECK(b.contains(n) == b.contains(n + 35));
  for (std::int64_t n = -200; n <= 200; ++n) {
    if (auto expected = oracle::bohr_member(spec, n)) CHECK(b.contains(n) == *expected);
  }
}

TEST_CASE("triple-sum Bohr checks") {
  const auto evens = multiples(2, 0, 60);
  const BohrSpec half{{Rational(1, 2)}, 1};
  CHECK(check_triple_sum_bohr(evens, half).holds());
  CHECK(check_triple_sum_bohr(full_window(60), {{Rational(1, 7), Rational(5, 12)}, Rational(1, 4)}).holds());

  const auto shifted = multiples(5, 2, 300);
  const auto check = check_triple_sum_bohr(shifted, {{Rational(1, 5)}, Rational(1, 2)});
  CHECK_FALSE(check.holds());
  CHECK(std::find(check.violations.begin(), check.violations.end(), 0) != check.violations.end());
  CHECK(check.difference_misses.empty());
}

TEST_CASE("group tables and Pestov witnesses") {
  const GroupTable trivial{{0}};
  CHECK(pestov_witness(trivial).extremely_amenable);

  const GroupTable z2{{0, 1}, {1, 0}};
  const auto w = pestov_witness(z2);
  CHECK_FALSE(w.extremely_amenable);
  CHECK(w.s == std::vector<std::size_t>{0});
  CHECK(w.f == std::vector<std::size_t>{0, 1});
  CHECK(w.s_s_inverse == std::vector<std::size_t>{0});
  CHECK(w.fs_covers);
  CHECK(w.s_s_inverse_proper);

  const auto s3 = permutation_group_table(3, {{1, 0, 2}, {1, 2, 0}});
  CHECK(s3.size() == 6);
  CHECK(pestov_witness(s3).s_s_inverse_proper);

  const auto groups = small_groups();
  CHECK(groups.size() == 23);
  std::size_t total_order = 0;
  for (const auto& g : groups) {
    CAPTURE(g.name);
    CHECK_NOTHROW(validate_group(g.table));
    total_order += g.table.size();
    const auto pw = pestov_witness(g.table);
    CHECK(pw.fs_covers);
    CHECK(pw.s_s_inverse_proper);
    CHECK(pw.proper_subsets.has_value());
  }
  // Orders 2..12 with 1,1,2,1,2,1,5,2,2,1,5 isomorphism types.
  CHECK(total_order == 2 + 3 + 8 + 5 + 12 + 7 + 40 + 18 + 20 + 11 + 60);

  CHECK_THROWS_AS(validate_group({{0, 1}, {0, 1}}), DomainError);
  CHECK_THROWS_AS(validate_group({{0, 1}}), DomainError);
  CHECK_THROWS_AS(validate_group({{0, 2}, {2, 0}}), DomainError);
}
