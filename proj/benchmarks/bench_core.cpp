#include <benchmark/benchmark.h>

#include <random>

#include "urysohn/flows.hpp"
#include "urysohn/katetov.hpp"
#include "urysohn/metric.hpp"
#include "urysohn/roelcke.hpp"
#include "urysohn/syndetic.hpp"

using namespace urysohn;

static void BM_Compose(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = metric::random_metric(n, 8, Rational(1), 1);
  const auto p = roelcke::idempotent_from_subset(x, std::vector<std::size_t>{0});
  const auto id = roelcke::identity_element(x);
  for (auto _ : state) benchmark::DoNotOptimize(roelcke::compose(p, id));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Compose)->RangeMultiplier(2)->Range(4, 32)->Complexity(benchmark::oNCubed);

static void BM_KappaExtend(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = metric::random_metric(n, 8, std::nullopt, 2);
  const auto f = katetov::point_function(metric::restrict(x, std::vector<std::size_t>{0, 1, 2}), 0);
  for (auto _ : state) benchmark::DoNotOptimize(katetov::kappa_extend(x, f));
}
BENCHMARK(BM_KappaExtend)->Arg(8)->Arg(32)->Arg(128);

static void BM_UrysohnStep(benchmark::State& state) {
  const auto seed = metric::random_metric(static_cast<std::size_t>(state.range(0)), 4, std::nullopt, 3);
  const katetov::Full full{katetov::Grid{Rational(1, 4), 1, 2}};
  for (auto _ : state) benchmark::DoNotOptimize(katetov::urysohn_approx(seed, 1, full));
}
BENCHMARK(BM_UrysohnStep)->DenseRange(2, 4);

static void BM_GenerateSemigroup(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  std::mt19937_64 rng(4);
  std::vector<flows::SelfMap> gens;
  for (int g = 0; g < 3; ++g) {
    std::vector<std::uint32_t> images(n);
    for (auto& v : images) v = static_cast<std::uint32_t>(rng() % n);
    gens.emplace_back(images);
  }
  gens.push_back(flows::symmetric_group(n).generators[1]);
  std::size_t size = 0;
  for (auto _ : state) {
    const auto s = flows::generate_semigroup(gens);
    size = s.size();
    benchmark::DoNotOptimize(size);
  }
  state.counters["elements"] = static_cast<double>(size);
}
BENCHMARK(BM_GenerateSemigroup)->DenseRange(3, 6);

static void BM_TripleSum(benchmark::State& state) {
  const std::int64_t window = state.range(0);
  std::mt19937_64 rng(5);
  std::vector<std::int64_t> members;
  for (std::int64_t x = -window; x <= window; x += 1 + static_cast<std::int64_t>(rng() % 12)) members.push_back(x);
  const auto s = syndetic::make_window_set(window, members);
  for (auto _ : state) benchmark::DoNotOptimize(syndetic::triple_sum(s));
}
BENCHMARK(BM_TripleSum)->Arg(1000)->Arg(10000);

static void BM_BohrMembers(benchmark::State& state) {
  const syndetic::BohrSpec spec{{Rational(1, 7), Rational(5, 11)}, Rational(3, 4)};
  for (auto _ : state) benchmark::DoNotOptimize(syndetic::bohr_members(spec, state.range(0)));
}
BENCHMARK(BM_BohrMembers)->Arg(10000);
BENCHMARK_MAIN();
