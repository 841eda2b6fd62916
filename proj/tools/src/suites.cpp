#include "urysohn/cli/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "urysohn/flows.hpp"
#include "urysohn/katetov.hpp"
#include "urysohn/metric.hpp"
#include "urysohn/oracle.hpp"
#include "urysohn/roelcke.hpp"
#include "urysohn/syndetic.hpp"

namespace urysohn::cli {

namespace {

using metric::FiniteMetricSpace;

std::uint64_t mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (a + 1) + 0xbf58476d1ce4e5b9ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1)); }
  std::uint64_t next() { return gen_(); }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[index(i)]);
  }

 private:
  std::mt19937_64 gen_;
};

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

// Up to `limit` elements spread evenly over v.
template <class T>
std::vector<T> spread(const std::vector<T>& v, std::size_t limit) {
  if (v.size() <= limit) return v;
  std::vector<T> out;
  for (std::size_t i = 0; i < limit; ++i) out.push_back(v[i * (v.size() - 1) / (limit - 1)]);
  return out;
}

Json space_summary(const FiniteMetricSpace& space) { return io::to_json(space); }

// ---------------------------------------------------------------- katetov

struct KatetovInstance {
  FiniteMetricSpace space;
  std::uint64_t seed;
};

std::vector<KatetovInstance> katetov_instances(std::uint64_t seed) {
  std::vector<KatetovInstance> out;
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng(mix(seed, 1, i));
    auto n = static_cast<std::size_t>(rng.uniform(1, 6));
    std::int64_t denom = rng.uniform(1, 8);
    std::uint64_t s = rng.next();
    out.push_back({metric::random_metric(n, denom, Rational(1), s), s});
  }
  return out;
}

// Values of each function times a common multiple l of their denominators;
// the scaling is exact, so integer comparisons decide the rational ones.
struct ScaledValues {
  std::size_t width = 0;
  std::vector<std::int64_t> values;
};

std::int64_t common_denominator(const std::vector<katetov::KatetovFunction>& functions, std::int64_t l = 1) {
  for (const auto& f : functions) {
    for (const Rational& v : f.values) l = std::lcm(l, v.den());
  }
  return l;
}

ScaledValues scaled(const std::vector<katetov::KatetovFunction>& functions, std::int64_t l) {
  ScaledValues out;
  out.width = functions.empty() ? 0 : functions.front().values.size();
  for (const auto& f : functions) {
    for (const Rational& v : f.values) {
      const Rational s = v * Rational(l);
      if (!s.is_integer()) throw std::logic_error("scaled: inexact");
      out.values.push_back(s.num());
    }
  }
  return out;
}

std::int64_t max_gap(const ScaledValues& s, std::size_t a, std::size_t b) {
  std::int64_t best = 0;
  for (std::size_t i = 0; i < s.width; ++i) {
    best = std::max(best, std::abs(s.values[a * s.width + i] - s.values[b * s.width + i]));
  }
  return best;
}

std::vector<Certificate> check_kappa(std::uint64_t seed) {
  std::size_t extensions = 0;
  std::size_t sup_pairs = 0;
  Json extend_failure;
  Json sup_failure;
  for (const auto& inst : katetov_instances(seed)) {
    const auto& x = inst.space;
    const auto grid = katetov::default_grid(x);
    const auto all = iota(x.size());
    for (const auto& subset : katetov::small_subsets(all, grid.max_subset)) {
      const auto functions = katetov::grid_functions(x, subset, grid);
      std::vector<katetov::KatetovFunction> lifted;
      for (const auto& f : functions) {
        auto g = katetov::kappa_extend(x, f);
        bool ok = g.base == all && katetov::is_katetov(x, g);
        for (std::size_t y : f.base) ok = ok && g.at(y) == f.at(y);
        ++extensions;
        if (!ok && extend_failure.is_null()) {
          extend_failure = {{"space", space_summary(x)}, {"f", io::to_json(f)}, {"g", io::to_json(g)}};
        }
        lifted.push_back(std::move(g));
      }
      // Every pair of grid functions, compared exactly on a common
      // denominator; sup_distance itself is exercised on a spread sample.
      const std::int64_t l = common_denominator(lifted, common_denominator(functions));
      const auto base_ints = scaled(functions, l);
      const auto lifted_ints = scaled(lifted, l);
      for (std::size_t a = 0; a < functions.size(); ++a) {
        for (std::size_t b = a + 1; b < functions.size(); ++b) {
          ++sup_pairs;
          if (max_gap(base_ints, a, b) != max_gap(lifted_ints, a, b) && sup_failure.is_null()) {
            sup_failure = {{"space", space_summary(x)}, {"f", io::to_json(functions[a])}, {"g", io::to_json(functions[b])}};
          }
        }
      }
      const auto picks = spread(iota(functions.size()), 16);
      for (std::size_t a : picks) {
        for (std::size_t b : picks) {
          if (b <= a) continue;
          if (katetov::sup_distance(lifted[a], lifted[b]) != katetov::sup_distance(functions[a], functions[b]) &&
              sup_failure.is_null()) {
            sup_failure = {{"space", space_summary(x)}, {"f", io::to_json(functions[a])}, {"g", io::to_json(functions[b])}};
          }
        }
      }
    }
  }
  const std::string bound = "200 metrics, n <= 6, denom <= 8, grid delta 1/4, subsets <= 3";
  return {
      pass_if(extend_failure.is_null(), "katetov.kappa_extends",
              {{"extensions", extensions}, {"counterexample", extend_failure}}, bound),
      pass_if(sup_failure.is_null(), "katetov.kappa_sup_isometry",
              {{"pairs", sup_pairs}, {"counterexample", sup_failure}}, bound + ", all pairs per subset"),
  };
}

std::vector<Certificate> check_one_point(std::uint64_t seed) {
  std::size_t extensions = 0;
  Json failure;
  for (const auto& inst : katetov_instances(seed)) {
    const auto& x = inst.space;
    Rng rng(mix(inst.seed, 2));
    const auto grid = katetov::default_grid(x);
    for (const auto& subset : katetov::small_subsets(iota(x.size()), grid.max_subset)) {
      std::vector<katetov::KatetovFunction> candidates;
      for (auto& f : katetov::grid_functions(x, subset, grid)) {
        if (std::all_of(f.values.begin(), f.values.end(), [](const Rational& v) { return v.sign() > 0; })) {
          candidates.push_back(std::move(f));
        }
      }
      for (const auto& f : spread(candidates, 4)) {
        // K lists L in a shuffled order with the new point q at a random slot.
        const std::size_t m = subset.size();
        std::vector<std::size_t> order = iota(m);
        rng.shuffle(order);
        const std::size_t q = rng.index(m + 1);
        std::vector<std::size_t> k_subset;
        std::vector<std::size_t> phi;
        std::vector<std::size_t> x_of(m + 1, 0);
        for (std::size_t i = 0, slot = 0; i <= m; ++i) {
          if (i == q) continue;
          x_of[i] = subset[order[slot++]];
          k_subset.push_back(i);
          phi.push_back(x_of[i]);
        }
        metric::Matrix kd(m + 1, std::vector<Rational>(m + 1, Rational{0}));
        for (std::size_t i = 0; i <= m; ++i) {
          for (std::size_t j = 0; j <= m; ++j) {
            if (i == j) continue;
            if (i == q) kd[i][j] = f.at(x_of[j]);
            else if (j == q) kd[i][j] = f.at(x_of[i]);
            else kd[i][j] = x(x_of[i], x_of[j]);
          }
        }
        const auto k = metric::make_metric(kd);
        const auto ext = katetov::one_point_extension(x, k, k_subset, phi);
        const auto& after = ext.step.after;
        bool ok = metric::is_isometric_embedding(k, after, ext.k_embedding) &&
                  metric::is_isometric_embedding(x, after, ext.step.embedding);
        for (std::size_t i = 0; i <= m && ok; ++i) {
          for (std::size_t j = 0; j <= m && ok; ++j) ok = after(ext.k_embedding[i], ext.k_embedding[j]) == k(i, j);
        }
        for (std::size_t i = 0; i < k_subset.size() && ok; ++i) ok = ext.k_embedding[k_subset[i]] == phi[i];
        ++extensions;
        if (!ok && failure.is_null()) {
          failure = {{"x", space_summary(x)}, {"k", space_summary(k)}, {"phi", phi}, {"subset", k_subset}};
        }
      }
    }
  }
  return {pass_if(failure.is_null(), "katetov.one_point_extension",
                  {{"extensions", extensions}, {"counterexample", failure}},
                  "200 metrics, n <= 6, every subset <= 3, 4 positive grid functions each")};
}

std::vector<Certificate> check_kuratowski(std::uint64_t seed) {
  std::size_t pairs = 0;
  Json failure;
  for (const auto& inst : katetov_instances(seed)) {
    const auto& x = inst.space;
    for (std::size_t a = 0; a < x.size(); ++a) {
      for (std::size_t b = 0; b < x.size(); ++b) {
        ++pairs;
        Rational sup = katetov::sup_distance(katetov::point_function(x, a), katetov::point_function(x, b));
        if (sup != x(a, b) && failure.is_null()) {
          failure = {{"space", space_summary(x)}, {"pair", {a, b}}, {"sup", sup.str()}};
        }
      }
    }
  }
  return {pass_if(failure.is_null(), "katetov.kuratowski", {{"pairs", pairs}, {"counterexample", failure}},
                  "200 metrics, n <= 6, denom <= 8, all pairs")};
}

std::vector<Certificate> check_grid_oracle(std::uint64_t seed) {
  std::size_t subsets = 0;
  Json failure;
  for (const auto& inst : katetov_instances(seed)) {
    const auto grid = katetov::default_grid(inst.space);
    for (const auto& subset : katetov::small_subsets(iota(inst.space.size()), grid.max_subset)) {
      ++subsets;
      if (katetov::grid_functions(inst.space, subset, grid) != oracle::grid_functions(inst.space, subset, grid) &&
          failure.is_null()) {
        failure = {{"space", space_summary(inst.space)}, {"subset", subset}};
      }
    }
  }
  return {pass_if(failure.is_null(), "katetov.grid_functions_oracle", {{"subsets", subsets}, {"counterexample", failure}},
                  "200 metrics, n <= 6, subsets <= 3, exhaustive grid enumeration")};
}

std::vector<Certificate> check_closure(std::uint64_t seed) {
  const katetov::Grid grid{Rational(1, 4), Rational(1), 3};
  Json scores = Json::array();
  Json failure;
  for (std::uint64_t i = 0; i < 20; ++i) {
    Rng rng(mix(seed, 3, i));
    auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    std::int64_t denom = rng.uniform(1, 8);
    const auto x = metric::random_metric(n, denom, Rational(1), rng.next());
    const auto steps = katetov::urysohn_approx(x, 1, katetov::Full{grid});
    const auto& step = steps.front();
    const auto score = katetov::extension_property_score(step.after, grid.max_subset, grid.delta, grid.cap, step.embedding);
    scores.push_back({{"n", n}, {"after", step.after.size()}, {"realized", score.realized}, {"total", score.total}});
    if (score.value() != Rational(1) && failure.is_null()) {
      failure = {{"seed_space", space_summary(x)}, {"realized", score.realized}, {"total", score.total}};
    }
  }
  return {pass_if(failure.is_null(), "katetov.extension_closure", {{"scores", scores}, {"counterexample", failure}},
                  "20 seeds, n <= 4, one Full step at (k, delta, cap) = (3, 1/4, 1), requests over the seed")};
}

FiniteMetricSpace permuted(const FiniteMetricSpace& a, const std::vector<std::size_t>& perm) {
  metric::Matrix d(a.size(), std::vector<Rational>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) d[perm[i]][perm[j]] = a(i, j);
  }
  return metric::make_metric(d);
}

std::vector<Certificate> check_back_and_forth(std::uint64_t seed) {
  std::size_t agree = 0;
  std::size_t isometric = 0;
  Json failure;
  for (std::uint64_t i = 0; i < 500; ++i) {
    Rng rng(mix(seed, 4, i));
    auto n = static_cast<std::size_t>(rng.uniform(1, 7));
    std::int64_t denom = rng.uniform(1, 4);
    const auto a = metric::random_metric(n, denom, Rational(1), rng.next());
    auto perm = iota(n);
    rng.shuffle(perm);
    FiniteMetricSpace b = permuted(a, perm);
    const int kind = static_cast<int>(i % 3);
    if (kind == 1) {
      b = metric::random_metric(n, denom, Rational(1), rng.next());
    } else if (kind == 2 && n > 1) {
      // Move one distance to another grid value when that keeps a metric.
      auto d = b.matrix();
      std::size_t u = rng.index(n);
      std::size_t v = (u + 1 + rng.index(n - 1)) % n;
      for (std::int64_t k = 1; k <= denom; ++k) {
        Rational value(k, denom);
        if (value == d[u][v]) continue;
        d[u][v] = d[v][u] = value;
        if (std::holds_alternative<FiniteMetricSpace>(metric::validate_metric(d))) {
          b = metric::make_metric(d);
          break;
        }
        d[u][v] = d[v][u] = b(u, v);
      }
    }
    const auto found = metric::back_and_forth(a, b);
    const auto expected = oracle::isometric_embedding(a, b);
    bool ok = found.has_value() == expected.has_value();
    if (found) ok = ok && found->size() == n && metric::is_isometric_embedding(a, b, *found);
    if (ok) {
      ++agree;
    } else if (failure.is_null()) {
      failure = {{"a", space_summary(a)}, {"b", space_summary(b)}};
    }
    if (expected) ++isometric;
  }
  return {pass_if(agree == 500, "katetov.back_and_forth_oracle",
                  {{"pairs", 500}, {"agreements", agree}, {"isometric_pairs", isometric}, {"counterexample", failure}},
                  "500 pairs, n <= 7, brute-force permutation search")};
}

// ---------------------------------------------------------------- roelcke

std::vector<Certificate> check_roelcke_laws(std::uint64_t seed) {
  std::size_t associative = 0, unit = 0, closed = 0, monotone = 0, graph = 0, graph_nontrivial = 0, idempotent = 0;
  Json assoc_fail, unit_fail, closed_fail, mono_fail, graph_fail, idem_fail;
  const std::size_t triples = 500;
  for (std::uint64_t i = 0; i < triples; ++i) {
    Rng rng(mix(seed, 5, i));
    auto size = [&] { return static_cast<std::size_t>(rng.uniform(1, 5)); };
    const std::size_t nx = size(), ny = size(), nz = size(), nw = size();
    const std::int64_t denom = rng.uniform(1, 4);
    const Rational one(1);
    auto block = [](const FiniteMetricSpace& u, std::size_t r0, std::size_t rn, std::size_t c0, std::size_t cn) {
      metric::Matrix m(rn, std::vector<Rational>(cn));
      for (std::size_t a = 0; a < rn; ++a) {
        for (std::size_t b = 0; b < cn; ++b) m[a][b] = u(r0 + a, c0 + b);
      }
      return m;
    };
    auto range = [](std::size_t from, std::size_t count) {
      std::vector<std::size_t> v(count);
      std::iota(v.begin(), v.end(), from);
      return v;
    };
    const auto u1 = metric::random_metric(nx + ny, denom, one, rng.next());
    const auto x = metric::restrict(u1, range(0, nx));
    const auto y = metric::restrict(u1, range(nx, ny));
    const auto u2 = metric::extend_random(y, nz, denom, one, rng.next());
    const auto z = metric::restrict(u2, range(ny, nz));
    const auto u3 = metric::extend_random(z, nw, denom, one, rng.next());
    const auto w = metric::restrict(u3, range(nz, nw));
    const auto p = roelcke::make_bikatetov(x, y, block(u1, 0, nx, nx, ny));
    const auto q = roelcke::make_bikatetov(y, z, block(u2, 0, ny, ny, nz));
    const auto r = roelcke::make_bikatetov(z, w, block(u3, 0, nz, nz, nw));
    auto witness = [&] { return Json{{"p", io::to_json(p)}, {"q", io::to_json(q)}, {"r", io::to_json(r)}}; };

    const auto pq = roelcke::compose(p, q);
    if (roelcke::compose(pq, r) == roelcke::compose(p, roelcke::compose(q, r))) ++associative;
    else if (assoc_fail.is_null()) assoc_fail = witness();

    if (roelcke::compose(roelcke::identity_element(x), p) == p && roelcke::compose(p, roelcke::identity_element(y)) == p)
      ++unit;
    else if (unit_fail.is_null()) unit_fail = witness();

    if (std::holds_alternative<roelcke::BiKatetovMatrix>(roelcke::validate_bikatetov(x, z, pq.matrix()))) ++closed;
    else if (closed_fail.is_null()) closed_fail = witness();

    std::vector<std::size_t> a_set;
    for (std::size_t k = 0; k < ny; ++k) {
      if (rng.uniform(0, 1) == 1) a_set.push_back(k);
    }
    if (a_set.empty()) a_set.push_back(rng.index(ny));
    const auto bigger = roelcke::compose(p, roelcke::idempotent_from_subset(y, a_set));
    const auto top = roelcke::make_bikatetov(x, y, metric::Matrix(nx, std::vector<Rational>(ny, one)));
    if (roelcke::pointwise_leq(p, bigger) && roelcke::pointwise_leq(pq, roelcke::compose(bigger, q)) &&
        roelcke::pointwise_leq(pq, roelcke::compose(top, q)) &&
        roelcke::pointwise_leq(roelcke::compose(q, r), roelcke::compose(roelcke::compose(q, r), roelcke::identity_element(w))))
      ++monotone;
    else if (mono_fail.is_null()) mono_fail = witness();

    const auto isometries = metric::isometric_embeddings(x, x);
    const auto& g = isometries[rng.index(isometries.size())];
    const auto& h = isometries[rng.index(isometries.size())];
    std::vector<std::size_t> hg(nx);
    for (std::size_t k = 0; k < nx; ++k) hg[k] = h[g[k]];
    if (roelcke::compose(roelcke::graph_element(x, g), roelcke::graph_element(x, h)) == roelcke::graph_element(x, hg))
      ++graph;
    else if (graph_fail.is_null()) graph_fail = {{"x", io::to_json(x)}, {"g", g}, {"h", h}};
    if (g != iota(nx) || h != iota(nx)) ++graph_nontrivial;

    std::vector<std::size_t> subset;
    for (std::size_t k = 0; k < nx; ++k) {
      if (rng.uniform(0, 1) == 1) subset.push_back(k);
    }
    if (subset.empty()) subset.push_back(rng.index(nx));
    const auto pa = roelcke::idempotent_from_subset(x, subset);
    if (roelcke::is_idempotent(pa) && roelcke::compose(pa, pa) == pa && roelcke::subset_from_idempotent(pa) == subset)
      ++idempotent;
    else if (idem_fail.is_null()) idem_fail = {{"x", io::to_json(x)}, {"subset", subset}};
  }
  const std::string bound = "500 random triples, spaces of 1..5 points, denom <= 4, diameter <= 1";
  auto cert = [&](const char* name, std::size_t count, const Json& fail, Json extra = Json::object()) {
    extra["holds"] = count;
    extra["triples"] = triples;
    extra["counterexample"] = fail;
    return pass_if(count == triples, name, extra, bound);
  };
  return {
      cert("roelcke.associative", associative, assoc_fail),
      cert("roelcke.identity_unit", unit, unit_fail),
      cert("roelcke.composition_valid", closed, closed_fail),
      cert("roelcke.monotone", monotone, mono_fail),
      cert("roelcke.graph_law", graph, graph_fail, {{"nontrivial", graph_nontrivial}}),
      cert("roelcke.subset_idempotents", idempotent, idem_fail),
  };
}

roelcke::StaircaseRelation random_staircase(Rng& rng, std::size_t n) {
  roelcke::StaircaseRelation rel{n, {{0, 0}}};
  std::size_t i = 0, j = 0;
  while (i < n || j < n) {
    int step = static_cast<int>(rng.uniform(0, 2));
    if (i == n) step = 1;
    if (j == n) step = 0;
    if (step != 1) ++i;
    if (step != 0) ++j;
    rel.cells.emplace_back(i, j);
  }
  return roelcke::normalize(rel);
}

std::vector<Certificate> check_staircases(std::uint64_t seed) {
  std::size_t composed = 0;
  std::size_t raw_staircase = 0;
  Json failure;
  for (std::uint64_t t = 0; t < 500; ++t) {
    Rng rng(mix(seed, 6, t));
    auto n = static_cast<std::size_t>(rng.uniform(1, 8));
    const auto a = random_staircase(rng, n);
    const auto b = random_staircase(rng, n);
    const auto c = roelcke::staircase_compose(a, b);
    auto raw = roelcke::relational_composite(a, b);
    roelcke::StaircaseRelation raw_rel = roelcke::normalize({n, raw});
    bool ok = roelcke::is_staircase(c);
    if (roelcke::is_staircase(raw_rel)) {
      ++raw_staircase;
      ok = ok && c == raw_rel;
    }
    ok = ok && roelcke::staircase_compose(roelcke::diagonal_staircase(n), a) == a &&
         roelcke::staircase_compose(a, roelcke::diagonal_staircase(n)) == a;
    if (ok) ++composed;
    else if (failure.is_null()) failure = {{"a", io::to_json(a)}, {"b", io::to_json(b)}};
  }
  return {pass_if(composed == 500, "roelcke.staircase_closure",
                  {{"pairs", 500}, {"holds", composed}, {"raw_composite_staircase", raw_staircase}, {"counterexample", failure}},
                  "500 random staircase pairs, n <= 8")};
}

std::vector<Certificate> check_grid_idempotents(std::uint64_t seed) {
  (void)seed;
  Json rows = Json::array();
  const std::vector<std::pair<metric::Matrix, Rational>> cases = {
      {{{0}}, Rational(1, 2)},
      {{{0, 1}, {1, 0}}, Rational(1, 2)},
      {{{0, Rational(1, 2)}, {Rational(1, 2), 0}}, Rational(1, 2)},
      {{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, Rational(1)},
  };
  for (const auto& [d, delta] : cases) {
    const auto x = metric::make_metric(d);
    const auto found = roelcke::enumerate_grid_idempotents(x, delta);
    std::size_t from_subsets = 0;
    for (const auto& g : found) from_subsets += g.subset.has_value() ? 1 : 0;
    rows.push_back({{"space", io::to_json(x)}, {"delta", delta.str()}, {"idempotents", found.size()},
                    {"from_subsets", from_subsets}});
  }
  return {{"roelcke.grid_idempotents", "report", {{"cases", rows}}, "exhaustive over the grid"}};
}

// ---------------------------------------------------------------- flows

std::vector<Certificate> check_ellis(std::uint64_t seed) {
  std::size_t semigroups = 0, ideals = 0, oracle_ideals = 0, oracle_semigroups = 0, max_size = 0;
  Json idem_fail, struct_fail, oracle_fail;
  for (std::uint64_t t = 0; t < 1000; ++t) {
    Rng rng(mix(seed, 7, t));
    auto n = static_cast<std::size_t>(rng.uniform(1, 6));
    auto count = static_cast<std::size_t>(rng.uniform(1, 3));
    std::vector<flows::SelfMap> gens;
    for (std::size_t g = 0; g < count; ++g) {
      std::vector<std::uint32_t> images(n);
      for (auto& v : images) v = static_cast<std::uint32_t>(rng.index(n));
      gens.emplace_back(std::move(images));
    }
    Json gens_json = Json::array();
    for (const auto& g : gens) gens_json.push_back(io::to_json(g));
    const auto s = flows::generate_semigroup(gens);
    ++semigroups;
    max_size = std::max(max_size, s.size());

    const std::size_t e1 = flows::find_idempotent(s);
    const std::size_t e2 = flows::find_idempotent_by_descent(s);
    if (!(s.element(e1).is_idempotent() && s.element(e2).is_idempotent()) && idem_fail.is_null()) {
      idem_fail = {{"generators", gens_json}};
    }

    const auto minimal = flows::minimal_left_ideals(s);
    for (const auto& m : minimal) {
      ++ideals;
      const auto report = flows::verify_ideal_structure(s, m);
      if (!report.holds() && struct_fail.is_null()) struct_fail = {{"generators", gens_json}, {"ideal", m}};
      if (n <= 5) {
        auto maps = report.equivariant_maps;
        std::sort(maps.begin(), maps.end());
        ++oracle_ideals;
        if (maps != oracle::equivariant_self_maps(s, m) && oracle_fail.is_null()) {
          oracle_fail = {{"generators", gens_json}, {"ideal", m}, {"check", "equivariant self-maps"}};
        }
      }
    }
    if (s.size() <= 600) {
      ++oracle_semigroups;
      std::vector<flows::SelfMap> elements = s.elements();
      std::sort(elements.begin(), elements.end());
      if (elements != oracle::semigroup_closure(gens) && oracle_fail.is_null()) {
        oracle_fail = {{"generators", gens_json}, {"check", "closure"}};
      }
      if (oracle::minimal_left_ideals(s) != minimal && oracle_fail.is_null()) {
        oracle_fail = {{"generators", gens_json}, {"check", "minimal left ideals"}};
      }
    }
  }
  const std::string bound = "1000 random generator sets, 1..3 maps on n <= 6 points";
  return {
      pass_if(idem_fail.is_null(), "flows.idempotents",
              {{"semigroups", semigroups}, {"largest", max_size}, {"counterexample", idem_fail}}, bound),
      pass_if(struct_fail.is_null(), "flows.ideal_structure",
              {{"ideals", ideals}, {"counterexample", struct_fail}}, bound),
      pass_if(oracle_fail.is_null(), "flows.ideal_oracle",
              {{"ideals_checked", oracle_ideals}, {"semigroups_checked", oracle_semigroups}, {"counterexample", oracle_fail}},
              bound + "; equivariant-map backtracking for n <= 5; closure and ideal oracles for |S| <= 600"),
  };
}

std::vector<std::vector<std::uint32_t>> all_permutations(std::size_t n) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0U);
  std::vector<std::vector<std::uint32_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Certificate> check_obstruction(std::uint64_t seed) {
  (void)seed;
  Json symmetric = Json::array();
  bool ok = true;
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto group = flows::symmetric_group(n);
    const auto chains = flows::chain_space_action(group);
    const auto search = flows::equivariant_maps(group, chains);
    const bool three = flows::is_k_transitive(group, 3);
    const bool empty = search.maps.empty() && search.count == 0 && search.exhaustive;
    ok = ok && empty && three;
    symmetric.push_back({{"n", n}, {"chains", chains.n}, {"maps", search.count}, {"exhaustive", search.exhaustive},
                         {"three_transitive", three}});
  }

  // Every subgroup of S_n (n <= 5) generated by two permutations, deduplicated.
  std::size_t groups = 0;
  Json three_transitive = Json::array();
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    std::set<std::vector<flows::SelfMap>> seen;
    for (std::size_t a = 0; a < perms.size(); ++a) {
      for (std::size_t b = a; b < perms.size(); ++b) {
        flows::FiniteAction action{n, {flows::SelfMap(perms[a]), flows::SelfMap(perms[b])}};
        auto elements = flows::group_elements(action);
        std::sort(elements.begin(), elements.end());
        if (!seen.insert(elements).second) continue;
        ++groups;
        if (!flows::is_k_transitive(action, 3)) continue;
        const auto search = flows::equivariant_maps(action, flows::chain_space_action(action));
        const bool empty = search.maps.empty() && search.count == 0;
        ok = ok && empty;
        three_transitive.push_back({{"n", n}, {"order", elements.size()}, {"generators", {perms[a], perms[b]}},
                                    {"maps", search.count}});
      }
    }
  }
  return {pass_if(ok, "flows.three_transitive_obstruction",
                  {{"symmetric", symmetric}, {"two_generated_groups", groups}, {"three_transitive", three_transitive}},
                  "S_n for n = 3..6; every 2-generated permutation group of degree 3..5; exhaustive")};
}

std::vector<Certificate> check_equivariant_oracle(std::uint64_t seed) {
  std::size_t cases = 0;
  Json failure;
  for (std::uint64_t t = 0; t < 200; ++t) {
    Rng rng(mix(seed, 8, t));
    auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    auto count = static_cast<std::size_t>(rng.uniform(1, 2));
    const auto perms = all_permutations(n);
    flows::FiniteAction source{n, {}};
    for (std::size_t g = 0; g < count; ++g) source.generators.emplace_back(perms[rng.index(perms.size())]);
    for (const auto& target : {source, flows::chain_space_action(source)}) {
      const auto expected = oracle::equivariant_maps(source, target);
      if (!expected) continue;
      ++cases;
      const auto found = flows::equivariant_maps(source, target, 1'000'000);
      if ((found.maps != *expected || found.count != expected->size()) && failure.is_null()) {
        failure = {{"source", io::to_json(source)}, {"target", io::to_json(target)}};
      }
    }
  }
  return {pass_if(failure.is_null(), "flows.equivariant_oracle", {{"cases", cases}, {"counterexample", failure}},
                  "200 random permutation actions, n <= 4, targets: itself and its chains; |T|^|X| <= 10^6")};
}

std::vector<Certificate> check_laminar(std::uint64_t seed) {
  (void)seed;
  std::vector<std::uint64_t> family{0xFF, 0x0F, 0xF0, 0x03, 0x0C, 0x30, 0xC0};
  for (std::size_t x = 0; x < 8; ++x) family.push_back(std::uint64_t{1} << x);
  flows::FiniteAction tree{8,
                           {flows::SelfMap({1, 0, 2, 3, 4, 5, 6, 7}), flows::SelfMap({2, 3, 0, 1, 4, 5, 6, 7}),
                            flows::SelfMap({4, 5, 6, 7, 0, 1, 2, 3})}};
  const auto map = flows::laminar_chain_map(8, family, tree);
  const bool lengths = std::all_of(map.chains.begin(), map.chains.end(), [](const auto& c) { return c.size() == 4; });
  const std::size_t order = flows::group_elements(tree).size();
  const bool three = flows::is_k_transitive(tree, 3);
  Json chains = Json::array();
  for (const auto& c : map.chains) chains.push_back(c);
  return {pass_if(map.chains_nested && map.equivariant && lengths && !three, "flows.laminar_chain_map",
                  {{"chains", chains}, {"nested", map.chains_nested}, {"equivariant", map.equivariant},
                   {"group_order", order}, {"three_transitive", three}},
                  "depth-3 binary laminar family on 8 points, full tree automorphism group")};
}

std::vector<Certificate> check_orders(std::uint64_t seed) {
  (void)seed;
  bool ok = true;
  Json rows = Json::array();
  std::size_t factorial = 1;
  for (std::size_t n = 1; n <= 5; ++n) {
    factorial *= n;
    const auto flow = flows::linear_orders_flow(n);
    const bool good = flow.orders.size() == factorial && flow.invariant && flow.orbit_count == 1 && flow.minimal;
    ok = ok && good;
    Json row = {{"n", n}, {"orders", flow.orders.size()}, {"invariant", flow.invariant},
                {"orbits", flow.orbit_count}, {"minimal", flow.minimal}};
    if (!flow.full_space_orbit_sizes.empty()) row["full_space_orbits"] = flow.full_space_orbit_sizes.size();
    rows.push_back(row);
  }
  return {pass_if(ok, "flows.linear_orders", {{"flows", rows}}, "n = 1..5, exact")};
}

// ---------------------------------------------------------------- syndetic

syndetic::IntegerWindowSet random_syndetic(Rng& rng, std::int64_t window, std::int64_t max_gap) {
  std::vector<std::int64_t> members;
  for (std::int64_t x = -window + rng.uniform(0, max_gap - 1); x <= window; x += rng.uniform(1, max_gap)) {
    members.push_back(x);
  }
  return syndetic::make_window_set(window, std::move(members));
}

syndetic::BohrSpec random_spec(Rng& rng) {
  static const std::vector<Rational> eps = {Rational(1, 10), Rational(1, 4), Rational(1, 2), Rational(1),
                                            Rational(3, 2),  Rational(2)};
  syndetic::BohrSpec spec;
  const std::int64_t count = rng.uniform(1, 3);
  for (std::int64_t i = 0; i < count; ++i) {
    const std::int64_t q = rng.uniform(1, 12);
    spec.thetas.emplace_back(rng.uniform(0, q - 1), q);
  }
  spec.eps = eps[rng.index(eps.size())];
  return spec;
}

std::vector<Certificate> check_triple_bohr(std::uint64_t seed) {
  const std::int64_t window = 10'000;
  std::size_t checks = 0, bohr_points = 0, difference_misses = 0, sets_with_misses = 0;
  Json failure;
  for (std::uint64_t t = 0; t < 50; ++t) {
    Rng rng(mix(seed, 9, t));
    const auto s = random_syndetic(rng, window, rng.uniform(2, 12));
    bool missed = false;
    for (int k = 0; k < 4; ++k) {
      const auto spec = random_spec(rng);
      const auto check = syndetic::check_triple_sum_bohr(s, spec);
      ++checks;
      bohr_points += check.bohr_size;
      difference_misses += check.difference_misses.size();
      missed = missed || !check.difference_misses.empty();
      if ((!check.holds() || !check.syndetic) && failure.is_null()) {
        failure = {{"set_index", t}, {"spec", io::to_json(spec)}, {"violations", spread(check.violations, 16)}};
      }
    }
    sets_with_misses += missed ? 1 : 0;
  }
  return {
      pass_if(failure.is_null(), "syndetic.triple_sum_bohr",
              {{"sets", 50}, {"checks", checks}, {"bohr_points", bohr_points}, {"counterexample", failure}},
              "50 random bounded-gap sets (gaps 1..g, g <= 12), window 10^4, 4 specs each with denominators <= 12, "
              "reliable window [-N/3, N/3]"),
      {"syndetic.difference_set_bohr", "report", {{"misses", difference_misses}, {"sets_with_misses", sets_with_misses}},
       "same sets, reliable window [-N/2, N/2]; open question, not judged"},
  };
}

std::vector<Certificate> check_structured_example(std::uint64_t seed) {
  (void)seed;
  const std::int64_t window = 600;
  std::vector<std::int64_t> members;
  for (std::int64_t x = -window; x <= window; ++x) {
    if (((x - 2) % 5 + 5) % 5 == 0) members.push_back(x);
  }
  const auto s = syndetic::make_window_set(window, members);
  const syndetic::BohrSpec spec{{Rational(1, 5)}, Rational(1, 2)};
  const auto check = syndetic::check_triple_sum_bohr(s, spec);
  return {{"syndetic.residue_class_example", "report",
           {{"set", "5Z+2"}, {"spec", io::to_json(spec)}, {"violations", check.violations.size()},
            {"zero_is_violation", std::binary_search(check.violations.begin(), check.violations.end(), 0)},
            {"difference_misses", check.difference_misses.size()}},
           "window 600"}};
}

std::vector<Certificate> check_pestov(std::uint64_t seed) {
  (void)seed;
  bool ok = true;
  Json rows = Json::array();
  for (const auto& g : syndetic::small_groups()) {
    const auto w = syndetic::pestov_witness(g.table);
    const std::size_t n = g.table.size();
    // Recompute F S and S S^-1 from the table.
    std::set<std::size_t> fs, quotient;
    for (std::size_t f : w.f) {
      for (std::size_t s : w.s) fs.insert(g.table[f][s]);
    }
    for (std::size_t a : w.s) {
      for (std::size_t b : w.s) {
        for (std::size_t c = 0; c < n; ++c) {
          if (g.table[b][c] == w.identity) quotient.insert(g.table[a][c]);
        }
      }
    }
    const bool good = fs.size() == n && quotient.size() < n && !w.extremely_amenable && w.proper_subsets.value_or(0) > 0;
    ok = ok && good;
    rows.push_back({{"group", g.name}, {"order", n}, {"fs", fs.size()}, {"s_s_inverse", quotient.size()},
                    {"proper_subsets", w.proper_subsets.value_or(0)}});
  }
  const auto trivial = syndetic::pestov_witness({{0}});
  ok = ok && trivial.extremely_amenable;
  return {pass_if(ok, "syndetic.pestov", {{"groups", rows}, {"trivial_extremely_amenable", trivial.extremely_amenable}},
                  "all 23 nontrivial groups of order <= 12 and the trivial group; exhaustive subset count")};
}

std::vector<Certificate> check_window_oracles(std::uint64_t seed) {
  std::size_t sets = 0, specs = 0, periodic = 0, float_checked = 0;
  Json failure;
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng(mix(seed, 10, t));
    const std::int64_t window = rng.uniform(0, 40);
    std::vector<std::int64_t> members;
    for (std::int64_t x = -window; x <= window; ++x) {
      if (rng.uniform(0, 3) == 0) members.push_back(x);
    }
    const auto s = syndetic::make_window_set(window, members);
    ++sets;
    if ((syndetic::difference_set(s).set != oracle::difference_set(s) ||
         syndetic::triple_sum(s).set != oracle::triple_sum(s)) &&
        failure.is_null()) {
      failure = {{"set", io::to_json(s)}, {"check", "sum sets"}};
    }
    const auto spec = random_spec(rng);
    ++specs;
    const auto bohr = syndetic::bohr_members(spec, 200);
    std::int64_t period = 1;
    for (const auto& theta : spec.thetas) period = std::lcm(period, theta.den());
    bool is_periodic = true;
    for (std::int64_t x : bohr.members) {
      if (x + period <= 200 && !bohr.contains(x + period)) is_periodic = false;
    }
    for (std::int64_t x = -200; x <= 200; ++x) {
      const auto expected = oracle::bohr_member(spec, x);
      if (!expected) continue;
      ++float_checked;
      if (*expected != bohr.contains(x) && failure.is_null()) {
        failure = {{"spec", io::to_json(spec)}, {"n", x}, {"check", "bohr membership"}};
      }
    }
    if (is_periodic) ++periodic;
    else if (failure.is_null()) failure = {{"spec", io::to_json(spec)}, {"check", "periodicity"}};
  }
  return {pass_if(failure.is_null(), "syndetic.window_oracles",
                  {{"sets", sets}, {"specs", specs}, {"periodic", periodic}, {"float_points", float_checked},
                   {"counterexample", failure}},
                  "100 random sets in windows <= 40 against double/triple loops; Bohr sets on [-200, 200]")};
}

// ---------------------------------------------------------------- registry

struct Group {
  const char* suite;
  const char* name;
  std::vector<Certificate> (*run)(std::uint64_t);
};

const std::vector<Group>& groups() {
  static const std::vector<Group> all = {
      {"katetov", "katetov.kappa", check_kappa},
      {"katetov", "katetov.one_point", check_one_point},
      {"katetov", "katetov.kuratowski", check_kuratowski},
      {"katetov", "katetov.grid_oracle", check_grid_oracle},
      {"katetov", "katetov.closure", check_closure},
      {"katetov", "katetov.back_and_forth", check_back_and_forth},
      {"roelcke", "roelcke.laws", check_roelcke_laws},
      {"roelcke", "roelcke.staircases", check_staircases},
      {"roelcke", "roelcke.grid_idempotents", check_grid_idempotents},
      {"flows", "flows.ellis", check_ellis},
      {"flows", "flows.obstruction", check_obstruction},
      {"flows", "flows.equivariant_oracle", check_equivariant_oracle},
      {"flows", "flows.laminar", check_laminar},
      {"flows", "flows.orders", check_orders},
      {"syndetic", "syndetic.triple_bohr", check_triple_bohr},
      {"syndetic", "syndetic.structured", check_structured_example},
      {"syndetic", "syndetic.pestov", check_pestov},
      {"syndetic", "syndetic.window_oracles", check_window_oracles},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"katetov", "roelcke", "flows", "syndetic", "all"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<std::string> suite_groups(const std::string& name) {
  if (!is_suite(name)) throw std::invalid_argument("unknown suite: " + name);
  std::vector<std::string> out;
  for (const auto& g : groups()) {
    if (name == "all" || name == g.suite) out.emplace_back(g.name);
  }
  return out;
}

SuiteRun run_suite(const std::string& name, std::uint64_t seed) {
  if (!is_suite(name)) throw std::invalid_argument("unknown suite: " + name);
  SuiteRun run;
  for (const auto& g : groups()) {
    if (name != "all" && name != g.suite) continue;
    const auto start = std::chrono::steady_clock::now();
    auto certificates = g.run(seed);
    run.seconds[g.name] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (auto& c : certificates) run.certificates.push_back(std::move(c));
  }
  return run;
}

}  // namespace urysohn::cli
