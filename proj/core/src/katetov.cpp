#include "urysohn/katetov.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace urysohn::katetov {

namespace {

void check_base(const FiniteMetricSpace& space, const KatetovFunction& f) {
  if (f.base.empty()) throw DomainError("Katetov function with empty base");
  if (f.values.size() != f.base.size()) throw DomainError("Katetov function is missing values for its base");
  for (std::size_t i = 0; i < f.base.size(); ++i) {
    if (f.base[i] >= space.size()) throw DomainError("Katetov base point outside the space");
    if (i > 0 && f.base[i] <= f.base[i - 1]) throw DomainError("Katetov base must be sorted and distinct");
    if (f.values[i].sign() < 0) throw DomainError("Katetov function with a negative value");
  }
}

std::vector<std::size_t> all_points(std::size_t n) {
  std::vector<std::size_t> points(n);
  for (std::size_t i = 0; i < n; ++i) points[i] = i;
  return points;
}

void check_grid(const Grid& grid) {
  if (grid.delta.sign() <= 0) throw DomainError("grid step must be positive");
  if (grid.cap.sign() <= 0) throw DomainError("grid cap must be positive");
}

std::vector<KatetovFunction> lift_unique(const FiniteMetricSpace& space, std::span<const KatetovFunction> fs) {
  std::vector<KatetovFunction> out;
  std::set<std::vector<Rational>> seen;
  for (const auto& f : fs) {
    KatetovFunction g = kappa_extend(space, f);
    if (seen.insert(g.values).second) out.push_back(std::move(g));
  }
  return out;
}

std::vector<KatetovFunction> full_requests(const FiniteMetricSpace& space, const Grid& grid) {
  std::vector<KatetovFunction> requests;
  for (const auto& subset : small_subsets(all_points(space.size()), grid.max_subset)) {
    auto fs = grid_functions(space, subset, grid);
    requests.insert(requests.end(), std::make_move_iterator(fs.begin()), std::make_move_iterator(fs.end()));
  }
  return requests;
}

std::vector<KatetovFunction> sampled_requests(const FiniteMetricSpace& space, const Sampled& policy,
                                              std::size_t step) {
  std::mt19937_64 rng(policy.seed ^ (0x9E3779B97F4A7C15ULL * (step + 1)));
  const auto subsets = small_subsets(all_points(space.size()), policy.grid.max_subset);
  const std::int64_t levels = (policy.grid.cap / policy.grid.delta).floor();
  std::uniform_int_distribution<std::size_t> pick_subset(0, subsets.size() - 1);
  std::uniform_int_distribution<std::int64_t> pick_level(0, levels);

  std::vector<KatetovFunction> requests;
  const std::size_t attempts = policy.count * 64;
  for (std::size_t a = 0; a < attempts && requests.size() < policy.count; ++a) {
    KatetovFunction f;
    f.base = subsets[pick_subset(rng)];
    for (std::size_t i = 0; i < f.base.size(); ++i) f.values.push_back(policy.grid.delta * pick_level(rng));
    if (is_katetov(space, f)) requests.push_back(std::move(f));
  }
  return requests;
}

}  // namespace

const Rational& KatetovFunction::at(std::size_t point) const {
  auto it = std::lower_bound(base.begin(), base.end(), point);
  if (it == base.end() || *it != point) throw DomainError("point not in the Katetov base");
  return values[static_cast<std::size_t>(it - base.begin())];
}

KatetovFunction on_all_points(std::vector<Rational> values) {
  KatetovFunction f;
  f.base = all_points(values.size());
  f.values = std::move(values);
  return f;
}

std::optional<Violation> katetov_violation(const FiniteMetricSpace& space, const KatetovFunction& f) {
  check_base(space, f);
  for (std::size_t i = 0; i < f.base.size(); ++i) {
    for (std::size_t j = i + 1; j < f.base.size(); ++j) {
      const Rational& d = space(f.base[i], f.base[j]);
      if (abs(f.values[i] - f.values[j]) > d) {
        return Violation{"lipschitz", {f.base[i], f.base[j]}, "|f(x) - f(y)| > d(x,y)"};
      }
      if (d > f.values[i] + f.values[j]) {
        return Violation{"triangle", {f.base[i], f.base[j]}, "d(x,y) > f(x) + f(y)"};
      }
    }
  }
  return std::nullopt;
}

KatetovFunction point_function(const FiniteMetricSpace& space, std::size_t x) {
  if (x >= space.size()) throw DomainError("point_function: point outside the space");
  auto row = space.row(x);
  return on_all_points({row.begin(), row.end()});
}

KatetovFunction kappa_extend(const FiniteMetricSpace& space, const KatetovFunction& f) {
  if (auto violation = katetov_violation(space, f)) {
    throw PreconditionError("kappa_extend: function is not Katetov: " + metric::describe(*violation));
  }
  std::vector<Rational> g(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    Rational best = space(x, f.base[0]) + f.values[0];
    for (std::size_t i = 1; i < f.base.size(); ++i) best = std::min(best, space(x, f.base[i]) + f.values[i]);
    g[x] = best;
  }
  return on_all_points(std::move(g));
}

Rational sup_distance(const KatetovFunction& f, const KatetovFunction& g) {
  if (f.base != g.base || f.values.size() != g.values.size()) {
    throw DomainError("sup_distance: functions have different bases");
  }
  Rational best{0};
  for (std::size_t i = 0; i < f.values.size(); ++i) best = std::max(best, abs(f.values[i] - g.values[i]));
  return best;
}

ExtensionStep adjoin(const FiniteMetricSpace& space, std::span<const KatetovFunction> requests) {
  const std::size_t n = space.size();
  const auto full_base = all_points(n);
  for (const auto& f : requests) {
    if (f.base != full_base) throw DomainError("adjoin: request must be defined on every point");
    if (auto violation = katetov_violation(space, f)) {
      throw PreconditionError("adjoin: request is not Katetov: " + metric::describe(*violation));
    }
  }

  ExtensionStep step;
  step.before = space;
  step.embedding = full_base;

  std::vector<const KatetovFunction*> fresh;
  for (const auto& f : requests) {
    std::optional<std::size_t> target;
    for (std::size_t x = 0; x < n && !target; ++x) {
      if (f.values[x].is_zero()) target = x;
    }
    for (std::size_t k = 0; k < fresh.size() && !target; ++k) {
      if (fresh[k]->values == f.values) target = n + k;
    }
    if (target) {
      step.adjoined.push_back({f, *target, true});
    } else {
      step.adjoined.push_back({f, n + fresh.size(), false});
      fresh.push_back(&f);
    }
  }

  const std::size_t total = n + fresh.size();
  std::vector<Rational> flat(total * total);
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return flat[i * total + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) at(i, j) = space(i, j);
  }
  for (std::size_t k = 0; k < fresh.size(); ++k) {
    for (std::size_t x = 0; x < n; ++x) {
      at(n + k, x) = fresh[k]->values[x];
      at(x, n + k) = fresh[k]->values[x];
    }
    for (std::size_t l = k + 1; l < fresh.size(); ++l) {
      Rational s = sup_distance(*fresh[k], *fresh[l]);
      at(n + k, n + l) = s;
      at(n + l, n + k) = s;
    }
  }

  std::vector<std::string> labels;
  if (!space.labels().empty()) {
    labels = space.labels();
    for (std::size_t k = 0; k < fresh.size(); ++k) labels.push_back("p" + std::to_string(n + k));
  }
  metric::Matrix m(total, std::vector<Rational>(total));
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = 0; j < total; ++j) m[i][j] = at(i, j);
  }
  auto validated = metric::validate_metric(m, std::move(labels));
  if (auto* violation = std::get_if<Violation>(&validated)) {
    throw std::logic_error("adjoin produced a non-metric: " + metric::describe(*violation));
  }
  step.after = std::get<FiniteMetricSpace>(std::move(validated));
  return step;
}

OnePointExtension one_point_extension(const FiniteMetricSpace& x, const FiniteMetricSpace& k,
                                      std::span<const std::size_t> subset, std::span<const std::size_t> phi) {
  if (subset.empty()) throw DomainError("one_point_extension: L must be nonempty");
  if (phi.size() != subset.size()) throw DomainError("one_point_extension: phi must map every point of L");
  std::vector<bool> in_l(k.size(), false);
  for (std::size_t p : subset) {
    if (p >= k.size() || in_l[p]) throw DomainError("one_point_extension: L is not a subset of K");
    in_l[p] = true;
  }
  if (k.size() != subset.size() + 1) throw DomainError("one_point_extension: |K \\ L| must be 1");
  const std::size_t q = static_cast<std::size_t>(std::find(in_l.begin(), in_l.end(), false) - in_l.begin());

  std::vector<bool> used(x.size(), false);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (phi[i] >= x.size() || used[phi[i]]) throw DomainError("one_point_extension: phi is not injective");
    used[phi[i]] = true;
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      if (k(subset[i], subset[j]) != x(phi[i], phi[j])) {
        throw DomainError("one_point_extension: phi is not isometric");
      }
    }
  }

  // f lives on phi(L), ordered by index in X.
  std::vector<std::size_t> order(subset.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return phi[a] < phi[b]; });
  KatetovFunction f;
  for (std::size_t i : order) {
    f.base.push_back(phi[i]);
    f.values.push_back(k(q, subset[i]));
  }

  KatetovFunction lifted = kappa_extend(x, f);
  OnePointExtension result;
  result.step = adjoin(x, std::span<const KatetovFunction>(&lifted, 1));
  result.k_embedding.assign(k.size(), 0);
  for (std::size_t i = 0; i < subset.size(); ++i) result.k_embedding[subset[i]] = phi[i];
  result.k_embedding[q] = result.step.adjoined.front().point;
  return result;
}

Grid default_grid(const FiniteMetricSpace& space) {
  Rational cap = space.size() > 1 ? space.diameter() * Rational(2) : Rational(1);
  return {Rational(1, 4), cap, 3};
}

std::vector<std::vector<std::size_t>> small_subsets(std::span<const std::size_t> points, std::size_t max_size) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const std::size_t n = sorted.size();
  for (std::size_t size = 1; size <= std::min(max_size, n); ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::vector<std::size_t> subset(size);
      for (std::size_t i = 0; i < size; ++i) subset[i] = sorted[idx[i]];
      out.push_back(std::move(subset));
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

std::vector<KatetovFunction> grid_functions(const FiniteMetricSpace& space, std::span<const std::size_t> subset,
                                            const Grid& grid) {
  check_grid(grid);
  if (subset.empty()) throw DomainError("grid_functions: empty subset");
  const std::int64_t levels = (grid.cap / grid.delta).floor();
  std::vector<Rational> values;
  for (std::int64_t k = 0; k <= levels; ++k) values.push_back(grid.delta * k);

  std::vector<KatetovFunction> out;
  KatetovFunction current;
  current.base.assign(subset.begin(), subset.end());
  current.values.resize(subset.size());

  auto fits = [&](std::size_t pos) {
    const Rational& v = current.values[pos];
    for (std::size_t i = 0; i < pos; ++i) {
      const Rational& d = space(subset[i], subset[pos]);
      if (abs(current.values[i] - v) > d || d > current.values[i] + v) return false;
    }
    return true;
  };
  auto fill = [&](auto&& self, std::size_t pos) -> void {
    if (pos == subset.size()) {
      out.push_back(current);
      return;
    }
    for (const Rational& v : values) {
      current.values[pos] = v;
      if (fits(pos)) self(self, pos + 1);
    }
  };
  fill(fill, 0);
  return out;
}

std::vector<ExtensionStep> urysohn_approx(const FiniteMetricSpace& seed, std::size_t iterations,
                                          const Strategy& strategy) {
  const Grid& grid = std::visit([](const auto& s) -> const Grid& { return s.grid; }, strategy);
  check_grid(grid);
  std::vector<ExtensionStep> steps;
  FiniteMetricSpace current = seed;
  for (std::size_t it = 0; it < iterations; ++it) {
    std::vector<KatetovFunction> requests;
    if (const auto* full = std::get_if<Full>(&strategy)) {
      requests = full_requests(current, full->grid);
    } else {
      requests = sampled_requests(current, std::get<Sampled>(strategy), it);
    }
    auto lifted = lift_unique(current, requests);
    steps.push_back(adjoin(current, lifted));
    current = steps.back().after;
  }
  return steps;
}

Score extension_property_score(const FiniteMetricSpace& space, std::size_t max_subset, const Rational& delta,
                               const Rational& cap, std::span<const std::size_t> request_points) {
  const Grid grid{delta, cap, max_subset};
  check_grid(grid);
  std::vector<std::size_t> points =
      request_points.empty() ? all_points(space.size())
                             : std::vector<std::size_t>(request_points.begin(), request_points.end());
  Score score;
  for (const auto& subset : small_subsets(points, max_subset)) {
    for (const auto& f : grid_functions(space, subset, grid)) {
      ++score.total;
      for (std::size_t p = 0; p < space.size(); ++p) {
        bool realizes = true;
        for (std::size_t i = 0; i < subset.size() && realizes; ++i) realizes = space(p, subset[i]) == f.values[i];
        if (realizes) {
          ++score.realized;
          break;
        }
      }
    }
  }
  return score;
}

}  // namespace urysohn::katetov
