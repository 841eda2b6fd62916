#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "urysohn/metric.hpp"

namespace urysohn::katetov {

using metric::Embedding;
using metric::FiniteMetricSpace;

/// Distance profile of a prospective new point over `base` (sorted, distinct
/// point indices of some space). values[i] is the distance to base[i].
struct KatetovFunction {
  std::vector<std::size_t> base;
  std::vector<Rational> values;

  /// Value at a point of the base; throws DomainError if absent.
  const Rational& at(std::size_t point) const;

  friend bool operator==(const KatetovFunction&, const KatetovFunction&) = default;
};

/// Function on every point of a space of size values.size().
KatetovFunction on_all_points(std::vector<Rational> values);

/// First pair (x, y) with |f(x) - f(y)| > d(x,y) ("lipschitz") or
/// d(x,y) > f(x) + f(y) ("triangle"), or nullopt when f is Katetov.
/// Throws DomainError for an empty or malformed base, a base index outside
/// the space, a missing value or a negative value.
std::optional<Violation> katetov_violation(const FiniteMetricSpace& space, const KatetovFunction& f);

inline bool is_katetov(const FiniteMetricSpace& space, const KatetovFunction& f) {
  return !katetov_violation(space, f).has_value();
}

/// h_x : y -> d(x, y).
KatetovFunction point_function(const FiniteMetricSpace& space, std::size_t x);

/// Extends f from its base Y to the whole space by
///   g(x) = min over y in Y of d(x, y) + f(y).
KatetovFunction kappa_extend(const FiniteMetricSpace& space, const KatetovFunction& f);

/// max over the common base of |f - g|.
Rational sup_distance(const KatetovFunction& f, const KatetovFunction& g);

struct Adjoined {
  KatetovFunction function;
  /// Index of the realizing point in the extended space.
  std::size_t point;
  /// True if the request coincided with an existing point (distance 0) and
  /// was merged into it instead of creating a new point.
  bool merged;
};

struct ExtensionStep {
  FiniteMetricSpace before;
  FiniteMetricSpace after;
  Embedding embedding;
  std::vector<Adjoined> adjoined;
};

/// Adds one point per function: d(p_f, x) = f(x) and d(p_f, p_g) is the sup
/// distance. Requests at distance zero from an existing or earlier point are
/// merged into it. Old points keep their indices; new points follow in
/// request order.
ExtensionStep adjoin(const FiniteMetricSpace& space, std::span<const KatetovFunction> requests);

struct OnePointExtension {
  ExtensionStep step;
  /// Isometric embedding of K into step.after.
  Embedding k_embedding;
};

/// Extends the isometric embedding phi : K|L -> X (phi[i] is the image of
/// subset[i]) to an isometric embedding of K into X plus one point, where K
/// has exactly one point outside `subset`.
OnePointExtension one_point_extension(const FiniteMetricSpace& x, const FiniteMetricSpace& k,
                                      std::span<const std::size_t> subset, std::span<const std::size_t> phi);

/// Value grid {0, delta, 2 delta, ...} up to cap, on subsets of at most
/// max_subset points.
struct Grid {
  Rational delta;
  Rational cap;
  std::size_t max_subset;
};

/// delta = 1/4, cap = 2 * diameter (or 1 for a single point), max_subset = 3.
Grid default_grid(const FiniteMetricSpace& space);

struct Full {
  Grid grid;
};

struct Sampled {
  Grid grid;
  std::size_t count;
  std::uint64_t seed;
};

using Strategy = std::variant<Full, Sampled>;

/// Nonempty subsets of `points` with at most max_size elements, ordered by
/// size and then lexicographically.
std::vector<std::vector<std::size_t>> small_subsets(std::span<const std::size_t> points, std::size_t max_size);

/// Every Katetov function on `subset` with values on the grid, in
/// lexicographic order of the value vector.
std::vector<KatetovFunction> grid_functions(const FiniteMetricSpace& space, std::span<const std::size_t> subset,
                                            const Grid& grid);

/// Iterated one-point extension: each step lifts the requested grid
/// functions with kappa_extend and adjoins them all (equal value maps are
/// deduplicated). Step i's `after` is step i+1's `before`.
std::vector<ExtensionStep> urysohn_approx(const FiniteMetricSpace& seed, std::size_t iterations,
                                          const Strategy& strategy);

struct Score {
  std::size_t realized = 0;
  std::size_t total = 0;
  Rational value() const { return total == 0 ? Rational{1} : Rational(static_cast<std::int64_t>(realized),
                                                                      static_cast<std::int64_t>(total)); }
};

/// Fraction of grid Katetov requests (on subsets of `request_points`, all
/// points when empty) realized exactly by some point of the space.
Score extension_property_score(const FiniteMetricSpace& space, std::size_t max_subset, const Rational& delta,
                               const Rational& cap, std::span<const std::size_t> request_points = {});

}  // namespace urysohn::katetov
