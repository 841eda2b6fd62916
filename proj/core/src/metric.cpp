#include "urysohn/metric.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "detail/scaled.hpp"

namespace urysohn::metric {

namespace {

template <class T>
std::optional<Violation> check_axioms(std::size_t n, std::span<const T> d, Separation separation) {
  auto at = [&](std::size_t i, std::size_t j) -> const T& { return d[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    if (at(i, i) != T{0}) return Violation{"diagonal", {i}, "d(i,i) != 0"};
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (at(i, j) != at(j, i)) return Violation{"symmetry", {i, j}, "d(i,j) != d(j,i)"};
    }
  }
  if (separation == Separation::strict) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (at(i, j) == T{0}) return Violation{"separation", {i, j}, "d(i,j) = 0 for i != j"};
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const T& dij = at(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (at(i, k) > dij + at(j, k)) {
          return Violation{"triangle", {i, j, k}, "d(i,k) > d(i,j) + d(j,k)"};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Rational FiniteMetricSpace::diameter() const {
  Rational best{0};
  for (const Rational& v : d_) best = std::max(best, v);
  return best;
}

Matrix FiniteMetricSpace::matrix() const {
  Matrix m(n_, std::vector<Rational>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) m[i][j] = (*this)(i, j);
  }
  return m;
}

FiniteMetricSpace FiniteMetricSpace::trusted(std::size_t n, std::vector<Rational> flat,
                                             std::vector<std::string> labels, bool pseudo) {
  if (flat.size() != n * n) throw ShapeError("distance matrix must have n*n entries");
  if (!labels.empty() && labels.size() != n) throw ShapeError("labels must have n entries");
  FiniteMetricSpace space;
  space.n_ = n;
  space.d_ = std::move(flat);
  space.labels_ = std::move(labels);
  space.pseudo_ = pseudo;
  return space;
}

ValidationResult validate_metric(const Matrix& d, std::vector<std::string> labels, Separation separation) {
  const std::size_t n = d.size();
  for (const auto& row : d) {
    if (row.size() != n) throw ShapeError("distance matrix is not square");
  }
  if (!labels.empty() && labels.size() != n) throw ShapeError("labels must have n entries");

  std::vector<Rational> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (d[i][j].sign() < 0) {
        throw DomainError("negative distance at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      flat.push_back(d[i][j]);
    }
  }

  std::optional<Violation> violation;
  if (auto scaled = detail::common_scale(flat)) {
    violation = check_axioms<std::int64_t>(n, *scaled, separation);
  } else {
    violation = check_axioms<Rational>(n, flat, separation);
  }
  if (violation) return *violation;
  return FiniteMetricSpace::trusted(n, std::move(flat), std::move(labels), separation == Separation::pseudo);
}

std::string describe(const Violation& violation) {
  std::ostringstream os;
  os << violation.rule << " (";
  for (std::size_t i = 0; i < violation.witness.size(); ++i) {
    if (i) os << ",";
    os << violation.witness[i];
  }
  os << "): " << violation.detail;
  return os.str();
}

FiniteMetricSpace make_metric(const Matrix& d, std::vector<std::string> labels) {
  auto result = validate_metric(d, std::move(labels));
  if (auto* violation = std::get_if<Violation>(&result)) {
    throw DomainError("not a metric: " + describe(*violation));
  }
  return std::get<FiniteMetricSpace>(std::move(result));
}

FiniteMetricSpace restrict(const FiniteMetricSpace& space, std::span<const std::size_t> subset) {
  if (subset.empty()) throw DomainError("restrict: empty subset");
  std::vector<std::size_t> points(subset.begin(), subset.end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.back() >= space.size()) throw DomainError("restrict: point index out of range");

  const std::size_t m = points.size();
  std::vector<Rational> flat;
  flat.reserve(m * m);
  for (std::size_t i : points) {
    for (std::size_t j : points) flat.push_back(space(i, j));
  }
  std::vector<std::string> labels;
  if (!space.labels().empty()) {
    for (std::size_t i : points) labels.push_back(space.labels()[i]);
  }
  return FiniteMetricSpace::trusted(m, std::move(flat), std::move(labels), space.is_pseudometric());
}

bool is_isometric_embedding(const FiniteMetricSpace& a, const FiniteMetricSpace& b,
                            std::span<const std::size_t> map) {
  if (map.size() != a.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (std::size_t x : map) {
    if (x >= b.size() || used[x]) return false;
    used[x] = true;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a(i, j) != b(map[i], map[j])) return false;
    }
  }
  return true;
}

PartialIsometry::PartialIsometry(std::size_t source_size, std::size_t target_size)
    : forward_(source_size), backward_(target_size) {}

bool PartialIsometry::can_assign(const FiniteMetricSpace& a, const FiniteMetricSpace& b, std::size_t source,
                                 std::size_t target) const {
  if (forward_[source] || backward_[target]) return false;
  for (std::size_t s = 0; s < forward_.size(); ++s) {
    if (forward_[s] && a(source, s) != b(target, *forward_[s])) return false;
  }
  return true;
}

void PartialIsometry::assign(std::size_t source, std::size_t target) {
  forward_[source] = target;
  backward_[target] = source;
  ++assigned_;
}

void PartialIsometry::unassign(std::size_t source) {
  backward_[*forward_[source]].reset();
  forward_[source].reset();
  --assigned_;
}

Embedding PartialIsometry::total() const {
  Embedding out;
  out.reserve(forward_.size());
  for (const auto& t : forward_) {
    if (!t) throw PreconditionError("partial isometry is not total");
    out.push_back(*t);
  }
  return out;
}

namespace {

void embed_from(const FiniteMetricSpace& a, const FiniteMetricSpace& b, PartialIsometry& partial,
                std::size_t next, std::vector<Embedding>& out) {
  if (next == a.size()) {
    out.push_back(partial.total());
    return;
  }
  for (std::size_t t = 0; t < b.size(); ++t) {
    if (!partial.can_assign(a, b, next, t)) continue;
    partial.assign(next, t);
    embed_from(a, b, partial, next + 1, out);
    partial.unassign(next);
  }
}

std::vector<std::vector<Rational>> sorted_rows(const FiniteMetricSpace& space) {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < space.size(); ++i) {
    auto r = space.row(i);
    rows.emplace_back(r.begin(), r.end());
    std::sort(rows.back().begin(), rows.back().end());
  }
  return rows;
}

struct ShuttleSearch {
  const FiniteMetricSpace& a;
  const FiniteMetricSpace& b;
  std::vector<std::vector<Rational>> profile_a;
  std::vector<std::vector<Rational>> profile_b;
  PartialIsometry partial;

  bool run(bool forth) {
    if (partial.is_total()) return true;
    const std::size_t n = a.size();
    if (forth) {
      std::size_t s = 0;
      while (partial.image(s)) ++s;
      for (std::size_t t = 0; t < n; ++t) {
        if (profile_a[s] != profile_b[t] || !partial.can_assign(a, b, s, t)) continue;
        partial.assign(s, t);
        if (run(false)) return true;
        partial.unassign(s);
      }
    } else {
      std::size_t t = 0;
      while (partial.preimage(t)) ++t;
      for (std::size_t s = 0; s < n; ++s) {
        if (profile_a[s] != profile_b[t] || !partial.can_assign(a, b, s, t)) continue;
        partial.assign(s, t);
        if (run(true)) return true;
        partial.unassign(s);
      }
    }
    return false;
  }
};

}  // namespace

std::vector<Embedding> isometric_embeddings(const FiniteMetricSpace& a, const FiniteMetricSpace& b) {
  std::vector<Embedding> out;
  if (a.size() > b.size()) return out;
  PartialIsometry partial(a.size(), b.size());
  embed_from(a, b, partial, 0, out);
  return out;
}

std::optional<Embedding> back_and_forth(const FiniteMetricSpace& a, const FiniteMetricSpace& b) {
  if (a.size() != b.size()) return std::nullopt;
  ShuttleSearch search{a, b, sorted_rows(a), sorted_rows(b), PartialIsometry(a.size(), b.size())};
  // Row profiles are isometry invariants; mismatched multisets end the search early.
  auto pa = search.profile_a;
  auto pb = search.profile_b;
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  if (pa != pb) return std::nullopt;
  if (!search.run(true)) return std::nullopt;
  return search.partial.total();
}

FiniteMetricSpace random_metric(std::size_t n, std::int64_t denom_bound, std::optional<Rational> cap,
                                std::uint64_t seed) {
  if (n == 0) throw DomainError("random_metric: n must be >= 1");
  return extend_random(FiniteMetricSpace::trusted(1, {Rational{0}}), n - 1, denom_bound, cap, seed);
}

FiniteMetricSpace extend_random(const FiniteMetricSpace& base, std::size_t extra, std::int64_t denom_bound,
                                std::optional<Rational> cap, std::uint64_t seed) {
  if (base.size() == 0) throw DomainError("random_metric: base space must be nonempty");
  if (denom_bound <= 0) throw DomainError("random_metric: denom_bound must be positive");
  if (cap && cap->sign() <= 0) throw DomainError("random_metric: cap must be positive");

  const std::size_t n = base.size() + extra;
  std::mt19937_64 rng(seed);
  const Rational floor_value(1, denom_bound);
  std::vector<Rational> d(n * n, Rational{0});
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return d[i * n + j]; };
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = 0; j < base.size(); ++j) at(i, j) = base(i, j);
  }

  for (std::size_t m = base.size(); m < n; ++m) {
    for (std::size_t i = 0; i < m; ++i) {
      Rational lower{0};
      std::optional<Rational> upper = cap;
      for (std::size_t j = 0; j < i; ++j) {
        lower = std::max(lower, abs(at(m, j) - at(i, j)));
        Rational through = at(m, j) + at(i, j);
        upper = upper ? std::min(*upper, through) : through;
      }
      lower = std::max(lower, floor_value);
      if (!upper) upper = Rational{1};
      // Grid points k/denom_bound inside [lower, upper].
      std::int64_t k_lo = (lower * Rational(denom_bound)).ceil();
      std::int64_t k_hi = (*upper * Rational(denom_bound)).floor();
      if (k_lo > k_hi) {
        throw GenerationError("random_metric: empty admissible interval for pair (" + std::to_string(m) + "," +
                              std::to_string(i) + ")");
      }
      std::uniform_int_distribution<std::int64_t> pick(k_lo, k_hi);
      Rational value(pick(rng), denom_bound);
      at(m, i) = value;
      at(i, m) = value;
    }
  }
  return FiniteMetricSpace::trusted(n, std::move(d));
}

Quotient merge_zero_distances(const FiniteMetricSpace& pseudometric) {
  const std::size_t n = pseudometric.size();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> class_of(n, unset);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < n; ++i) {
    if (class_of[i] != unset) continue;
    class_of[i] = reps.size();
    for (std::size_t j = i + 1; j < n; ++j) {
      if (class_of[j] == unset && pseudometric(i, j).is_zero()) class_of[j] = reps.size();
    }
    reps.push_back(i);
  }
  std::vector<Rational> flat;
  flat.reserve(reps.size() * reps.size());
  for (std::size_t i : reps) {
    for (std::size_t j : reps) flat.push_back(pseudometric(i, j));
  }
  std::vector<std::string> labels;
  if (!pseudometric.labels().empty()) {
    for (std::size_t i : reps) labels.push_back(pseudometric.labels()[i]);
  }
  return {FiniteMetricSpace::trusted(reps.size(), std::move(flat), std::move(labels)), std::move(class_of)};
}

}  // namespace urysohn::metric
