#include "urysohn/roelcke.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace urysohn::roelcke {

namespace {

const Rational kOne{1};

void require_unit_diameter(const FiniteMetricSpace& space, const char* what) {
  if (space.diameter() > kOne) throw DomainError(std::string(what) + ": space has diameter > 1");
}

metric::Matrix assemble(const FiniteMetricSpace& left, const FiniteMetricSpace& right,
                        const std::vector<Rational>& p) {
  const std::size_t n = left.size();
  const std::size_t m = right.size();
  metric::Matrix d(n + m, std::vector<Rational>(n + m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d[i][j] = left(i, j);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) d[n + i][n + j] = right(i, j);
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      d[x][n + y] = p[x * m + y];
      d[n + y][x] = p[x * m + y];
    }
  }
  return d;
}

std::optional<Violation> check_families(const FiniteMetricSpace& left, const FiniteMetricSpace& right,
                                        const std::vector<Rational>& p) {
  const std::size_t n = left.size();
  const std::size_t m = right.size();
  auto at = [&](std::size_t x, std::size_t y) -> const Rational& { return p[x * m + y]; };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      for (std::size_t y2 = y + 1; y2 < m; ++y2) {
        if (abs(at(x, y) - at(x, y2)) > right(y, y2)) {
          return Violation{"row-lipschitz", {x, y, y2}, "|p(x,y) - p(x,y')| > d(y,y')"};
        }
        if (right(y, y2) > at(x, y) + at(x, y2)) {
          return Violation{"row-triangle", {x, y, y2}, "d(y,y') > p(x,y) + p(x,y')"};
        }
      }
    }
  }
  for (std::size_t y = 0; y < m; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t x2 = x + 1; x2 < n; ++x2) {
        if (abs(at(x, y) - at(x2, y)) > left(x, x2)) {
          return Violation{"column-lipschitz", {x, x2, y}, "|p(x,y) - p(x',y)| > d(x,x')"};
        }
        if (left(x, x2) > at(x, y) + at(x2, y)) {
          return Violation{"column-triangle", {x, x2, y}, "d(x,x') > p(x,y) + p(x',y)"};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

metric::Matrix BiKatetovMatrix::matrix() const {
  metric::Matrix m(rows(), std::vector<Rational>(cols()));
  for (std::size_t x = 0; x < rows(); ++x) {
    for (std::size_t y = 0; y < cols(); ++y) m[x][y] = (*this)(x, y);
  }
  return m;
}

BiKatetovMatrix BiKatetovMatrix::trusted(FiniteMetricSpace left, FiniteMetricSpace right, std::vector<Rational> p) {
  if (p.size() != left.size() * right.size()) throw ShapeError("bi-Katetov matrix has the wrong number of entries");
  BiKatetovMatrix m;
  m.left_ = std::move(left);
  m.right_ = std::move(right);
  m.p_ = std::move(p);
  return m;
}

BiKatetovResult validate_bikatetov(const FiniteMetricSpace& left, const FiniteMetricSpace& right,
                                   const metric::Matrix& p) {
  require_unit_diameter(left, "validate_bikatetov");
  require_unit_diameter(right, "validate_bikatetov");
  if (p.size() != left.size()) throw ShapeError("bi-Katetov matrix must have one row per left point");
  std::vector<Rational> flat;
  flat.reserve(left.size() * right.size());
  for (const auto& row : p) {
    if (row.size() != right.size()) throw ShapeError("bi-Katetov matrix must have one column per right point");
    for (const Rational& v : row) {
      if (v.sign() < 0 || v > kOne) throw DomainError("bi-Katetov entry outside [0,1]");
      flat.push_back(v);
    }
  }
  if (auto violation = check_families(left, right, flat)) return *violation;

  auto cross = metric::validate_metric(assemble(left, right, flat), {}, metric::Separation::pseudo);
  if (auto* violation = std::get_if<Violation>(&cross)) {
    throw std::logic_error("bi-Katetov families hold but the amalgam is not a pseudometric: " +
                           metric::describe(*violation));
  }
  return BiKatetovMatrix::trusted(left, right, std::move(flat));
}

BiKatetovMatrix make_bikatetov(const FiniteMetricSpace& left, const FiniteMetricSpace& right,
                               const metric::Matrix& p) {
  auto result = validate_bikatetov(left, right, p);
  if (auto* violation = std::get_if<Violation>(&result)) {
    throw DomainError("not bi-Katetov: " + metric::describe(*violation));
  }
  return std::get<BiKatetovMatrix>(std::move(result));
}

Amalgam amalgam(const BiKatetovMatrix& m) {
  auto validated = metric::validate_metric(assemble(m.left(), m.right(), m.entries()), {}, metric::Separation::pseudo);
  if (auto* violation = std::get_if<Violation>(&validated)) {
    throw std::logic_error("amalgam is not a pseudometric: " + metric::describe(*violation));
  }
  auto quotient = metric::merge_zero_distances(std::get<FiniteMetricSpace>(validated));
  Amalgam out;
  out.space = std::move(quotient.space);
  const std::size_t n = m.rows();
  out.left_embedding.assign(quotient.class_of.begin(), quotient.class_of.begin() + static_cast<std::ptrdiff_t>(n));
  out.right_embedding.assign(quotient.class_of.begin() + static_cast<std::ptrdiff_t>(n), quotient.class_of.end());
  return out;
}

BiKatetovMatrix compose(const BiKatetovMatrix& p, const BiKatetovMatrix& q) {
  if (!(p.right() == q.left())) throw DomainError("compose: middle spaces differ");
  const std::size_t n = p.rows();
  const std::size_t mid = p.cols();
  const std::size_t m = q.cols();
  std::vector<Rational> r(n * m);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      Rational best = kOne;
      for (std::size_t z = 0; z < mid; ++z) best = std::min(best, p(x, z) + q(z, y));
      r[x * m + y] = best;
    }
  }
  return BiKatetovMatrix::trusted(p.left(), q.right(), std::move(r));
}

BiKatetovMatrix identity_element(const FiniteMetricSpace& space) {
  require_unit_diameter(space, "identity_element");
  std::vector<Rational> p(space.size() * space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    for (std::size_t y = 0; y < space.size(); ++y) p[x * space.size() + y] = space(x, y);
  }
  return BiKatetovMatrix::trusted(space, space, std::move(p));
}

BiKatetovMatrix graph_element(const FiniteMetricSpace& space, std::span<const std::size_t> isometry) {
  require_unit_diameter(space, "graph_element");
  if (isometry.size() != space.size() || !metric::is_isometric_embedding(space, space, isometry)) {
    throw DomainError("graph_element: map is not an isometry of the space");
  }
  const std::size_t n = space.size();
  std::vector<Rational> p(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) p[x * n + y] = space(isometry[x], y);
  }
  return BiKatetovMatrix::trusted(space, space, std::move(p));
}

BiKatetovMatrix idempotent_from_subset(const FiniteMetricSpace& space, std::span<const std::size_t> subset) {
  require_unit_diameter(space, "idempotent_from_subset");
  if (subset.empty()) throw DomainError("idempotent_from_subset: empty subset");
  for (std::size_t a : subset) {
    if (a >= space.size()) throw DomainError("idempotent_from_subset: point outside the space");
  }
  const std::size_t n = space.size();
  std::vector<Rational> p(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Rational best = kOne;
      for (std::size_t a : subset) best = std::min(best, space(x, a) + space(a, y));
      p[x * n + y] = best;
    }
  }
  return BiKatetovMatrix::trusted(space, space, std::move(p));
}

bool is_idempotent(const BiKatetovMatrix& p) {
  if (!(p.left() == p.right())) return false;
  return compose(p, p) == p;
}

std::vector<std::size_t> subset_from_idempotent(const BiKatetovMatrix& p) {
  if (!is_idempotent(p)) throw DomainError("subset_from_idempotent: element is not idempotent");
  std::vector<std::size_t> subset;
  for (std::size_t x = 0; x < p.rows(); ++x) {
    if (p(x, x).is_zero()) subset.push_back(x);
  }
  return subset;
}

bool pointwise_leq(const BiKatetovMatrix& p, const BiKatetovMatrix& q) {
  if (p.rows() != q.rows() || p.cols() != q.cols()) throw DomainError("pointwise_leq: shape mismatch");
  for (std::size_t i = 0; i < p.entries().size(); ++i) {
    if (p.entries()[i] > q.entries()[i]) return false;
  }
  return true;
}

std::vector<GridIdempotent> enumerate_grid_idempotents(const FiniteMetricSpace& space, const Rational& delta,
                                                       std::size_t max_candidates) {
  require_unit_diameter(space, "enumerate_grid_idempotents");
  if (delta.sign() <= 0) throw DomainError("enumerate_grid_idempotents: delta must be positive");
  const std::size_t n = space.size();
  std::vector<Rational> levels;
  for (std::int64_t k = 0; delta * k <= kOne; ++k) levels.push_back(delta * k);
  const double log_size = static_cast<double>(n * n) * std::log(static_cast<double>(levels.size()));
  if (log_size > std::log(static_cast<double>(max_candidates))) {
    throw DomainError("enumerate_grid_idempotents: grid search space too large");
  }

  std::map<std::vector<Rational>, std::vector<std::size_t>> by_subset;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) subset.push_back(i);
    }
    by_subset.emplace(idempotent_from_subset(space, subset).entries(), subset);
  }

  std::vector<GridIdempotent> out;
  std::vector<Rational> cell(n * n);
  auto consistent = [&](std::size_t pos) {
    const std::size_t x = pos / n;
    const std::size_t y = pos % n;
    const Rational& v = cell[pos];
    for (std::size_t y2 = 0; y2 < y; ++y2) {
      const Rational& w = cell[x * n + y2];
      if (abs(v - w) > space(y, y2) || space(y, y2) > v + w) return false;
    }
    for (std::size_t x2 = 0; x2 < x; ++x2) {
      const Rational& w = cell[x2 * n + y];
      if (abs(v - w) > space(x, x2) || space(x, x2) > v + w) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t pos) -> void {
    if (pos == n * n) {
      auto candidate = BiKatetovMatrix::trusted(space, space, cell);
      if (compose(candidate, candidate) == candidate) {
        GridIdempotent found{candidate, std::nullopt};
        if (auto it = by_subset.find(cell); it != by_subset.end()) found.subset = it->second;
        out.push_back(std::move(found));
      }
      return;
    }
    for (const Rational& v : levels) {
      cell[pos] = v;
      if (consistent(pos)) self(self, pos + 1);
    }
  };
  search(search, 0);
  return out;
}

StaircaseRelation normalize(StaircaseRelation rel) {
  auto key = [](const std::pair<std::size_t, std::size_t>& c) { return std::pair(c.first + c.second, c.first); };
  std::sort(rel.cells.begin(), rel.cells.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  rel.cells.erase(std::unique(rel.cells.begin(), rel.cells.end()), rel.cells.end());
  return rel;
}

bool is_staircase(const StaircaseRelation& rel) {
  const std::size_t n = rel.n;
  if (rel.cells.empty() || !(normalize(rel) == rel)) return false;
  if (rel.cells.front() != std::pair<std::size_t, std::size_t>{0, 0}) return false;
  if (rel.cells.back() != std::pair<std::size_t, std::size_t>{n, n}) return false;
  for (std::size_t k = 1; k < rel.cells.size(); ++k) {
    auto [i0, j0] = rel.cells[k - 1];
    auto [i1, j1] = rel.cells[k];
    if (i1 > n || j1 > n || i1 < i0 || j1 < j0) return false;
    const std::size_t di = i1 - i0;
    const std::size_t dj = j1 - j0;
    if (di > 1 || dj > 1 || di + dj == 0) return false;
  }
  return true;
}

StaircaseRelation diagonal_staircase(std::size_t n) {
  StaircaseRelation rel{n, {}};
  for (std::size_t i = 0; i <= n; ++i) rel.cells.emplace_back(i, i);
  return rel;
}

std::vector<std::pair<std::size_t, std::size_t>> relational_composite(const StaircaseRelation& a,
                                                                       const StaircaseRelation& b) {
  if (a.n != b.n) throw DomainError("staircase_compose: grid sizes differ");
  const std::size_t n = a.n;
  std::vector<std::vector<std::size_t>> b_rows(n + 1);
  for (auto [j, k] : b.cells) b_rows[j].push_back(k);
  std::vector<std::vector<bool>> hit(n + 1, std::vector<bool>(n + 1, false));
  for (auto [i, j] : a.cells) {
    for (std::size_t k : b_rows[j]) hit[i][k] = true;
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t k = 0; k <= n; ++k) {
      if (hit[i][k]) out.emplace_back(i, k);
    }
  }
  return out;
}

StaircaseRelation staircase_compose(const StaircaseRelation& a, const StaircaseRelation& b) {
  if (a.n != b.n) throw DomainError("staircase_compose: grid sizes differ");
  if (!is_staircase(a) || !is_staircase(b)) throw DomainError("staircase_compose: input is not a staircase");
  const std::size_t n = a.n;
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> lo(n + 1, none);
  std::vector<std::size_t> hi(n + 1, 0);
  for (auto [i, k] : relational_composite(a, b)) {
    lo[i] = std::min(lo[i], k);
    hi[i] = std::max(hi[i], k);
  }

  StaircaseRelation out{n, {}};
  std::size_t column = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    std::size_t start = column;
    if (i > 0) {
      if (lo[i] > column + 1) {
        // Vertical-first fill of a gap wider than one diagonal step.
        for (std::size_t k = column + 1; k < lo[i]; ++k) out.cells.emplace_back(i - 1, k);
        column = lo[i] - 1;
      }
      start = lo[i] > column ? column + 1 : column;
    }
    const std::size_t stop = std::max(hi[i], start);
    for (std::size_t k = start; k <= stop; ++k) out.cells.emplace_back(i, k);
    column = stop;
  }
  return normalize(std::move(out));
}

}  // namespace urysohn::roelcke
