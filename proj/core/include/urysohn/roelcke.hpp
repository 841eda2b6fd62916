#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "urysohn/metric.hpp"

namespace urysohn::roelcke {

using metric::Embedding;
using metric::FiniteMetricSpace;

/// p : X x Y -> [0,1], the cross distances of a metric amalgam of X and Y
/// (both of diameter <= 1). Rows are Katetov over Y, columns over X.
class BiKatetovMatrix {
 public:
  BiKatetovMatrix() = default;

  const FiniteMetricSpace& left() const { return left_; }
  const FiniteMetricSpace& right() const { return right_; }
  std::size_t rows() const { return left_.size(); }
  std::size_t cols() const { return right_.size(); }
  const Rational& operator()(std::size_t x, std::size_t y) const { return p_[x * cols() + y]; }
  const std::vector<Rational>& entries() const { return p_; }
  metric::Matrix matrix() const;

  friend bool operator==(const BiKatetovMatrix&, const BiKatetovMatrix&) = default;

  /// Unchecked construction; entries are row-major.
  static BiKatetovMatrix trusted(FiniteMetricSpace left, FiniteMetricSpace right, std::vector<Rational> p);

 private:
  FiniteMetricSpace left_;
  FiniteMetricSpace right_;
  std::vector<Rational> p_;
};

using BiKatetovResult = std::variant<BiKatetovMatrix, Violation>;

/// Checks the row family |p(x,y) - p(x,y')| <= d(y,y') <= p(x,y) + p(x,y')
/// ("row-lipschitz", "row-triangle") and the column family over X
/// ("column-lipschitz", "column-triangle"). Throws DomainError for a space
/// of diameter > 1 or an entry outside [0,1], ShapeError for a mis-sized
/// matrix.
BiKatetovResult validate_bikatetov(const FiniteMetricSpace& left, const FiniteMetricSpace& right,
                                   const metric::Matrix& p);

BiKatetovMatrix make_bikatetov(const FiniteMetricSpace& left, const FiniteMetricSpace& right,
                               const metric::Matrix& p);

struct Amalgam {
  FiniteMetricSpace space;
  Embedding left_embedding;
  Embedding right_embedding;
};

/// Metric on X disjoint-union Y with cross distances p; points of Y at
/// distance 0 from a point of X are identified with it.
Amalgam amalgam(const BiKatetovMatrix& m);

/// r(x,y) = min(1, min over z of p(x,z) + q(z,y)), reducing over z in
/// ascending order. With this product graph_element(g) * graph_element(h)
/// equals graph_element(h o g).
BiKatetovMatrix compose(const BiKatetovMatrix& p, const BiKatetovMatrix& q);

/// p = d; the two-sided unit over X.
BiKatetovMatrix identity_element(const FiniteMetricSpace& space);

/// p_g(x,y) = d(g(x), y) for an isometry g of X.
BiKatetovMatrix graph_element(const FiniteMetricSpace& space, std::span<const std::size_t> isometry);

/// p_A(x,y) = min(1, min over a in A of d(x,a) + d(a,y)).
BiKatetovMatrix idempotent_from_subset(const FiniteMetricSpace& space, std::span<const std::size_t> subset);

/// {x : p(x,x) = 0} for an idempotent p over X x X.
std::vector<std::size_t> subset_from_idempotent(const BiKatetovMatrix& p);

bool is_idempotent(const BiKatetovMatrix& p);

/// Pointwise p <= q.
bool pointwise_leq(const BiKatetovMatrix& p, const BiKatetovMatrix& q);

struct GridIdempotent {
  BiKatetovMatrix element;
  /// The subset A with p_A equal to this element, if there is one.
  std::optional<std::vector<std::size_t>> subset;
};

/// All idempotent bi-Katetov matrices over X x X with entries on the grid
/// {0, delta, ..., 1}. Report-only: finite X is not U_1, so grid
/// idempotents without a matching subset are listed, not treated as errors.
/// Throws DomainError when the search space exceeds max_candidates.
std::vector<GridIdempotent> enumerate_grid_idempotents(const FiniteMetricSpace& space, const Rational& delta,
                                                       std::size_t max_candidates = 5'000'000);

/// Monotone lattice path from (0,0) to (n,n) with steps (1,0), (0,1) or
/// (1,1); the finite stand-in for a curve of H+(I)'s compactification.
struct StaircaseRelation {
  std::size_t n = 0;
  /// Sorted by (i + j, i).
  std::vector<std::pair<std::size_t, std::size_t>> cells;

  friend bool operator==(const StaircaseRelation&, const StaircaseRelation&) = default;
};

/// Sorts cells by (i + j, i) and drops duplicates.
StaircaseRelation normalize(StaircaseRelation rel);

bool is_staircase(const StaircaseRelation& rel);

/// Diagonal {(i,i)}: the graph of the identity.
StaircaseRelation diagonal_staircase(std::size_t n);

/// Relational composite {(i,k) : (i,j) in a, (j,k) in b}, without repair.
std::vector<std::pair<std::size_t, std::size_t>> relational_composite(const StaircaseRelation& a,
                                                                       const StaircaseRelation& b);

/// Relational composite repaired to a staircase. Each row i of the raw
/// composite is an interval [lo(i), hi(i)]; the result follows the
/// vertical-first (upper-left) boundary, occupying columns
/// [hi(i-1), hi(i)] of row i, or starting at lo(i) = hi(i-1) + 1 after a
/// diagonal step. It equals the raw composite whenever that is already a
/// staircase.
StaircaseRelation staircase_compose(const StaircaseRelation& a, const StaircaseRelation& b);

}  // namespace urysohn::roelcke
