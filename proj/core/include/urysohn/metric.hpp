#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "urysohn/errors.hpp"
#include "urysohn/rational.hpp"

namespace urysohn::metric {

using Matrix = std::vector<std::vector<Rational>>;

/// Total map from the points of one space into another, by index.
using Embedding = std::vector<std::size_t>;

enum class Separation { strict, pseudo };

/// Finite metric space over the points 0..n-1 with exact rational distances.
///
/// Instances are only produced by validate_metric (or by operations that
/// preserve the axioms), so holding one means the axioms hold. Labels are
/// decorative; equality compares distances only.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace() = default;

  std::size_t size() const { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
  std::span<const Rational> row(std::size_t i) const { return {d_.data() + i * n_, n_}; }

  const std::vector<std::string>& labels() const { return labels_; }
  bool is_pseudometric() const { return pseudo_; }

  Rational diameter() const;
  Matrix matrix() const;

  friend bool operator==(const FiniteMetricSpace& a, const FiniteMetricSpace& b) {
    return a.n_ == b.n_ && a.d_ == b.d_;
  }

  /// Builds a space from a row-major matrix without checking the axioms.
  /// Callers must guarantee them; used by operations whose output is a
  /// metric by construction.
  static FiniteMetricSpace trusted(std::size_t n, std::vector<Rational> flat,
                                   std::vector<std::string> labels = {}, bool pseudo = false);

 private:
  std::size_t n_ = 0;
  std::vector<Rational> d_;
  std::vector<std::string> labels_;
  bool pseudo_ = false;
};

using ValidationResult = std::variant<FiniteMetricSpace, Violation>;

/// Checks the metric axioms and returns the space or the first violation.
///
/// Violations are reported in this order: "diagonal" (index i), "symmetry"
/// (pair i, j), "separation" (pair i, j, strict mode only) and "triangle"
/// (triple i, j, k with d(i,k) > d(i,j) + d(j,k)). Throws ShapeError for a
/// non-square matrix or mislengthed labels and DomainError for a negative
/// entry.
ValidationResult validate_metric(const Matrix& d, std::vector<std::string> labels = {},
                                 Separation separation = Separation::strict);

/// validate_metric that throws DomainError (naming the violation) instead.
FiniteMetricSpace make_metric(const Matrix& d, std::vector<std::string> labels = {});

std::string describe(const Violation& violation);

/// Induced subspace on `subset`; duplicates are dropped and the order of
/// the parent space is kept.
FiniteMetricSpace restrict(const FiniteMetricSpace& space, std::span<const std::size_t> subset);

/// True iff `map` is a total injective distance-preserving map a -> b.
bool is_isometric_embedding(const FiniteMetricSpace& a, const FiniteMetricSpace& b,
                            std::span<const std::size_t> map);

/// Partial injective map between point sets, built up by back-and-forth.
class PartialIsometry {
 public:
  PartialIsometry(std::size_t source_size, std::size_t target_size);

  std::size_t source_size() const { return forward_.size(); }
  std::size_t target_size() const { return backward_.size(); }
  std::optional<std::size_t> image(std::size_t source) const { return forward_[source]; }
  std::optional<std::size_t> preimage(std::size_t target) const { return backward_[target]; }

  /// True iff assigning source -> target keeps every assigned distance.
  bool can_assign(const FiniteMetricSpace& a, const FiniteMetricSpace& b, std::size_t source,
                  std::size_t target) const;
  void assign(std::size_t source, std::size_t target);
  void unassign(std::size_t source);

  std::size_t assigned() const { return assigned_; }
  bool is_total() const { return assigned_ == forward_.size(); }
  Embedding total() const;

 private:
  std::vector<std::optional<std::size_t>> forward_;
  std::vector<std::optional<std::size_t>> backward_;
  std::size_t assigned_ = 0;
};

/// All isometric embeddings a -> b in lexicographic order of the image vector.
std::vector<Embedding> isometric_embeddings(const FiniteMetricSpace& a, const FiniteMetricSpace& b);

/// Searches for an isometry a -> b by alternately extending a partial
/// isometry at the lowest unmatched source point (forth) and at the lowest
/// unmatched target point (back), trying candidates in index order and
/// backtracking on failure. Returns nullopt when none exists.
std::optional<Embedding> back_and_forth(const FiniteMetricSpace& a, const FiniteMetricSpace& b);

/// Sequential random metric on the grid (1/denom_bound)Z.
///
/// Point m is attached to points 0..m-1 in index order; d(m,i) is drawn
/// uniformly from the grid values in [max(L, 1/denom_bound), U] where L and
/// U are the triangle bounds through the points j < i. Unconstrained pairs
/// (i = 0) use U = cap, or 1 when no cap is given.
FiniteMetricSpace random_metric(std::size_t n, std::int64_t denom_bound, std::optional<Rational> cap,
                                std::uint64_t seed);

/// Appends `extra` points to `base` by the same sequential rule, keeping the
/// distances of `base`. Base points bound later choices only through their
/// distances, so the base may have any diameter.
FiniteMetricSpace extend_random(const FiniteMetricSpace& base, std::size_t extra, std::int64_t denom_bound,
                                std::optional<Rational> cap, std::uint64_t seed);

struct Quotient {
  FiniteMetricSpace space;
  /// class_of[i] is the index of original point i in the quotient.
  std::vector<std::size_t> class_of;
};

/// Identifies points at distance zero. The representative of a class is its
/// lowest-index member, and classes keep the order of their representatives.
Quotient merge_zero_distances(const FiniteMetricSpace& pseudometric);

}  // namespace urysohn::metric
