#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace urysohn::flows {

/// Map {0..n-1} -> {0..n-1} given by its image vector.
class SelfMap {
 public:
  SelfMap() = default;
  explicit SelfMap(std::vector<std::uint32_t> images);

  static SelfMap identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  std::uint32_t operator()(std::size_t x) const { return images_[x]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  /// Product s.then(t): apply s, then t.
  SelfMap then(const SelfMap& t) const;

  bool is_permutation() const;
  bool is_idempotent() const;
  std::size_t rank() const;
  SelfMap inverse() const;

  friend bool operator==(const SelfMap&, const SelfMap&) = default;
  friend auto operator<=>(const SelfMap&, const SelfMap&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct SelfMapHash {
  std::size_t operator()(const SelfMap& s) const noexcept;
};

/// Finite semigroup of self-maps with product s * t = "apply s, then t".
/// Products are resolved on demand by composing images and looking the
/// result up, so large semigroups do not need a quadratic table.
class TransformationSemigroup {
 public:
  std::size_t degree() const { return degree_; }
  std::size_t size() const { return elements_.size(); }
  const SelfMap& element(std::size_t i) const { return elements_[i]; }
  const std::vector<SelfMap>& elements() const { return elements_; }
  /// The distinct generators are elements 0 .. generator_count() - 1.
  std::size_t generator_count() const { return generator_count_; }

  std::size_t product(std::size_t s, std::size_t t) const;
  std::optional<std::size_t> index_of(const SelfMap& map) const;

  /// Full multiplication table, row-major: table[s * size() + t] = s * t.
  std::vector<std::size_t> table() const;

  friend TransformationSemigroup generate_semigroup(std::span<const SelfMap> generators);

 private:
  std::size_t degree_ = 0;
  std::size_t generator_count_ = 0;
  std::vector<SelfMap> elements_;
  std::unordered_map<SelfMap, std::size_t, SelfMapHash> index_;
};

/// Breadth-first closure of the generators under the product; elements are
/// listed in order of discovery, generators first.
TransformationSemigroup generate_semigroup(std::span<const SelfMap> generators);

struct PowerIdempotent {
  SelfMap idempotent;
  /// idempotent = s^exponent.
  std::size_t exponent;
  /// s^index = s^(index + period) is the first repetition among the powers.
  std::size_t index;
  std::size_t period;
};

/// The unique idempotent power of s.
PowerIdempotent find_idempotent(const SelfMap& s);

/// Idempotent power of the first element of a nonempty semigroup.
std::size_t find_idempotent(const TransformationSemigroup& semigroup);

/// Idempotent found by descending through subsemigroups: for Y and a in Y,
/// replace Y by Ya if that is smaller, otherwise by {x in Y : xa = a} if
/// that is smaller; when neither shrinks, a is idempotent.
std::size_t find_idempotent_by_descent(const TransformationSemigroup& semigroup);

/// S s together with s, sorted. Found by closing {s} under left
/// multiplication by the generators.
std::vector<std::size_t> principal_left_ideal(const TransformationSemigroup& semigroup, std::size_t s);

bool is_left_ideal(const TransformationSemigroup& semigroup, std::span<const std::size_t> subset);
bool is_minimal_left_ideal(const TransformationSemigroup& semigroup, std::span<const std::size_t> subset);

/// All minimal left ideals, each sorted, listed by smallest element. They
/// are the principal left ideals of elements of minimum rank.
std::vector<std::vector<std::size_t>> minimal_left_ideals(const TransformationSemigroup& semigroup);

struct StructureReport {
  /// (a) idempotent p in M with x * p = x for all x in M.
  std::optional<std::size_t> right_identity;
  /// (b) y in M whose right translation is not a bijection of M.
  std::optional<std::size_t> non_bijective_translation;
  /// (c) S-equivariant self-maps of M as image vectors over M's order, each
  /// paired with the y realizing it as x -> x * y (nullopt when none does).
  std::vector<std::vector<std::size_t>> equivariant_maps;
  std::vector<std::optional<std::size_t>> realizing_translation;
  /// (d) (index of M', a) such that x -> x * a is not an equivariant
  /// bijection M -> M'.
  std::optional<std::pair<std::size_t, std::size_t>> failed_isomorphism;
  std::size_t ideals_compared = 0;

  bool holds() const;
};

/// Checks the structure of a minimal left ideal. Throws PreconditionError
/// if `ideal` is not a minimal left ideal.
StructureReport verify_ideal_structure(const TransformationSemigroup& semigroup, std::span<const std::size_t> ideal);

/// Group given by permutation generators of {0..n-1}.
struct FiniteAction {
  std::size_t n = 0;
  std::vector<SelfMap> generators;
};

/// Throws DomainError unless every generator is a permutation of degree n.
void validate_action(const FiniteAction& action);

/// Elements of the generated group, identity first.
std::vector<SelfMap> group_elements(const FiniteAction& action);

std::vector<std::vector<std::size_t>> orbits(const FiniteAction& action);
bool is_minimal(const FiniteAction& action);

/// One orbit on k-tuples of distinct points; k in 1..3 (larger k is
/// accepted). Throws DomainError if n < k.
bool is_k_transitive(const FiniteAction& action, std::size_t k);

/// A_1 < A_2 < ... < A_n with |A_k| = k, stored as bitmasks (n <= 64).
struct MaximalChain {
  std::size_t n = 0;
  std::vector<std::uint64_t> sets;

  /// Point added at each step.
  std::vector<std::size_t> order() const;
  static MaximalChain from_order(std::span<const std::size_t> order);

  friend bool operator==(const MaximalChain&, const MaximalChain&) = default;
  friend auto operator<=>(const MaximalChain&, const MaximalChain&) = default;
};

/// All n! maximal chains, in lexicographic order of the point order.
std::vector<MaximalChain> maximal_chains(std::size_t n);

MaximalChain chain_action(const SelfMap& g, const MaximalChain& chain);

/// The action induced on maximal_chains(n) by each generator of `action`.
FiniteAction chain_space_action(const FiniteAction& action);

struct EquivariantSearch {
  /// Equivariant maps X -> T in lexicographic order (at most max_results).
  std::vector<std::vector<std::size_t>> maps;
  /// Total number of equivariant maps (saturating).
  std::uint64_t count = 0;
  /// The search covered every orbit representative and admissible target.
  bool exhaustive = true;
  /// Admissible targets per orbit representative: points of T fixed by the
  /// representative's stabilizer.
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> admissible;
};

/// All maps f : X -> T with f(g x) = g f(x), where the i-th generator of
/// `source` and of `target` represent the same group element. Throws
/// DomainError when the generator lists differ in length.
EquivariantSearch equivariant_maps(const FiniteAction& source, const FiniteAction& target,
                                   std::size_t max_results = 100'000);

struct LaminarChainMap {
  /// chains[x]: members of the family containing x, smallest first.
  std::vector<std::vector<std::uint64_t>> chains;
  bool chains_nested = false;
  bool equivariant = false;
};

/// x -> C_x = {F in family : x in F} for a laminar family containing the
/// whole set and every singleton, with its chain and equivariance
/// certificates. Throws DomainError for a non-laminar family, a missing
/// whole set or singleton, or an action that does not permute the family.
LaminarChainMap laminar_chain_map(std::size_t n, std::span<const std::uint64_t> family, const FiniteAction& action);

struct LinearOrdersFlow {
  std::size_t n = 0;
  /// Strict orders as n*n relation bitmasks (bit a*n + b means a before b).
  std::vector<std::uint64_t> orders;
  bool invariant = false;
  std::size_t orbit_count = 0;
  bool minimal = false;
  /// Orbit sizes of the action on all of 2^(E x E), sorted; only for n <= 3.
  std::vector<std::size_t> full_space_orbit_sizes;
};

/// Symmetric group S_n (generated by (0 1) and the n-cycle) on linear orders.
LinearOrdersFlow linear_orders_flow(std::size_t n);

/// Generators (0 1) and (0 1 ... n-1) of S_n.
FiniteAction symmetric_group(std::size_t n);

}  // namespace urysohn::flows
