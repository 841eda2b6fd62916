#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "urysohn/rational.hpp"

namespace urysohn::syndetic {

/// A finite piece of a set of integers seen through the window [-N, N].
struct IntegerWindowSet {
  std::int64_t window = 0;
  std::vector<std::int64_t> members;

  bool contains(std::int64_t x) const;
  friend bool operator==(const IntegerWindowSet&, const IntegerWindowSet&) = default;
};

/// Sorts and deduplicates; throws DomainError for a negative window or a
/// member outside [-window, window].
IntegerWindowSet make_window_set(std::int64_t window, std::vector<std::int64_t> members);

IntegerWindowSet full_window(std::int64_t window);

struct GapReport {
  bool syndetic = false;
  /// Largest difference between consecutive members.
  std::int64_t max_gap = 0;
  /// First consecutive pair attaining max_gap.
  std::optional<std::pair<std::int64_t, std::int64_t>> widest;
  /// Gaps in the outer half of the window exceed those in the inner half.
  bool growing_gaps = false;
};

/// An empty set, or a single point in a nontrivial window, is reported
/// non-syndetic; otherwise the set is syndetic within the window at bound
/// max_gap.
GapReport is_syndetic(const IntegerWindowSet& s);

struct WindowResult {
  IntegerWindowSet set;
  /// Membership is exact on [-reliable, reliable].
  std::int64_t reliable = 0;
};

/// S - S restricted to the window; reliable on [-N/2, N/2].
WindowResult difference_set(const IntegerWindowSet& s);

/// S - S + S restricted to the window; reliable on [-N/3, N/3].
WindowResult triple_sum(const IntegerWindowSet& s);

/// Characters n -> exp(2 pi i theta n), theta rational in [0,1), and eps > 0.
struct BohrSpec {
  std::vector<Rational> thetas;
  Rational eps;

  friend bool operator==(const BohrSpec&, const BohrSpec&) = default;
};

void validate_spec(const BohrSpec& spec);

/// Decides 4 sin^2(pi a / b) < eps2 exactly, for 0 <= a < b.
bool chord_below(std::int64_t a, std::int64_t b, const Rational& eps2);

/// {n in [-N, N] : |exp(2 pi i theta n) - 1| < eps for every theta}.
/// eps > 2 gives the whole window; eps = 2 is evaluated strictly.
IntegerWindowSet bohr_members(const BohrSpec& spec, std::int64_t window);

struct BohrCheck {
  std::int64_t window = 0;
  bool syndetic = false;
  std::int64_t triple_reliable = 0;
  std::int64_t difference_reliable = 0;
  std::size_t bohr_size = 0;
  /// Bohr members on [-N/3, N/3] missing from S - S + S.
  std::vector<std::int64_t> violations;
  /// Bohr members on [-N/2, N/2] missing from S - S. Reported, not judged.
  std::vector<std::int64_t> difference_misses;

  bool holds() const { return violations.empty(); }
};

BohrCheck check_triple_sum_bohr(const IntegerWindowSet& s, const BohrSpec& spec);

/// Multiplication table of a finite group, table[a][b] = a * b.
using GroupTable = std::vector<std::vector<std::size_t>>;

/// Identity of a valid group table; throws DomainError otherwise.
std::size_t validate_group(const GroupTable& table);

struct PestovWitness {
  bool extremely_amenable = false;
  std::size_t identity = 0;
  /// Left-syndetic S with F S = G and S S^-1 != G.
  std::vector<std::size_t> s;
  std::vector<std::size_t> f;
  std::vector<std::size_t> s_s_inverse;
  bool fs_covers = false;
  bool s_s_inverse_proper = false;
  /// Nonempty subsets S with S S^-1 != G, counted exhaustively when
  /// |G| <= 12.
  std::optional<std::size_t> proper_subsets;
};

PestovWitness pestov_witness(const GroupTable& table);

struct NamedGroup {
  std::string name;
  GroupTable table;
};

/// The 23 nontrivial groups of order at most 12, one per isomorphism type.
std::vector<NamedGroup> small_groups();

/// Table of the group generated by permutations of {0..n-1}.
GroupTable permutation_group_table(std::size_t n, const std::vector<std::vector<std::uint32_t>>& generators);

}  // namespace urysohn::syndetic
