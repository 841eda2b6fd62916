#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "urysohn/flows.hpp"
#include "urysohn/katetov.hpp"
#include "urysohn/metric.hpp"
#include "urysohn/syndetic.hpp"

// Deliberately naive reference implementations. They share no search code
// with the modules they check and are only meant for small inputs.
namespace urysohn::oracle {

/// Tries every injective map a -> b.
std::optional<metric::Embedding> isometric_embedding(const metric::FiniteMetricSpace& a,
                                                     const metric::FiniteMetricSpace& b);

/// Every grid vector on `subset` that satisfies the Katetov inequalities.
std::vector<katetov::KatetovFunction> grid_functions(const metric::FiniteMetricSpace& space,
                                                     const std::vector<std::size_t>& subset,
                                                     const katetov::Grid& grid);

/// Repeated pairwise products until nothing new appears; sorted.
std::vector<flows::SelfMap> semigroup_closure(const std::vector<flows::SelfMap>& generators);

/// Inclusion-minimal sets among {s} u S s, computed with the full product.
std::vector<std::vector<std::size_t>> minimal_left_ideals(const flows::TransformationSemigroup& semigroup);

/// Backtracking over f : M -> M, checking f(s x) = s f(x) for every s in S
/// at the leaves. Image vectors follow the sorted order of `ideal`.
std::vector<std::vector<std::size_t>> equivariant_self_maps(const flows::TransformationSemigroup& semigroup,
                                                            const std::vector<std::size_t>& ideal);

/// All |T|^|X| maps checked against every generator; empty result and
/// nullopt when |T|^|X| exceeds `limit`.
std::optional<std::vector<std::vector<std::size_t>>> equivariant_maps(const flows::FiniteAction& source,
                                                                      const flows::FiniteAction& target,
                                                                      std::size_t limit = 1'000'000);

/// Applies every group element to one k-tuple and counts images.
bool is_k_transitive(const flows::FiniteAction& action, std::size_t k);

/// Double and triple loops over the members.
syndetic::IntegerWindowSet difference_set(const syndetic::IntegerWindowSet& s);
syndetic::IntegerWindowSet triple_sum(const syndetic::IntegerWindowSet& s);

/// Floating-point Bohr membership; nullopt when some comparison is within
/// 1e-9 of the threshold and floating point cannot decide.
std::optional<bool> bohr_member(const syndetic::BohrSpec& spec, std::int64_t n);

}  // namespace urysohn::oracle
