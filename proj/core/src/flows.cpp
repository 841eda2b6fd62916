#include "urysohn/flows.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "urysohn/errors.hpp"

namespace urysohn::flows {

SelfMap::SelfMap(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  for (std::uint32_t v : images_) {
    if (v >= images_.size()) throw DomainError("self-map image out of range");
  }
}

SelfMap SelfMap::identity(std::size_t n) {
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0U);
  return SelfMap(std::move(images));
}

SelfMap SelfMap::then(const SelfMap& t) const {
  if (t.size() != size()) throw DomainError("composing self-maps of different degree");
  SelfMap out;
  out.images_.resize(size());
  for (std::size_t x = 0; x < size(); ++x) out.images_[x] = t.images_[images_[x]];
  return out;
}

bool SelfMap::is_permutation() const { return rank() == size(); }

bool SelfMap::is_idempotent() const {
  for (std::uint32_t v : images_) {
    if (images_[v] != v) return false;
  }
  return true;
}

std::size_t SelfMap::rank() const {
  std::vector<bool> hit(size(), false);
  std::size_t r = 0;
  for (std::uint32_t v : images_) {
    if (!hit[v]) {
      hit[v] = true;
      ++r;
    }
  }
  return r;
}

SelfMap SelfMap::inverse() const {
  if (!is_permutation()) throw DomainError("inverse of a non-bijective self-map");
  SelfMap out;
  out.images_.resize(size());
  for (std::size_t x = 0; x < size(); ++x) out.images_[images_[x]] = static_cast<std::uint32_t>(x);
  return out;
}

std::size_t SelfMapHash::operator()(const SelfMap& s) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::uint32_t v : s.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::size_t TransformationSemigroup::product(std::size_t s, std::size_t t) const {
  auto it = index_.find(elements_[s].then(elements_[t]));
  if (it == index_.end()) throw std::logic_error("semigroup is not closed under the product");
  return it->second;
}

std::optional<std::size_t> TransformationSemigroup::index_of(const SelfMap& map) const {
  auto it = index_.find(map);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> TransformationSemigroup::table() const {
  std::vector<std::size_t> out(size() * size());
  for (std::size_t s = 0; s < size(); ++s) {
    for (std::size_t t = 0; t < size(); ++t) out[s * size() + t] = product(s, t);
  }
  return out;
}

TransformationSemigroup generate_semigroup(std::span<const SelfMap> generators) {
  if (generators.empty()) throw DomainError("generate_semigroup: no generators");
  TransformationSemigroup sg;
  sg.degree_ = generators.front().size();
  std::vector<SelfMap> gens;
  for (const SelfMap& g : generators) {
    if (g.size() != sg.degree_) throw DomainError("generate_semigroup: generators of different degree");
    if (sg.index_.emplace(g, sg.elements_.size()).second) {
      sg.elements_.push_back(g);
      gens.push_back(g);
    }
  }
  sg.generator_count_ = gens.size();
  for (std::size_t i = 0; i < sg.elements_.size(); ++i) {
    for (const SelfMap& g : gens) {
      SelfMap next = sg.elements_[i].then(g);
      if (sg.index_.emplace(next, sg.elements_.size()).second) sg.elements_.push_back(std::move(next));
    }
  }
  return sg;
}

PowerIdempotent find_idempotent(const SelfMap& s) {
  std::map<SelfMap, std::size_t> seen;
  std::vector<SelfMap> powers;
  SelfMap current = s;
  std::size_t k = 1;
  while (true) {
    auto [it, inserted] = seen.emplace(current, k);
    if (!inserted) break;
    powers.push_back(current);
    current = current.then(s);
    ++k;
  }
  const std::size_t index = seen.at(current);
  const std::size_t period = k - index;
  const std::size_t exponent = period * ((index + period - 1) / period);
  // exponent < index + period, so the power is already in the list.
  return {powers[exponent - 1], exponent, index, period};
}

std::size_t find_idempotent(const TransformationSemigroup& semigroup) {
  if (semigroup.size() == 0) throw DomainError("find_idempotent: empty semigroup");
  auto found = find_idempotent(semigroup.element(0));
  auto idx = semigroup.index_of(found.idempotent);
  if (!idx) throw std::logic_error("idempotent power missing from the semigroup");
  return *idx;
}

std::size_t find_idempotent_by_descent(const TransformationSemigroup& semigroup) {
  if (semigroup.size() == 0) throw DomainError("find_idempotent_by_descent: empty semigroup");
  std::vector<std::size_t> current(semigroup.size());
  std::iota(current.begin(), current.end(), std::size_t{0});
  while (true) {
    const std::size_t a = current.front();
    std::set<std::size_t> shifted;
    for (std::size_t y : current) shifted.insert(semigroup.product(y, a));
    if (shifted.size() < current.size()) {
      current.assign(shifted.begin(), shifted.end());
      continue;
    }
    std::vector<std::size_t> fixing;
    for (std::size_t x : current) {
      if (semigroup.product(x, a) == a) fixing.push_back(x);
    }
    if (fixing.empty()) throw std::logic_error("descent lost the element a");
    if (fixing.size() < current.size()) {
      current = std::move(fixing);
      continue;
    }
    return a;
  }
}

namespace {

// Closure of `start` under x -> g * x for every generator g.
std::vector<std::size_t> left_closure(const TransformationSemigroup& semigroup, std::vector<std::size_t> start) {
  std::vector<bool> seen(semigroup.size(), false);
  std::vector<std::size_t> out;
  for (std::size_t x : start) {
    if (!seen[x]) {
      seen[x] = true;
      out.push_back(x);
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t g = 0; g < semigroup.generator_count(); ++g) {
      std::size_t y = semigroup.product(g, out[i]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::size_t> principal_left_ideal(const TransformationSemigroup& semigroup, std::size_t s) {
  return left_closure(semigroup, {s});
}

bool is_left_ideal(const TransformationSemigroup& semigroup, std::span<const std::size_t> subset) {
  if (subset.empty()) return false;
  std::vector<bool> member(semigroup.size(), false);
  for (std::size_t x : subset) {
    if (x >= semigroup.size()) return false;
    member[x] = true;
  }
  for (std::size_t g = 0; g < semigroup.generator_count(); ++g) {
    for (std::size_t x : subset) {
      if (!member[semigroup.product(g, x)]) return false;
    }
  }
  return true;
}

bool is_minimal_left_ideal(const TransformationSemigroup& semigroup, std::span<const std::size_t> subset) {
  if (!is_left_ideal(semigroup, subset)) return false;
  std::vector<std::size_t> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t x : sorted) {
    std::vector<std::size_t> shifted;
    for (std::size_t g = 0; g < semigroup.generator_count(); ++g) shifted.push_back(semigroup.product(g, x));
    if (left_closure(semigroup, std::move(shifted)) != sorted) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> minimal_left_ideals(const TransformationSemigroup& semigroup) {
  std::size_t min_rank = std::numeric_limits<std::size_t>::max();
  for (const SelfMap& s : semigroup.elements()) min_rank = std::min(min_rank, s.rank());
  std::vector<bool> covered(semigroup.size(), false);
  std::vector<std::vector<std::size_t>> ideals;
  for (std::size_t s = 0; s < semigroup.size(); ++s) {
    if (covered[s] || semigroup.element(s).rank() != min_rank) continue;
    auto ideal = principal_left_ideal(semigroup, s);
    for (std::size_t x : ideal) covered[x] = true;
    ideals.push_back(std::move(ideal));
  }
  std::sort(ideals.begin(), ideals.end());
  return ideals;
}

bool StructureReport::holds() const {
  if (!right_identity || non_bijective_translation || failed_isomorphism) return false;
  return std::all_of(realizing_translation.begin(), realizing_translation.end(),
                     [](const auto& y) { return y.has_value(); });
}

StructureReport verify_ideal_structure(const TransformationSemigroup& semigroup, std::span<const std::size_t> ideal) {
  if (!is_minimal_left_ideal(semigroup, ideal)) {
    throw PreconditionError("verify_ideal_structure: not a minimal left ideal");
  }
  std::vector<std::size_t> members(ideal.begin(), ideal.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const std::size_t m = members.size();
  constexpr std::size_t absent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> position(semigroup.size(), absent);
  for (std::size_t i = 0; i < m; ++i) position[members[i]] = i;

  StructureReport report;

  for (std::size_t p : members) {
    if (semigroup.product(p, p) != p) continue;
    bool right_unit = std::all_of(members.begin(), members.end(),
                                  [&](std::size_t x) { return semigroup.product(x, p) == x; });
    if (right_unit) {
      report.right_identity = p;
      break;
    }
  }

  for (std::size_t y : members) {
    std::vector<bool> hit(m, false);
    bool ok = true;
    for (std::size_t x : members) {
      std::size_t pos = position[semigroup.product(x, y)];
      if (pos == absent || hit[pos]) {
        ok = false;
        break;
      }
      hit[pos] = true;
    }
    if (!ok) {
      report.non_bijective_translation = y;
      break;
    }
  }

  // An S-equivariant f : M -> M is determined by f(x0) since M = S x0.
  const std::size_t x0 = members.front();
  for (std::size_t y : members) {
    std::vector<std::size_t> f(m, absent);
    f[0] = y;
    std::deque<std::size_t> queue{x0};
    bool consistent = true;
    while (!queue.empty() && consistent) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t s = 0; s < semigroup.generator_count(); ++s) {
        std::size_t sx = semigroup.product(s, x);
        std::size_t image = semigroup.product(s, f[position[x]]);
        std::size_t& slot = f[position[sx]];
        if (slot == absent) {
          slot = image;
          queue.push_back(sx);
        } else if (slot != image) {
          consistent = false;
          break;
        }
      }
    }
    if (!consistent || std::count(f.begin(), f.end(), absent) != 0) continue;
    std::optional<std::size_t> realizing;
    for (std::size_t z : members) {
      bool same = true;
      for (std::size_t i = 0; i < m && same; ++i) same = semigroup.product(members[i], z) == f[i];
      if (same) {
        realizing = z;
        break;
      }
    }
    report.equivariant_maps.push_back(std::move(f));
    report.realizing_translation.push_back(realizing);
  }

  auto all_ideals = minimal_left_ideals(semigroup);
  for (std::size_t k = 0; k < all_ideals.size() && !report.failed_isomorphism; ++k) {
    const auto& other = all_ideals[k];
    std::vector<bool> in_other(semigroup.size(), false);
    for (std::size_t x : other) in_other[x] = true;
    for (std::size_t a : other) {
      std::set<std::size_t> image;
      bool ok = other.size() == m;
      for (std::size_t x : members) {
        std::size_t xa = semigroup.product(x, a);
        if (!in_other[xa]) ok = false;
        image.insert(xa);
      }
      ok = ok && image.size() == m;
      for (std::size_t s = 0; s < semigroup.generator_count() && ok; ++s) {
        for (std::size_t x : members) {
          if (semigroup.product(semigroup.product(s, x), a) != semigroup.product(s, semigroup.product(x, a))) {
            ok = false;
            break;
          }
        }
      }
      ++report.ideals_compared;
      if (!ok) {
        report.failed_isomorphism = std::pair(k, a);
        break;
      }
    }
  }
  return report;
}

void validate_action(const FiniteAction& action) {
  for (const SelfMap& g : action.generators) {
    if (g.size() != action.n) throw DomainError("action generator has the wrong degree");
    if (!g.is_permutation()) throw DomainError("action generator is not a permutation");
  }
}

std::vector<SelfMap> group_elements(const FiniteAction& action) {
  validate_action(action);
  std::vector<SelfMap> elements{SelfMap::identity(action.n)};
  std::unordered_map<SelfMap, std::size_t, SelfMapHash> seen{{elements.front(), 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const SelfMap& g : action.generators) {
      SelfMap next = elements[i].then(g);
      if (seen.emplace(next, elements.size()).second) elements.push_back(std::move(next));
    }
  }
  return elements;
}

std::vector<std::vector<std::size_t>> orbits(const FiniteAction& action) {
  validate_action(action);
  std::vector<bool> seen(action.n, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t start = 0; start < action.n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> orbit{start};
    seen[start] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const SelfMap& g : action.generators) {
        std::size_t y = g(orbit[i]);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool is_minimal(const FiniteAction& action) { return orbits(action).size() == 1; }

bool is_k_transitive(const FiniteAction& action, std::size_t k) {
  validate_action(action);
  if (k == 0) throw DomainError("is_k_transitive: k must be positive");
  if (action.n < k) throw DomainError("is_k_transitive: fewer than k points");
  const std::size_t n = action.n;
  auto encode = [&](const std::vector<std::size_t>& t) {
    std::size_t code = 0;
    for (std::size_t v : t) code = code * n + v;
    return code;
  };
  std::vector<std::size_t> start(k);
  std::iota(start.begin(), start.end(), std::size_t{0});
  std::set<std::size_t> seen{encode(start)};
  std::vector<std::vector<std::size_t>> frontier{start};
  while (!frontier.empty()) {
    auto tuple = std::move(frontier.back());
    frontier.pop_back();
    for (const SelfMap& g : action.generators) {
      std::vector<std::size_t> image(k);
      for (std::size_t i = 0; i < k; ++i) image[i] = g(tuple[i]);
      if (seen.insert(encode(image)).second) frontier.push_back(std::move(image));
    }
  }
  std::size_t tuples = 1;
  for (std::size_t i = 0; i < k; ++i) tuples *= n - i;
  return seen.size() == tuples;
}

std::vector<std::size_t> MaximalChain::order() const {
  std::vector<std::size_t> out;
  std::uint64_t previous = 0;
  for (std::uint64_t set : sets) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(set & ~previous)));
    previous = set;
  }
  return out;
}

MaximalChain MaximalChain::from_order(std::span<const std::size_t> order) {
  if (order.size() > 64) throw DomainError("maximal chains are limited to 64 points");
  MaximalChain chain;
  chain.n = order.size();
  std::uint64_t current = 0;
  for (std::size_t x : order) {
    if (x >= order.size() || (current >> x & 1U)) throw DomainError("chain order is not a permutation");
    current |= std::uint64_t{1} << x;
    chain.sets.push_back(current);
  }
  return chain;
}

std::vector<MaximalChain> maximal_chains(std::size_t n) {
  if (n == 0) throw DomainError("maximal_chains: n must be >= 1");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<MaximalChain> out;
  do {
    out.push_back(MaximalChain::from_order(order));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

MaximalChain chain_action(const SelfMap& g, const MaximalChain& chain) {
  if (g.size() != chain.n) throw DomainError("chain_action: degree mismatch");
  auto order = chain.order();
  for (std::size_t& x : order) x = g(x);
  return MaximalChain::from_order(order);
}

FiniteAction chain_space_action(const FiniteAction& action) {
  validate_action(action);
  const auto chains = maximal_chains(action.n);
  std::map<MaximalChain, std::uint32_t> index;
  for (std::size_t i = 0; i < chains.size(); ++i) index.emplace(chains[i], static_cast<std::uint32_t>(i));
  FiniteAction induced;
  induced.n = chains.size();
  for (const SelfMap& g : action.generators) {
    std::vector<std::uint32_t> images(chains.size());
    for (std::size_t i = 0; i < chains.size(); ++i) images[i] = index.at(chain_action(g, chains[i]));
    induced.generators.emplace_back(std::move(images));
  }
  return induced;
}

EquivariantSearch equivariant_maps(const FiniteAction& source, const FiniteAction& target, std::size_t max_results) {
  validate_action(source);
  validate_action(target);
  if (source.generators.size() != target.generators.size()) {
    throw DomainError("equivariant_maps: source and target have different generator lists");
  }
  const std::size_t n = source.n;
  const std::size_t m = target.n;
  EquivariantSearch result;
  if (n == 0) {
    result.maps.emplace_back();
    result.count = 1;
    return result;
  }

  // The group acting diagonally on X and T.
  FiniteAction joint;
  joint.n = n + m;
  for (std::size_t i = 0; i < source.generators.size(); ++i) {
    std::vector<std::uint32_t> images(n + m);
    for (std::size_t x = 0; x < n; ++x) images[x] = source.generators[i](x);
    for (std::size_t t = 0; t < m; ++t) images[n + t] = static_cast<std::uint32_t>(n + target.generators[i](t));
    joint.generators.emplace_back(std::move(images));
  }
  const auto group = group_elements(joint);

  struct OrbitChoice {
    std::size_t rep;
    std::vector<std::size_t> targets;
  };
  std::vector<OrbitChoice> choices;
  for (const auto& orbit : orbits(source)) {
    const std::size_t rep = orbit.front();
    std::vector<std::size_t> admissible;
    for (std::size_t t = 0; t < m; ++t) {
      bool fixed = true;
      for (const SelfMap& g : group) {
        if (g(rep) == rep && g(n + t) != n + t) {
          fixed = false;
          break;
        }
      }
      if (fixed) admissible.push_back(t);
    }
    result.admissible.emplace_back(rep, admissible);
    choices.push_back({rep, std::move(admissible)});
  }

  std::uint64_t count = 1;
  for (const auto& c : choices) {
    if (c.targets.empty()) {
      count = 0;
      break;
    }
    if (count > std::numeric_limits<std::uint64_t>::max() / c.targets.size()) {
      count = std::numeric_limits<std::uint64_t>::max();
    } else {
      count *= c.targets.size();
    }
  }
  result.count = count;
  if (count == 0) return result;

  std::vector<std::size_t> pick(choices.size(), 0);
  while (result.maps.size() < max_results) {
    std::vector<std::size_t> f(n, m);
    for (std::size_t c = 0; c < choices.size(); ++c) {
      const std::size_t rep = choices[c].rep;
      const std::size_t t = choices[c].targets[pick[c]];
      for (const SelfMap& g : group) {
        std::size_t x = g(rep);
        std::size_t image = g(n + t) - n;
        if (f[x] == m) {
          f[x] = image;
        } else if (f[x] != image) {
          throw std::logic_error("equivariant_maps: stabilizer-fixed target is not well defined");
        }
      }
    }
    result.maps.push_back(std::move(f));
    std::size_t c = choices.size();
    while (c > 0 && ++pick[c - 1] == choices[c - 1].targets.size()) {
      pick[c - 1] = 0;
      --c;
    }
    if (c == 0) break;
  }
  std::sort(result.maps.begin(), result.maps.end());
  return result;
}

LaminarChainMap laminar_chain_map(std::size_t n, std::span<const std::uint64_t> family, const FiniteAction& action) {
  if (n == 0 || n > 64) throw DomainError("laminar_chain_map: need 1..64 points");
  validate_action(action);
  if (action.n != n) throw DomainError("laminar_chain_map: action degree differs from the ground set");
  const std::uint64_t whole = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  std::vector<std::uint64_t> members(family.begin(), family.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::set<std::uint64_t> lookup(members.begin(), members.end());
  for (std::uint64_t f : members) {
    if (f == 0 || (f & ~whole) != 0) throw DomainError("laminar_chain_map: member is empty or outside the ground set");
  }
  if (!lookup.count(whole)) throw DomainError("laminar_chain_map: family must contain the whole set");
  for (std::size_t x = 0; x < n; ++x) {
    if (!lookup.count(std::uint64_t{1} << x)) throw DomainError("laminar_chain_map: family must contain all singletons");
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      std::uint64_t a = members[i];
      std::uint64_t b = members[j];
      if ((a & b) != 0 && (a & b) != a && (a & b) != b) {
        throw DomainError("laminar_chain_map: family is not laminar");
      }
    }
  }
  auto apply = [n](const SelfMap& g, std::uint64_t set) {
    std::uint64_t image = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (set >> x & 1U) image |= std::uint64_t{1} << g(x);
    }
    return image;
  };
  for (const SelfMap& g : action.generators) {
    for (std::uint64_t f : members) {
      if (!lookup.count(apply(g, f))) throw DomainError("laminar_chain_map: action does not preserve the family");
    }
  }

  auto by_size = [](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a);
    int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  };
  LaminarChainMap result;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::uint64_t> chain;
    for (std::uint64_t f : members) {
      if (f >> x & 1U) chain.push_back(f);
    }
    std::sort(chain.begin(), chain.end(), by_size);
    result.chains.push_back(std::move(chain));
  }
  result.chains_nested = std::all_of(result.chains.begin(), result.chains.end(), [](const auto& chain) {
    for (std::size_t i = 1; i < chain.size(); ++i) {
      if ((chain[i - 1] & ~chain[i]) != 0 || chain[i - 1] == chain[i]) return false;
    }
    return true;
  });
  result.equivariant = true;
  for (const SelfMap& g : action.generators) {
    for (std::size_t x = 0; x < n && result.equivariant; ++x) {
      std::vector<std::uint64_t> moved;
      for (std::uint64_t f : result.chains[x]) moved.push_back(apply(g, f));
      std::sort(moved.begin(), moved.end(), by_size);
      result.equivariant = moved == result.chains[g(x)];
    }
  }
  return result;
}

FiniteAction symmetric_group(std::size_t n) {
  if (n == 0) throw DomainError("symmetric_group: n must be >= 1");
  FiniteAction action;
  action.n = n;
  if (n == 1) {
    action.generators.push_back(SelfMap::identity(1));
    return action;
  }
  std::vector<std::uint32_t> swap(n);
  std::iota(swap.begin(), swap.end(), 0U);
  std::swap(swap[0], swap[1]);
  action.generators.emplace_back(std::move(swap));
  if (n > 2) {
    std::vector<std::uint32_t> cycle(n);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<std::uint32_t>((i + 1) % n);
    action.generators.emplace_back(std::move(cycle));
  }
  return action;
}

LinearOrdersFlow linear_orders_flow(std::size_t n) {
  if (n == 0 || n > 8) throw DomainError("linear_orders_flow: need 1 <= n <= 8");
  const FiniteAction group = symmetric_group(n);
  auto relabel = [n](const SelfMap& g, std::uint64_t rel) {
    std::uint64_t out = 0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (rel >> (a * n + b) & 1U) out |= std::uint64_t{1} << (g(a) * n + g(b));
      }
    }
    return out;
  };

  LinearOrdersFlow flow;
  flow.n = n;
  std::vector<std::size_t> ranking(n);
  std::iota(ranking.begin(), ranking.end(), std::size_t{0});
  do {
    std::uint64_t rel = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) rel |= std::uint64_t{1} << (ranking[i] * n + ranking[j]);
    }
    flow.orders.push_back(rel);
  } while (std::next_permutation(ranking.begin(), ranking.end()));
  std::sort(flow.orders.begin(), flow.orders.end());

  auto index_of = [&](std::uint64_t rel) -> std::optional<std::size_t> {
    auto it = std::lower_bound(flow.orders.begin(), flow.orders.end(), rel);
    if (it == flow.orders.end() || *it != rel) return std::nullopt;
    return static_cast<std::size_t>(it - flow.orders.begin());
  };

  flow.invariant = true;
  for (std::uint64_t rel : flow.orders) {
    for (const SelfMap& g : group.generators) flow.invariant = flow.invariant && index_of(relabel(g, rel)).has_value();
  }

  std::vector<bool> seen(flow.orders.size(), false);
  for (std::size_t start = 0; start < flow.orders.size(); ++start) {
    if (seen[start]) continue;
    ++flow.orbit_count;
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (const SelfMap& g : group.generators) {
        auto j = index_of(relabel(g, flow.orders[i]));
        if (j && !seen[*j]) {
          seen[*j] = true;
          stack.push_back(*j);
        }
      }
    }
  }
  flow.minimal = flow.invariant && flow.orbit_count == 1;

  if (n <= 3) {
    const std::size_t relations = std::size_t{1} << (n * n);
    std::vector<bool> visited(relations, false);
    for (std::size_t start = 0; start < relations; ++start) {
      if (visited[start]) continue;
      std::size_t size = 0;
      std::vector<std::uint64_t> stack{start};
      visited[start] = true;
      while (!stack.empty()) {
        std::uint64_t rel = stack.back();
        stack.pop_back();
        ++size;
        for (const SelfMap& g : group.generators) {
          std::uint64_t next = relabel(g, rel);
          if (!visited[next]) {
            visited[next] = true;
            stack.push_back(next);
          }
        }
      }
      flow.full_space_orbit_sizes.push_back(size);
    }
    std::sort(flow.full_space_orbit_sizes.begin(), flow.full_space_orbit_sizes.end());
  }
  return flow;
}

}  // namespace urysohn::flows
