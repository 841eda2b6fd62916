#include "urysohn/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace urysohn::oracle {

namespace {

bool extend_embedding(const metric::FiniteMetricSpace& a, const metric::FiniteMetricSpace& b,
                      std::vector<std::size_t>& map, std::vector<bool>& used) {
  if (map.size() == a.size()) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (a(i, j) != b(map[i], map[j])) return false;
      }
    }
    return true;
  }
  for (std::size_t t = 0; t < b.size(); ++t) {
    if (used[t]) continue;
    used[t] = true;
    map.push_back(t);
    if (extend_embedding(a, b, map, used)) return true;
    map.pop_back();
    used[t] = false;
  }
  return false;
}

}  // namespace

std::optional<metric::Embedding> isometric_embedding(const metric::FiniteMetricSpace& a,
                                                     const metric::FiniteMetricSpace& b) {
  if (a.size() > b.size()) return std::nullopt;
  std::vector<std::size_t> map;
  std::vector<bool> used(b.size(), false);
  if (extend_embedding(a, b, map, used)) return map;
  return std::nullopt;
}

std::vector<katetov::KatetovFunction> grid_functions(const metric::FiniteMetricSpace& space,
                                                     const std::vector<std::size_t>& subset,
                                                     const katetov::Grid& grid) {
  std::vector<Rational> values;
  for (Rational v{0}; v <= grid.cap; v += grid.delta) values.push_back(v);
  std::vector<katetov::KatetovFunction> out;
  std::vector<std::size_t> digits(subset.size(), 0);
  while (true) {
    katetov::KatetovFunction f{subset, {}};
    for (std::size_t d : digits) f.values.push_back(values[d]);
    bool ok = true;
    for (std::size_t i = 0; i < subset.size() && ok; ++i) {
      for (std::size_t j = 0; j < subset.size() && ok; ++j) {
        const Rational& dist = space(subset[i], subset[j]);
        ok = abs(f.values[i] - f.values[j]) <= dist && dist <= f.values[i] + f.values[j];
      }
    }
    if (ok) out.push_back(std::move(f));
    std::size_t k = digits.size();
    while (k > 0 && ++digits[k - 1] == values.size()) {
      digits[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

std::vector<flows::SelfMap> semigroup_closure(const std::vector<flows::SelfMap>& generators) {
  std::set<flows::SelfMap> elements(generators.begin(), generators.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<flows::SelfMap> current(elements.begin(), elements.end());
    for (const auto& s : current) {
      for (const auto& t : current) grew = elements.insert(s.then(t)).second || grew;
    }
  }
  return {elements.begin(), elements.end()};
}

std::vector<std::vector<std::size_t>> minimal_left_ideals(const flows::TransformationSemigroup& semigroup) {
  const std::size_t n = semigroup.size();
  std::set<std::vector<std::size_t>> principal;
  for (std::size_t s = 0; s < n; ++s) {
    std::set<std::size_t> ideal{s};
    for (std::size_t t = 0; t < n; ++t) ideal.insert(semigroup.product(t, s));
    principal.emplace(ideal.begin(), ideal.end());
  }
  std::vector<std::vector<std::size_t>> out;
  for (const auto& p : principal) {
    bool minimal = true;
    for (const auto& q : principal) {
      if (q.size() < p.size() && std::includes(p.begin(), p.end(), q.begin(), q.end())) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> equivariant_self_maps(const flows::TransformationSemigroup& semigroup,
                                                            const std::vector<std::size_t>& ideal) {
  std::vector<std::size_t> members(ideal);
  std::sort(members.begin(), members.end());
  const std::size_t m = members.size();
  const std::size_t n = semigroup.size();
  auto position = [&](std::size_t x) {
    return static_cast<std::size_t>(std::lower_bound(members.begin(), members.end(), x) - members.begin());
  };
  // act[s][i] = position of s * members[i]; M is a left ideal, so it stays in M.
  std::vector<std::vector<std::size_t>> act(n, std::vector<std::size_t>(m));
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t i = 0; i < m; ++i) act[s][i] = position(semigroup.product(s, members[i]));
  }
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> preimages(m);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t k = 0; k < m; ++k) preimages[act[s][k]].emplace_back(s, k);
  }
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> f(m, unset);
  std::vector<std::vector<std::size_t>> out;

  auto consistent = [&](std::size_t i) {
    for (std::size_t s = 0; s < n; ++s) {
      std::size_t j = act[s][i];
      if (f[j] != unset && f[j] != act[s][f[i]]) return false;
    }
    for (const auto& [s, k] : preimages[i]) {
      if (f[k] != unset && f[i] != act[s][f[k]]) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t i) -> void {
    if (i == m) {
      std::vector<std::size_t> image;
      for (std::size_t v : f) image.push_back(members[v]);
      out.push_back(std::move(image));
      return;
    }
    for (std::size_t v = 0; v < m; ++v) {
      f[i] = v;
      if (consistent(i)) self(self, i + 1);
      f[i] = unset;
    }
  };
  search(search, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<std::vector<std::size_t>>> equivariant_maps(const flows::FiniteAction& source,
                                                                      const flows::FiniteAction& target,
                                                                      std::size_t limit) {
  const std::size_t n = source.n;
  const std::size_t m = target.n;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (m != 0 && total > limit / m) return std::nullopt;
    total *= m;
  }
  std::vector<std::vector<std::size_t>> out;
  if (total == 0 || total > limit) return total == 0 ? std::optional(out) : std::nullopt;
  std::vector<std::size_t> f(n, 0);
  while (true) {
    bool ok = true;
    for (std::size_t g = 0; g < source.generators.size() && ok; ++g) {
      for (std::size_t x = 0; x < n && ok; ++x) ok = f[source.generators[g](x)] == target.generators[g](f[x]);
    }
    if (ok) out.push_back(f);
    std::size_t k = n;
    while (k > 0 && ++f[k - 1] == m) {
      f[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

bool is_k_transitive(const flows::FiniteAction& action, std::size_t k) {
  std::set<std::vector<std::size_t>> images;
  for (const auto& g : flows::group_elements(action)) {
    std::vector<std::size_t> t;
    for (std::size_t i = 0; i < k; ++i) t.push_back(g(i));
    images.insert(std::move(t));
  }
  std::size_t tuples = 1;
  for (std::size_t i = 0; i < k; ++i) tuples *= action.n - i;
  return images.size() == tuples;
}

syndetic::IntegerWindowSet difference_set(const syndetic::IntegerWindowSet& s) {
  std::set<std::int64_t> out;
  for (std::int64_t a : s.members) {
    for (std::int64_t b : s.members) {
      if (std::abs(a - b) <= s.window) out.insert(a - b);
    }
  }
  return {s.window, {out.begin(), out.end()}};
}

syndetic::IntegerWindowSet triple_sum(const syndetic::IntegerWindowSet& s) {
  std::set<std::int64_t> out;
  for (std::int64_t a : s.members) {
    for (std::int64_t b : s.members) {
      for (std::int64_t c : s.members) {
        if (std::abs(a - b + c) <= s.window) out.insert(a - b + c);
      }
    }
  }
  return {s.window, {out.begin(), out.end()}};
}

std::optional<bool> bohr_member(const syndetic::BohrSpec& spec, std::int64_t n) {
  if (spec.eps > Rational(2)) return true;
  const long double eps2 = static_cast<long double>(spec.eps.to_double()) * spec.eps.to_double();
  bool member = true;
  for (const Rational& theta : spec.thetas) {
    const std::int64_t q = theta.den();
    const std::int64_t r = (((theta.num() * (n % q)) % q) + q) % q;
    const long double s = std::sin(std::numbers::pi_v<long double> * r / q);
    const long double chord2 = 4 * s * s;
    if (std::fabs(chord2 - eps2) < 1e-9L) return std::nullopt;
    member = member && chord2 < eps2;
  }
  return member;
}

}  // namespace urysohn::oracle
