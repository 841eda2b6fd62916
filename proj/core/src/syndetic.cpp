#include "urysohn/syndetic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "urysohn/errors.hpp"
#include "urysohn/flows.hpp"

namespace urysohn::syndetic {

namespace {

// Bit set over the integer range [lo, lo + size).
struct Bits {
  std::int64_t lo = 0;
  std::size_t size = 0;
  std::vector<std::uint64_t> words;

  Bits(std::int64_t low, std::int64_t high)
      : lo(low), size(static_cast<std::size_t>(high - low + 1)), words((size + 63) / 64, 0) {}

  void set(std::int64_t x) {
    auto i = static_cast<std::size_t>(x - lo);
    words[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  bool test(std::int64_t x) const {
    if (x < lo || x >= lo + static_cast<std::int64_t>(size)) return false;
    auto i = static_cast<std::size_t>(x - lo);
    return (words[i / 64] >> (i % 64)) & 1U;
  }

  // Bits pos .. pos + 63 of the index space, zero outside.
  std::uint64_t extract(std::int64_t pos) const {
    if (pos <= -64 || pos >= static_cast<std::int64_t>(size)) return 0;
    if (pos < 0) return words[0] << (-pos);
    auto q = static_cast<std::size_t>(pos / 64);
    auto r = static_cast<unsigned>(pos % 64);
    std::uint64_t out = words[q] >> r;
    if (r != 0 && q + 1 < words.size()) out |= words[q + 1] << (64 - r);
    return out;
  }

  // this |= src translated by delta.
  void or_translated(const Bits& src, std::int64_t delta) {
    const std::int64_t k = src.lo + delta - lo;
    for (std::size_t i = 0; i < words.size(); ++i) {
      words[i] |= src.extract(static_cast<std::int64_t>(i) * 64 - k);
    }
    trim();
  }

  void trim() {
    if (size % 64 != 0) words.back() &= (std::uint64_t{1} << (size % 64)) - 1;
  }

  std::vector<std::int64_t> members() const {
    std::vector<std::int64_t> out;
    for (std::size_t w = 0; w < words.size(); ++w) {
      std::uint64_t bits = words[w];
      while (bits != 0) {
        int b = __builtin_ctzll(bits);
        out.push_back(lo + static_cast<std::int64_t>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
    return out;
  }
};

Bits to_bits(const IntegerWindowSet& s) {
  Bits bits(-s.window, s.window);
  for (std::int64_t x : s.members) bits.set(x);
  return bits;
}

Bits differences(const IntegerWindowSet& s) {
  Bits source = to_bits(s);
  Bits out(-2 * s.window, 2 * s.window);
  for (std::int64_t b : s.members) out.or_translated(source, -b);
  return out;
}

IntegerWindowSet clip(const Bits& bits, std::int64_t window) {
  IntegerWindowSet out{window, {}};
  for (std::int64_t x : bits.members()) {
    if (x >= -window && x <= window) out.members.push_back(x);
  }
  return out;
}

}  // namespace

bool IntegerWindowSet::contains(std::int64_t x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

IntegerWindowSet make_window_set(std::int64_t window, std::vector<std::int64_t> members) {
  if (window < 0) throw DomainError("window bound must be non-negative");
  if (window > (std::int64_t{1} << 40)) throw DomainError("window bound too large");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!members.empty() && (members.front() < -window || members.back() > window)) {
    throw DomainError("member outside the window");
  }
  return {window, std::move(members)};
}

IntegerWindowSet full_window(std::int64_t window) {
  std::vector<std::int64_t> members(static_cast<std::size_t>(2 * window + 1));
  std::iota(members.begin(), members.end(), -window);
  return make_window_set(window, std::move(members));
}

GapReport is_syndetic(const IntegerWindowSet& s) {
  GapReport report;
  if (s.members.empty()) return report;
  report.syndetic = s.members.size() > 1 || s.window == 0;
  const std::int64_t half = s.window / 2;
  std::int64_t inner = -1;
  std::int64_t outer = -1;
  for (std::size_t i = 1; i < s.members.size(); ++i) {
    const std::int64_t a = s.members[i - 1];
    const std::int64_t b = s.members[i];
    const std::int64_t gap = b - a;
    if (gap > report.max_gap) {
      report.max_gap = gap;
      report.widest = std::pair(a, b);
    }
    if (a >= -half && b <= half) {
      inner = std::max(inner, gap);
    } else {
      outer = std::max(outer, gap);
    }
  }
  report.growing_gaps = inner >= 0 && outer > inner;
  return report;
}

WindowResult difference_set(const IntegerWindowSet& s) {
  return {clip(differences(s), s.window), s.window / 2};
}

WindowResult triple_sum(const IntegerWindowSet& s) {
  Bits diff = differences(s);
  Bits out(-s.window, s.window);
  for (std::int64_t c : s.members) out.or_translated(diff, c);
  return {clip(out, s.window), s.window / 3};
}

void validate_spec(const BohrSpec& spec) {
  if (spec.eps.sign() <= 0) throw DomainError("eps must be positive");
  for (const Rational& theta : spec.thetas) {
    if (theta.sign() < 0 || theta >= Rational(1)) throw DomainError("frequency outside [0,1)");
  }
}

bool chord_below(std::int64_t a, std::int64_t b, const Rational& eps2) {
  if (b <= 0 || a < 0 || a >= b) throw DomainError("chord_below needs 0 <= a < b");
  const std::int64_t g = std::gcd(a, b);
  a /= g;
  b /= g;
  // sin^2(pi a/b) is rational exactly for these denominators.
  switch (b) {
    case 1: return Rational(0) < eps2;
    case 2: return Rational(4) < eps2;
    case 3: return Rational(3) < eps2;
    case 4: return Rational(2) < eps2;
    case 6: return Rational(1) < eps2;
    default: break;
  }
  // Otherwise the value is irrational, so it never equals eps2 and
  // refining the precision eventually separates them.
  for (mpfr_prec_t prec = 64; prec <= (1 << 16); prec *= 2) {
    mpfr_t v, e, tol;
    mpfr_inits2(prec, v, e, tol, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(v, MPFR_RNDN);
    mpfr_mul_si(v, v, static_cast<long>(a), MPFR_RNDN);
    mpfr_div_si(v, v, static_cast<long>(b), MPFR_RNDN);
    mpfr_sin(v, v, MPFR_RNDN);
    mpfr_sqr(v, v, MPFR_RNDN);
    mpfr_mul_ui(v, v, 4, MPFR_RNDN);
    mpfr_set_si(e, static_cast<long>(eps2.num()), MPFR_RNDN);
    mpfr_div_si(e, e, static_cast<long>(eps2.den()), MPFR_RNDN);
    mpfr_sub(v, v, e, MPFR_RNDN);
    mpfr_set_ui_2exp(tol, 1, static_cast<mpfr_exp_t>(10 - prec), MPFR_RNDN);
    const bool decided = mpfr_cmpabs(v, tol) > 0;
    const bool below = mpfr_sgn(v) < 0;
    mpfr_clears(v, e, tol, static_cast<mpfr_ptr>(nullptr));
    if (decided) return below;
  }
  throw std::logic_error("chord comparison did not separate");
}

IntegerWindowSet bohr_members(const BohrSpec& spec, std::int64_t window) {
  validate_spec(spec);
  if (spec.eps > Rational(2)) return full_window(window);
  const Rational eps2 = spec.eps * spec.eps;
  std::vector<std::pair<std::int64_t, std::vector<bool>>> tables;
  for (const Rational& theta : spec.thetas) {
    const std::int64_t q = theta.den();
    std::vector<bool> pass(static_cast<std::size_t>(q));
    for (std::int64_t r = 0; r < q; ++r) {
      const auto a = static_cast<std::int64_t>((static_cast<wide_int>(theta.num()) * r) % q);
      pass[static_cast<std::size_t>(r)] = chord_below(a, q, eps2);
    }
    tables.emplace_back(q, std::move(pass));
  }
  IntegerWindowSet out{window, {}};
  for (std::int64_t n = -window; n <= window; ++n) {
    bool member = true;
    for (const auto& [q, pass] : tables) {
      std::int64_t r = ((n % q) + q) % q;
      if (!pass[static_cast<std::size_t>(r)]) {
        member = false;
        break;
      }
    }
    if (member) out.members.push_back(n);
  }
  return out;
}

BohrCheck check_triple_sum_bohr(const IntegerWindowSet& s, const BohrSpec& spec) {
  BohrCheck check;
  check.window = s.window;
  check.syndetic = is_syndetic(s).syndetic;
  const WindowResult triple = triple_sum(s);
  const WindowResult diff = difference_set(s);
  check.triple_reliable = triple.reliable;
  check.difference_reliable = diff.reliable;
  const IntegerWindowSet bohr_triple = bohr_members(spec, triple.reliable);
  check.bohr_size = bohr_triple.members.size();
  for (std::int64_t x : bohr_triple.members) {
    if (!triple.set.contains(x)) check.violations.push_back(x);
  }
  for (std::int64_t x : bohr_members(spec, diff.reliable).members) {
    if (!diff.set.contains(x)) check.difference_misses.push_back(x);
  }
  return check;
}

std::size_t validate_group(const GroupTable& table) {
  const std::size_t n = table.size();
  if (n == 0) throw DomainError("group table is empty");
  for (const auto& row : table) {
    if (row.size() != n) throw DomainError("group table is not square");
    for (std::size_t v : row) {
      if (v >= n) throw DomainError("group table entry out of range");
    }
  }
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool unit = true;
    for (std::size_t x = 0; x < n && unit; ++x) unit = table[e][x] == x && table[x][e] == x;
    if (unit) identity = e;
  }
  if (!identity) throw DomainError("group table has no identity");
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < n && !has_inverse; ++b) has_inverse = table[a][b] == *identity;
    if (!has_inverse) throw DomainError("group table element without inverse");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) throw DomainError("group table is not associative");
      }
    }
  }
  return *identity;
}

PestovWitness pestov_witness(const GroupTable& table) {
  const std::size_t e = validate_group(table);
  const std::size_t n = table.size();
  std::vector<std::size_t> inverse(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] == e) inverse[a] = b;
    }
  }

  PestovWitness w;
  w.identity = e;
  w.s = {e};
  w.f.resize(n);
  std::iota(w.f.begin(), w.f.end(), std::size_t{0});

  std::vector<bool> covered(n, false);
  for (std::size_t f : w.f) {
    for (std::size_t s : w.s) covered[table[f][s]] = true;
  }
  w.fs_covers = std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });

  std::vector<bool> quotient(n, false);
  for (std::size_t a : w.s) {
    for (std::size_t b : w.s) quotient[table[a][inverse[b]]] = true;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (quotient[x]) w.s_s_inverse.push_back(x);
  }
  w.s_s_inverse_proper = w.s_s_inverse.size() < n;

  if (n <= 12) {
    std::size_t proper = 0;
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      std::uint32_t q = 0;
      for (std::size_t a = 0; a < n; ++a) {
        if (!(mask >> a & 1U)) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (mask >> b & 1U) q |= std::uint32_t{1} << table[a][inverse[b]];
        }
      }
      if (q != full) ++proper;
    }
    w.proper_subsets = proper;
    w.extremely_amenable = proper == 0;
  } else {
    w.extremely_amenable = !w.s_s_inverse_proper;
  }
  return w;
}

GroupTable permutation_group_table(std::size_t n, const std::vector<std::vector<std::uint32_t>>& generators) {
  flows::FiniteAction action;
  action.n = n;
  for (const auto& g : generators) action.generators.emplace_back(g);
  const auto elements = flows::group_elements(action);
  std::map<flows::SelfMap, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);
  GroupTable table(elements.size(), std::vector<std::size_t>(elements.size()));
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = 0; b < elements.size(); ++b) table[a][b] = index.at(elements[a].then(elements[b]));
  }
  return table;
}

namespace {

std::vector<std::uint32_t> cycle(std::size_t n, std::vector<std::uint32_t> points) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0U);
  for (std::size_t i = 0; i < points.size(); ++i) p[points[i]] = points[(i + 1) % points.size()];
  return p;
}

std::vector<std::uint32_t> compose(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = b[a[x]];
  return out;
}

std::vector<std::uint32_t> range(std::uint32_t from, std::uint32_t to) {
  std::vector<std::uint32_t> v;
  for (std::uint32_t x = from; x < to; ++x) v.push_back(x);
  return v;
}

// Left multiplication in Q8; element 2u + s is (-1)^s times unit u of 1, i, j, k.
std::vector<std::uint32_t> quaternion_left(std::uint32_t g) {
  static constexpr int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static constexpr std::uint32_t unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<std::uint32_t> p(8);
  for (std::uint32_t x = 0; x < 8; ++x) {
    const std::uint32_t u = g / 2;
    const std::uint32_t v = x / 2;
    const bool negative = ((g % 2) ^ (x % 2) ^ (sign[u][v] < 0 ? 1U : 0U)) != 0;
    p[x] = 2 * unit[u][v] + (negative ? 1 : 0);
  }
  return p;
}

}  // namespace

std::vector<NamedGroup> small_groups() {
  std::vector<NamedGroup> out;
  auto add = [&](std::string name, std::size_t n, std::vector<std::vector<std::uint32_t>> gens) {
    out.push_back({std::move(name), permutation_group_table(n, gens)});
  };
  for (std::uint32_t k = 2; k <= 12; ++k) add("Z" + std::to_string(k), k, {cycle(k, range(0, k))});
  add("Z2xZ2", 4, {cycle(4, {0, 1}), cycle(4, {2, 3})});
  add("S3", 3, {cycle(3, {0, 1}), cycle(3, {0, 1, 2})});
  add("Z2xZ4", 6, {cycle(6, {0, 1}), cycle(6, {2, 3, 4, 5})});
  add("Z2xZ2xZ2", 6, {cycle(6, {0, 1}), cycle(6, {2, 3}), cycle(6, {4, 5})});
  add("D4", 4, {cycle(4, {0, 1, 2, 3}), cycle(4, {0, 2})});
  add("Q8", 8, {quaternion_left(2), quaternion_left(4)});
  add("Z3xZ3", 6, {cycle(6, {0, 1, 2}), cycle(6, {3, 4, 5})});
  add("D5", 5, {cycle(5, {0, 1, 2, 3, 4}), compose(cycle(5, {1, 4}), cycle(5, {2, 3}))});
  add("Z2xZ6", 8, {cycle(8, {0, 1}), cycle(8, {2, 3, 4, 5, 6, 7})});
  add("A4", 4, {cycle(4, {0, 1, 2}), compose(cycle(4, {0, 1}), cycle(4, {2, 3}))});
  add("D6", 6, {cycle(6, {0, 1, 2, 3, 4, 5}), compose(cycle(6, {1, 5}), cycle(6, {2, 4}))});
  add("Dic3", 7, {cycle(7, {0, 1, 2}), compose(cycle(7, {1, 2}), cycle(7, {3, 4, 5, 6}))});
  return out;
}

}  // namespace urysohn::syndetic
