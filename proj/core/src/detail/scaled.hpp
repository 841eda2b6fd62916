#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "urysohn/rational.hpp"

namespace urysohn::detail {

/// Rewrites values over their common denominator. Returns nullopt if the
/// common denominator or any scaled value leaves a range where sums of three
/// values still fit in 64 bits.
inline std::optional<std::vector<std::int64_t>> common_scale(std::span<const Rational> values) {
  constexpr std::int64_t limit = std::int64_t{1} << 60;
  std::int64_t lcm = 1;
  for (const Rational& v : values) {
    lcm = std::lcm(lcm, v.den());
    if (lcm > limit || lcm <= 0) return std::nullopt;
  }
  std::vector<std::int64_t> out;
  out.reserve(values.size());
  for (const Rational& v : values) {
    wide_int scaled = static_cast<wide_int>(v.num()) * (lcm / v.den());
    if (scaled > limit || scaled < -limit) return std::nullopt;
    out.push_back(static_cast<std::int64_t>(scaled));
  }
  return out;
}

}  // namespace urysohn::detail
