#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "urysohn/metric.hpp"
#include "urysohn/rational.hpp"

namespace testing {

using urysohn::Rational;
using urysohn::metric::FiniteMetricSpace;
using urysohn::metric::Matrix;

inline Rational q(const char* text) { return Rational::parse(text); }

inline FiniteMetricSpace space(const Matrix& d) { return urysohn::metric::make_metric(d); }

/// Points of the real line at the given integer coordinates.
inline FiniteMetricSpace line(const std::vector<std::int64_t>& xs) {
  Matrix d(xs.size(), std::vector<Rational>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < xs.size(); ++j) d[i][j] = Rational(xs[i] > xs[j] ? xs[i] - xs[j] : xs[j] - xs[i]);
  }
  return space(d);
}

/// All distances equal to `side`.
inline FiniteMetricSpace uniform(std::size_t n, Rational side) {
  Matrix d(n, std::vector<Rational>(n, side));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  return space(d);
}

}  // namespace testing
