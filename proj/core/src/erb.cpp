// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#include "impact/erb.hpp"

#include <cmath>

#include "impact/errors.hpp"

namespace impact {

double erb_from_hz(double hz) {
  return 21.4 * std::log10(0.00437 * hz + 1.0);
}

double hz_from_erb(double erb) {
  return (std::pow(10.0, erb / 21.4) - 1.0) / 0.00437;
}

std::vector<double> erb_space(double low_hz, double high_hz, int n) {
  if (!(low_hz > 0.0) || !(high_hz > low_hz)) {
    throw ArgumentError("erb_space: need 0 < low_hz < high_hz");
  }
  if (n < 2) throw ArgumentError("erb_space: need n >= 2");
  const double lo = erb_from_hz(low_hz);
  const double hi = erb_from_hz(high_hz);
  std::vector<double> centers(n);
  for (int i = 0; i < n; ++i) {
    const double e = lo + (hi - lo) * i / (n - 1);
    centers[i] = hz_from_erb(e);
  }
  // Pin the endpoints so refining n keeps the range bit-stable.
  centers.front() = low_hz;
  centers.back() = high_hz;
  return centers;
}

}  // namespace impact
