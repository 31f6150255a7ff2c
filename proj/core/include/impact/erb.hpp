// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace impact {

/// Glasberg-Moore ERB number for a frequency in Hz.
double erb_from_hz(double hz);

/// Inverse of erb_from_hz.
double hz_from_erb(double erb);

// n frequencies equally spaced on the ERB-number scale, first == low_hz and
// last == high_hz, strictly increasing. Requires 0 < low_hz < high_hz, n >= 2.
std::vector<double> erb_space(double low_hz, double high_hz, int n);

}  // namespace impact
