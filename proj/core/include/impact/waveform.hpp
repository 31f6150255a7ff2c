// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "impact/errors.hpp"

namespace impact {

/// Mono time-domain signal. Samples are dimensionless amplitudes, nominally
/// in [-1, 1]; sample_rate is in Hz.
struct Waveform {
  std::vector<double> samples;
  int sample_rate = 0;

  std::size_t size() const { return samples.size(); }
  double duration() const {
    return sample_rate > 0
               ? static_cast<double>(samples.size()) / sample_rate
               : 0.0;
  }
};

inline void require_finite(const Waveform& w, const char* who) {
  if (w.sample_rate <= 0) throw ArgumentError(std::string(who) + ": sample_rate must be positive");
  for (double s : w.samples) {
    if (!std::isfinite(s)) throw ArgumentError(std::string(who) + ": non-finite sample");
  }
}

}  // namespace impact
