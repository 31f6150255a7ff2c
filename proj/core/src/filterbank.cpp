// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#include "impact/filterbank.hpp"

#include <cmath>

#include "impact/erb.hpp"
#include "impact/errors.hpp"

namespace impact {

Filterbank Filterbank::build(int sample_rate, int n_band, double low_hz,
                             double high_hz) {
  if (sample_rate <= 0) throw ArgumentError("Filterbank: sample_rate must be positive");
  if (n_band < 1) throw ArgumentError("Filterbank: need at least one band-pass channel");
  if (high_hz <= 0.0) high_hz = 0.45 * sample_rate;
  const double nyquist = 0.5 * sample_rate;
  if (!(low_hz > 0.0) || !(high_hz > low_hz) || !(high_hz < nyquist)) {
    throw ArgumentError("Filterbank: need 0 < low_hz < high_hz < Nyquist");
  }

  Filterbank fb;
  fb.sample_rate_ = sample_rate;
  fb.n_band_ = n_band;
  fb.cutoffs_hz_ = erb_space(low_hz, high_hz, n_band + 2);
  fb.cutoffs_erb_.resize(fb.cutoffs_hz_.size());
  for (std::size_t i = 0; i < fb.cutoffs_hz_.size(); ++i) {
    fb.cutoffs_erb_[i] = erb_from_hz(fb.cutoffs_hz_[i]);
  }
  return fb;
}

namespace {

// Half-cosine bump in ERB coordinates: 1 at the center grid point, 0 at the
// two neighboring grid points. cos^2 of one bump plus cos^2 of its neighbor
// is exactly 1 in the shared interval, which is what the low-/high-pass
// completions and the partition invariant rely on.
double bump(double erb, double lo, double center, double hi) {
  if (erb <= lo || erb >= hi) return 0.0;
  return std::cos((erb - center) / (hi - lo) * M_PI);
}

}  // namespace

double Filterbank::response(int channel, double freq_hz) const {
  if (channel < 0 || channel >= channels()) {
    throw ArgumentError("Filterbank::response: channel out of range");
  }
  if (freq_hz < 0.0) return 0.0;
  const double erb = erb_from_hz(freq_hz);
  const auto& grid = cutoffs_erb_;
  const int last = n_band_ + 1;

  if (channel == 0) {  // low-pass: complement of the first band-pass rise
    if (freq_hz >= cutoffs_hz_[1]) return 0.0;
    const double bp = bump(erb, grid[0], grid[1], grid[2]);
    return std::sqrt(std::max(0.0, 1.0 - bp * bp));
  }
  if (channel == last) {  // high-pass: complement of the last band-pass fall
    if (freq_hz <= cutoffs_hz_[n_band_]) return 0.0;
    const double bp = bump(erb, grid[n_band_ - 1], grid[n_band_], grid[last]);
    return std::sqrt(std::max(0.0, 1.0 - bp * bp));
  }
  return bump(erb, grid[channel - 1], grid[channel], grid[channel + 1]);
}

double Filterbank::center_hz(int channel) const {
  if (channel < 0 || channel >= channels()) {
    throw ArgumentError("Filterbank::center_hz: channel out of range");
  }
  if (channel == 0) return 0.0;
  if (channel == n_band_ + 1) return 0.5 * sample_rate_;
  return cutoffs_hz_[channel];
}

std::vector<double> Filterbank::sampled_response(int channel,
                                                 std::size_t n_fft) const {
  const std::size_t bins = n_fft / 2 + 1;
  std::vector<double> gains(bins);
  const double hz_per_bin = static_cast<double>(sample_rate_) / n_fft;
  for (std::size_t i = 0; i < bins; ++i) {
    gains[i] = response(channel, i * hz_per_bin);
  }
  return gains;
}

}  // namespace impact
