// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

namespace impact {

// Zero-phase ERB-spaced filterbank. Band-pass responses are half-cosine bumps
// in ERB-warped frequency with 50% overlap between neighbors; a low-pass and
// a high-pass completion make the squared responses sum to one at every
// frequency in [0, Nyquist].
//
// Channel layout: 0 = low-pass, 1..n_band = band-pass (ERB-ordered),
// n_band+1 = high-pass. channels() == n_band + 2.
class Filterbank {
 public:
  static Filterbank build(int sample_rate, int n_band = 40,
                          double low_hz = 20.0, double high_hz = 0.0);

  int sample_rate() const { return sample_rate_; }
  int n_band() const { return n_band_; }
  int channels() const { return n_band_ + 2; }
  double low_hz() const { return cutoffs_hz_.front(); }
  double high_hz() const { return cutoffs_hz_.back(); }

  /// Amplitude gain of `channel` at `freq_hz` (exact, not table lookup).
  double response(int channel, double freq_hz) const;

  // Peak frequency of a channel: the ERB-grid point it is centered on
  // (low-pass peaks at DC, high-pass at Nyquist).
  double center_hz(int channel) const;

  /// Channel gains sampled on the rfft bin grid of an n_fft-point transform.
  std::vector<double> sampled_response(int channel, std::size_t n_fft) const;

  /// The n_band+2 ERB-spaced grid points the construction is anchored on.
  const std::vector<double>& erb_grid_hz() const { return cutoffs_hz_; }

 private:
  int sample_rate_ = 0;
  int n_band_ = 0;
  std::vector<double> cutoffs_hz_;   // n_band + 2 points, ascending
  std::vector<double> cutoffs_erb_;  // same grid in ERB numbers
};

}  // namespace impact
