// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>

#include "impact/filterbank.hpp"
#include "impact/waveform.hpp"

namespace impact {

// Compressed subband envelopes: one row per envelope sample, one column per
// filterbank channel (low-pass, band-passes, high-pass). Values are raw
// envelopes raised to `compression`, then square-rooted when sqrt_domain is
// set (the domain the sequence model is trained in).
struct Cochleagram {
  Eigen::MatrixXd env;  // T x C, entries >= 0
  double env_rate = 90.0;
  double compression = 0.3;
  bool sqrt_domain = false;

  Eigen::Index frames() const { return env.rows(); }
  Eigen::Index channels() const { return env.cols(); }
  double duration() const { return env.rows() / env_rate; }
};

struct CochleaParams {
  int n_band = 40;
  double low_hz = 20.0;
  double high_hz = 0.0;  // 0 -> 0.45 * sample_rate
  double env_rate = 90.0;
  double compression = 0.3;
  bool sqrt_domain = false;
};

// Subband-envelope analysis: per channel, zero-phase filtering fused with the
// analytic signal in one FFT pass, Hilbert envelope, band-limited resampling
// to env_rate, power-law compression, optional square root.
Cochleagram subband_envelopes(const Waveform& w, const Filterbank& fb,
                              double env_rate = 90.0, double compression = 0.3,
                              bool sqrt_domain = false, int threads = 1);

Cochleagram analyze(const Waveform& w, const CochleaParams& params,
                    int threads = 1);

/// One band-passed real signal at the audio rate (channel as in Filterbank).
std::vector<double> filter_subband(const Waveform& w, const Filterbank& fb,
                                   int channel);

/// Full-band Hilbert envelope resampled to env_rate. Used by onset detection.
std::vector<double> broadband_envelope(const Waveform& w,
                                       double env_rate = 90.0);

/// Raw (uncompressed) envelopes: undoes the square root and the power law.
Eigen::MatrixXd decompress_envelopes(const Cochleagram& c);

}  // namespace impact
