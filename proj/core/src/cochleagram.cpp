// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#include "impact/cochleagram.hpp"

#include <cmath>
#include <complex>

#include "impact/fft.hpp"
#include "impact/parallel.hpp"

namespace impact {
namespace {

std::vector<double> envelope_from_weighted_spectrum(
    const std::vector<std::complex<double>>& weighted, std::size_t n,
    std::size_t target_len) {
  const auto analytic = fft::analytic_signal(weighted, n);
  std::vector<double> env(n);
  for (std::size_t i = 0; i < n; ++i) env[i] = std::abs(analytic[i]);
  std::vector<double> down = fft::resample(env, target_len);
  // Band-limited resampling can undershoot; envelopes are nonnegative.
  for (double& v : down) v = std::max(0.0, v);
  return down;
}

}  // namespace

Cochleagram subband_envelopes(const Waveform& w, const Filterbank& fb,
                              double env_rate, double compression,
                              bool sqrt_domain, int threads) {
  if (w.sample_rate != fb.sample_rate()) {
    throw ArgumentError("subband_envelopes: waveform/filterbank rate mismatch");
  }
  if (!(env_rate > 0.0)) throw ArgumentError("subband_envelopes: env_rate must be positive");
  require_finite(w, "subband_envelopes");

  const std::size_t n = w.samples.size();
  const auto frames = static_cast<Eigen::Index>(
      std::llround(static_cast<double>(n) / w.sample_rate * env_rate));
  const int n_channels = fb.channels();

  Cochleagram c;
  c.env_rate = env_rate;
  c.compression = compression;
  c.sqrt_domain = sqrt_domain;
  c.env.setZero(frames, n_channels);
  if (n == 0 || frames == 0) {
    c.env.resize(frames, n_channels);
    return c;
  }

  const auto spectrum = fft::rfft(w.samples);
  const double exponent = sqrt_domain ? compression * 0.5 : compression;

  parallel_for(static_cast<std::size_t>(n_channels), threads, [&](std::size_t ch) {
    const auto gains = fb.sampled_response(static_cast<int>(ch), n);
    std::vector<std::complex<double>> weighted(spectrum.size());
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
      weighted[i] = spectrum[i] * gains[i];
    }
    const auto env = envelope_from_weighted_spectrum(
        weighted, n, static_cast<std::size_t>(frames));
    for (Eigen::Index t = 0; t < frames; ++t) {
      c.env(t, static_cast<Eigen::Index>(ch)) =
          std::pow(env[static_cast<std::size_t>(t)], exponent);
    }
  });
  return c;
}

Cochleagram analyze(const Waveform& w, const CochleaParams& params,
                    int threads) {
  const Filterbank fb = Filterbank::build(w.sample_rate, params.n_band,
                                          params.low_hz, params.high_hz);
  return subband_envelopes(w, fb, params.env_rate, params.compression,
                           params.sqrt_domain, threads);
}

std::vector<double> filter_subband(const Waveform& w, const Filterbank& fb,
                                   int channel) {
  if (w.sample_rate != fb.sample_rate()) {
    throw ArgumentError("filter_subband: waveform/filterbank rate mismatch");
  }
  const std::size_t n = w.samples.size();
  if (n == 0) return {};
  auto spectrum = fft::rfft(w.samples);
  const auto gains = fb.sampled_response(channel, n);
  for (std::size_t i = 0; i < spectrum.size(); ++i) spectrum[i] *= gains[i];
  return fft::irfft(spectrum, n);
}

std::vector<double> broadband_envelope(const Waveform& w, double env_rate) {
  require_finite(w, "broadband_envelope");
  const std::size_t n = w.samples.size();
  const auto frames = static_cast<std::size_t>(
      std::llround(static_cast<double>(n) / w.sample_rate * env_rate));
  if (n == 0 || frames == 0) return std::vector<double>(frames, 0.0);
  const auto spectrum = fft::rfft(w.samples);
  return envelope_from_weighted_spectrum(spectrum, n, frames);
}

Eigen::MatrixXd decompress_envelopes(const Cochleagram& c) {
  Eigen::MatrixXd raw = c.env;
  if (c.sqrt_domain) raw = raw.array().square().matrix();
  if (c.compression > 0.0 && c.compression != 1.0) {
    raw = raw.array().pow(1.0 / c.compression).matrix();
  }
  return raw;
}

}  // namespace impact
