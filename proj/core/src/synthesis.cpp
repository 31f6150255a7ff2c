// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#include "impact/synthesis.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "impact/fft.hpp"
#include "impact/parallel.hpp"
#include "impact/rng.hpp"

namespace impact {

namespace {
constexpr double kEnvelopeFloor = 1e-8;  // avoids blowup in silent subbands
}

Waveform parametric_invert(const Cochleagram& c, const Filterbank& fb,
                           std::uint64_t seed, int threads) {
  if (c.channels() != fb.channels()) {
    throw ArgumentError("parametric_invert: channel count mismatch");
  }
  const int sr = fb.sample_rate();
  const auto n = static_cast<std::size_t>(
      std::llround(static_cast<double>(c.frames()) / c.env_rate * sr));

  Waveform out;
  out.sample_rate = sr;
  out.samples.assign(n, 0.0);
  if (n == 0) return out;

  const Eigen::MatrixXd raw_env = decompress_envelopes(c);

  std::vector<double> noise(n);
  Rng rng(seed);
  for (double& v : noise) v = rng.gaussian();
  const auto noise_spectrum = fft::rfft(noise);

  const auto n_channels = static_cast<std::size_t>(fb.channels());
  std::vector<std::vector<double>> channel_out(n_channels);

  parallel_for(n_channels, threads, [&](std::size_t ch) {
    const auto gains = fb.sampled_response(static_cast<int>(ch), n);
    std::vector<std::complex<double>> weighted(noise_spectrum.size());
    for (std::size_t i = 0; i < weighted.size(); ++i) {
      weighted[i] = noise_spectrum[i] * gains[i];
    }
    // Analytic signal of the filtered noise: real part is the subband,
    // magnitude is its Hilbert envelope.
    const auto analytic = fft::analytic_signal(weighted, n);

    std::vector<double> target(raw_env.rows());
    for (Eigen::Index t = 0; t < raw_env.rows(); ++t) {
      target[static_cast<std::size_t>(t)] = raw_env(t, static_cast<Eigen::Index>(ch));
    }
    std::vector<double> target_up = fft::resample(target, n);

    std::vector<double> shaped(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double own = std::max(std::abs(analytic[i]), kEnvelopeFloor);
      shaped[i] = analytic[i].real() / own * std::max(0.0, target_up[i]);
    }

    // Imposition leaks spectrally; confine the channel to its band again.
    auto shaped_spectrum = fft::rfft(shaped);
    for (std::size_t i = 0; i < shaped_spectrum.size(); ++i) {
      shaped_spectrum[i] *= gains[i];
    }
    channel_out[ch] = fft::irfft(shaped_spectrum, n);
  });

  // Serial sum in channel order keeps the result thread-count independent.
  for (std::size_t ch = 0; ch < n_channels; ++ch) {
    for (std::size_t i = 0; i < n; ++i) out.samples[i] += channel_out[ch][i];
  }
  return out;
}

}  // namespace impact
