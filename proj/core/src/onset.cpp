// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#include "impact/onset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "impact/cochleagram.hpp"

namespace impact {
namespace {

double median_abs_forward_diff(std::span<const double> env) {
  if (env.size() < 2) return 0.0;
  std::vector<double> diffs(env.size() - 1);
  for (std::size_t t = 0; t + 1 < env.size(); ++t) {
    diffs[t] = std::abs(env[t + 1] - env[t]);
  }
  const std::size_t mid = diffs.size() / 2;
  std::nth_element(diffs.begin(), diffs.begin() + mid, diffs.end());
  return diffs[mid];
}

// One mean-shift trajectory on the kernel density with sample weights env[t].
double mean_shift_mode(std::span<const double> env, double start,
                       double bandwidth_samples) {
  double x = start;
  const double inv2bw2 = 1.0 / (2.0 * bandwidth_samples * bandwidth_samples);
  // The kernel is effectively zero past a few bandwidths; the window keeps
  // each iteration local.
  const double reach = 6.0 * bandwidth_samples;
  for (int iter = 0; iter < 200; ++iter) {
    const auto lo = static_cast<std::size_t>(std::max(0.0, std::floor(x - reach)));
    const auto hi = static_cast<std::size_t>(
        std::min<double>(static_cast<double>(env.size()) - 1.0, std::ceil(x + reach)));
    double num = 0.0;
    double den = 0.0;
    for (std::size_t t = lo; t <= hi; ++t) {
      const double d = static_cast<double>(t) - x;
      const double k = env[t] * std::exp(-d * d * inv2bw2);
      num += static_cast<double>(t) * k;
      den += k;
    }
    if (den <= 0.0) break;
    const double next = num / den;
    if (std::abs(next - x) < 1e-4) {
      x = next;
      break;
    }
    x = next;
  }
  return x;
}

}  // namespace

OnsetList detect_onsets_envelope(std::span<const double> envelope,
                                 double env_rate, const OnsetParams& params) {
  if (!(params.min_sep > 0.0)) throw ArgumentError("detect_onsets: min_sep must be positive");
  if (!(params.bandwidth > 0.0)) throw ArgumentError("detect_onsets: bandwidth must be positive");

  OnsetList result;
  if (envelope.size() < 2) return result;

  const double threshold =
      params.grad_threshold.value_or(params.threshold_scale *
                                     median_abs_forward_diff(envelope));

  std::vector<double> candidates;
  for (std::size_t t = 0; t + 1 < envelope.size(); ++t) {
    if (envelope[t + 1] - envelope[t] > threshold) {
      candidates.push_back(static_cast<double>(t + 1));
    }
  }
  if (candidates.empty()) return result;

  const double bw = params.bandwidth * env_rate;
  std::vector<double> modes;
  modes.reserve(candidates.size());
  for (double c : candidates) {
    modes.push_back(mean_shift_mode(envelope, c, bw));
  }
  std::sort(modes.begin(), modes.end());

  // Collapse candidates that converged to the same mode.
  std::vector<double> merged;
  for (double m : modes) {
    if (merged.empty() || m - merged.back() >= 1.0) {
      merged.push_back(m);
    }
  }

  struct Peak {
    double time;
    double confidence;
  };
  std::vector<Peak> peaks;
  peaks.reserve(merged.size());
  const auto last = static_cast<std::ptrdiff_t>(envelope.size()) - 1;
  for (double m : merged) {
    const auto idx = std::clamp<std::ptrdiff_t>(
        static_cast<std::ptrdiff_t>(std::llround(m)), 0, last);
    peaks.push_back({m / env_rate, envelope[static_cast<std::size_t>(idx)]});
  }

  // Greedy NMS, highest confidence first; earlier time wins ties.
  std::vector<std::size_t> order(peaks.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (peaks[a].confidence != peaks[b].confidence) {
      return peaks[a].confidence > peaks[b].confidence;
    }
    return peaks[a].time < peaks[b].time;
  });
  std::vector<Peak> kept;
  for (std::size_t i : order) {
    bool blocked = false;
    for (const Peak& k : kept) {
      if (std::abs(peaks[i].time - k.time) < params.min_sep) {
        blocked = true;
        break;
      }
    }
    if (!blocked) kept.push_back(peaks[i]);
  }
  std::sort(kept.begin(), kept.end(),
            [](const Peak& a, const Peak& b) { return a.time < b.time; });

  for (const Peak& p : kept) {
    result.times.push_back(p.time);
    result.confidences.push_back(p.confidence);
  }
  return result;
}

OnsetList detect_onsets(const Waveform& w, const OnsetParams& params) {
  const auto env = broadband_envelope(w, params.env_rate);
  return detect_onsets_envelope(env, params.env_rate, params);
}

std::pair<Waveform, Eigen::MatrixXd> extract_clip(const Waveform& w,
                                                  const FeatureSequence& f,
                                                  double onset_time,
                                                  int n_frames) {
  if (n_frames < 1 || n_frames % 2 == 0) {
    throw ArgumentError("extract_clip: n_frames must be odd and positive");
  }
  if (onset_time < 0.0 || onset_time > w.duration()) {
    throw ArgumentError("extract_clip: onset outside signal");
  }
  const int half = (n_frames - 1) / 2;
  const auto center =
      static_cast<Eigen::Index>(std::llround(onset_time * f.frame_rate));
  const Eigen::Index first = center - half;

  Eigen::MatrixXd clip_features = Eigen::MatrixXd::Zero(n_frames, f.dim());
  for (int i = 0; i < n_frames; ++i) {
    const Eigen::Index src = first + i;
    if (src >= 0 && src < f.count()) {
      clip_features.row(i) = f.frames.row(src);
    }
  }

  const double span_start = static_cast<double>(first) / f.frame_rate;
  const auto n_samples = static_cast<std::ptrdiff_t>(
      std::llround(static_cast<double>(n_frames) / f.frame_rate * w.sample_rate));
  const auto start_sample =
      static_cast<std::ptrdiff_t>(std::llround(span_start * w.sample_rate));

  Waveform clip;
  clip.sample_rate = w.sample_rate;
  clip.samples.assign(static_cast<std::size_t>(n_samples), 0.0);
  for (std::ptrdiff_t i = 0; i < n_samples; ++i) {
    const std::ptrdiff_t src = start_sample + i;
    if (src >= 0 && src < static_cast<std::ptrdiff_t>(w.samples.size())) {
      clip.samples[static_cast<std::size_t>(i)] = w.samples[static_cast<std::size_t>(src)];
    }
  }
  return {std::move(clip), std::move(clip_features)};
}

}  // namespace impact
