// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <utility>

#include <Eigen/Core>

#include "impact/features.hpp"
#include "impact/waveform.hpp"

namespace impact {

/// Detected impact onsets, ascending in time; confidences are the envelope
/// peak amplitudes. After NMS consecutive times differ by >= min_sep.
struct OnsetList {
  std::vector<double> times;
  std::vector<double> confidences;

  std::size_t size() const { return times.size(); }
};

struct OnsetParams {
  // Absolute gradient threshold; when unset it adapts to the recording as
  // threshold_scale x median |forward difference| of the envelope.
  std::optional<double> grad_threshold;
  double threshold_scale = 8.0;
  double min_sep = 0.25;    // seconds, enforced by NMS
  double bandwidth = 0.05;  // seconds, mean-shift Gaussian kernel
  double env_rate = 90.0;
};

// Amplitude-gradient candidates, mean-shift merge (amplitude treated as a
// density over time), then greedy non-maximal suppression by confidence.
// Silence yields an empty list, not an error.
OnsetList detect_onsets(const Waveform& w, const OnsetParams& params = {});
OnsetList detect_onsets_envelope(std::span<const double> envelope,
                                 double env_rate,
                                 const OnsetParams& params = {});

// Clip extraction around an onset: n_frames feature frames centered on the
// onset's video frame (zero-padded at sequence edges) and the audio covering
// the same time span. n_frames must be odd.
std::pair<Waveform, Eigen::MatrixXd> extract_clip(const Waveform& w,
                                                  const FeatureSequence& f,
                                                  double onset_time,
                                                  int n_frames = 15);

}  // namespace impact
