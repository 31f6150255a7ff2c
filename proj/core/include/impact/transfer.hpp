// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "impact/coloring.hpp"
#include "impact/exemplar.hpp"
#include "impact/onset.hpp"
#include "impact/synthesis.hpp"

namespace impact {

struct TransferRecord {
  double time = 0.0;  // detected peak time, seconds
  int entry = -1;     // matched database entry
  double distance = 0.0;
};

struct TransferResult {
  Waveform audio;
  std::vector<TransferRecord> records;
};

struct TransferParams {
  double gain = 4.0;  // applied before peak detection
  OnsetParams onset;
  std::uint64_t seed = 0;
  std::optional<std::string> material_filter;
  double fade = 0.010;  // seconds of linear fade at clip edges
};

// Example-based synthesis for long predictions: parametric inversion, gain,
// amplitude-peak detection, then per peak an 8-frame feature window starting
// one frame before the peak is colored, L1-matched against the database, and
// the matched clip is overlaid (summing where clips overlap) with its peak at
// the detected time.
TransferResult detect_and_transfer(const Cochleagram& predicted,
                                   const ExemplarDatabase& db,
                                   const ColoringTransform& coloring,
                                   const Filterbank& fb,
                                   const TransferParams& params = {},
                                   int threads = 1);

// Peak-window sample matrix for coloring fits: one row per onset whose
// confidence clears amplitude_threshold.
Eigen::MatrixXd collect_peak_windows(const Cochleagram& c,
                                     const OnsetList& onsets, int window_len,
                                     double amplitude_threshold = 0.0);

}  // namespace impact
