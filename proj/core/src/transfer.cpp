// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#include "impact/transfer.hpp"

#include <cmath>

namespace impact {

TransferResult detect_and_transfer(const Cochleagram& predicted,
                                   const ExemplarDatabase& db,
                                   const ColoringTransform& coloring,
                                   const Filterbank& fb,
                                   const TransferParams& params, int threads) {
  TransferResult result;
  Waveform inverted = parametric_invert(predicted, fb, params.seed, threads);
  for (double& s : inverted.samples) s *= params.gain;

  OnsetParams onset_params = params.onset;
  onset_params.env_rate = predicted.env_rate;
  const OnsetList onsets = detect_onsets(inverted, onset_params);

  result.audio.sample_rate = inverted.sample_rate;
  result.audio.samples.assign(inverted.samples.size(), 0.0);

  const auto fade_len = static_cast<std::ptrdiff_t>(
      std::llround(params.fade * inverted.sample_rate));

  for (std::size_t k = 0; k < onsets.size(); ++k) {
    const double t = onsets.times[k];
    const auto peak_frame =
        static_cast<Eigen::Index>(std::llround(t * predicted.env_rate));
    const Eigen::VectorXd window =
        window_at(predicted, peak_frame - 1, db.window_len);
    const Eigen::VectorXd colored = apply_coloring(coloring, window);
    const ExemplarQueryResult match =
        query_exemplar(db, colored, params.material_filter);
    const ExemplarEntry& entry = db.entries[static_cast<std::size_t>(match.index)];

    const auto clip_len = static_cast<std::ptrdiff_t>(entry.clip.samples.size());
    const auto start = static_cast<std::ptrdiff_t>(
        std::llround((t - entry.peak_offset) * result.audio.sample_rate));
    for (std::ptrdiff_t i = 0; i < clip_len; ++i) {
      const std::ptrdiff_t dst = start + i;
      if (dst < 0 || dst >= static_cast<std::ptrdiff_t>(result.audio.samples.size())) {
        continue;
      }
      double g = 1.0;
      if (fade_len > 0) {
        if (i < fade_len) g = static_cast<double>(i + 1) / (fade_len + 1);
        const std::ptrdiff_t from_end = clip_len - 1 - i;
        if (from_end < fade_len) {
          g = std::min(g, static_cast<double>(from_end + 1) / (fade_len + 1));
        }
      }
      result.audio.samples[static_cast<std::size_t>(dst)] +=
          g * entry.clip.samples[static_cast<std::size_t>(i)];
    }
    result.records.push_back({t, match.index, match.distance});
  }
  return result;
}

Eigen::MatrixXd collect_peak_windows(const Cochleagram& c,
                                     const OnsetList& onsets, int window_len,
                                     double amplitude_threshold) {
  std::vector<Eigen::Index> keep;
  for (std::size_t i = 0; i < onsets.size(); ++i) {
    if (onsets.confidences[i] >= amplitude_threshold) {
      keep.push_back(static_cast<Eigen::Index>(i));
    }
  }
  Eigen::MatrixXd rows(static_cast<Eigen::Index>(keep.size()),
                       static_cast<Eigen::Index>(window_len) * c.channels());
  for (std::size_t r = 0; r < keep.size(); ++r) {
    const double t = onsets.times[static_cast<std::size_t>(keep[r])];
    const auto peak_frame = static_cast<Eigen::Index>(std::llround(t * c.env_rate));
    rows.row(static_cast<Eigen::Index>(r)) =
        window_at(c, peak_frame - 1, window_len).transpose();
  }
  return rows;
}

}  // namespace impact
