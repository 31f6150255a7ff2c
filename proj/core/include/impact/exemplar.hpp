// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "impact/cochleagram.hpp"
#include "impact/manifest.hpp"
#include "impact/waveform.hpp"

namespace impact {

/// One training impact: the cochleagram block used for matching (flattened
/// frame-major), the clip audio to transfer, and where the peak sits in it.
struct ExemplarEntry {
  Eigen::VectorXd window;  // window_len * channels, frame-major
  Waveform clip;
  double peak_offset = 0.0;  // seconds from clip start to the impact peak
  std::optional<std::string> material;
};

struct ExemplarDatabase {
  int window_len = 8;   // envelope frames per query window
  int channels = 42;
  double env_rate = 90.0;
  int sample_rate = 0;
  std::vector<ExemplarEntry> entries;

  void save(const std::filesystem::path& dir) const;
  static ExemplarDatabase load(const std::filesystem::path& dir);
};

// Builds one entry per annotated (or detected) onset in the train split.
// Windows start one envelope frame before the peak; clips cover
// clip_video_frames frames (0.5 s at 30 fps) centered on the peak.
ExemplarDatabase build_exemplar_db(const std::vector<ManifestEntry>& train,
                                   const std::filesystem::path& manifest_path,
                                   int window_len, const CochleaParams& params,
                                   int clip_video_frames = 15,
                                   double video_fps = 30.0, int threads = 1);

struct ExemplarQueryResult {
  int index = -1;
  double distance = 0.0;
};

// Exhaustive L1 scan; ties break to the lowest entry index. material_filter
// restricts the candidate pool (the "+ mat" oracle); an empty pool is an
// error.
ExemplarQueryResult query_exemplar(
    const ExemplarDatabase& db, const Eigen::VectorXd& query,
    const std::optional<std::string>& material_filter = std::nullopt);

// Flattened window_len-frame block starting at start_frame (frame-major);
// rows outside the cochleagram are zero.
Eigen::VectorXd window_at(const Cochleagram& c, Eigen::Index start_frame,
                          int window_len);

}  // namespace impact
