// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>

#include <Eigen/Core>

namespace impact {

// Affine map aligning the first two moments of predicted features with those
// of real features: v -> target_colorer * source_whitener * (v - source_mean)
// + target_mean. Whitener/colorer come from symmetric eigendecompositions
// with an eigenvalue floor.
struct ColoringTransform {
  Eigen::VectorXd source_mean;
  Eigen::VectorXd target_mean;
  Eigen::MatrixXd source_whitener;
  Eigen::MatrixXd target_colorer;
  bool floored = false;  // set when any eigenvalue hit the floor

  static ColoringTransform identity(Eigen::Index dim);
  Eigen::Index dim() const { return source_mean.size(); }
};

/// Fits from sample rows (predicted and real peak features respectively).
ColoringTransform fit_coloring(const Eigen::MatrixXd& predicted,
                               const Eigen::MatrixXd& real,
                               double eigenvalue_floor = 1e-12);

Eigen::VectorXd apply_coloring(const ColoringTransform& ct,
                               const Eigen::VectorXd& v);

void save_coloring(const std::filesystem::path& path, const ColoringTransform& ct);
ColoringTransform load_coloring(const std::filesystem::path& path);

}  // namespace impact
