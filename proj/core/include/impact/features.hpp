// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>

namespace impact {

/// Per-video-frame feature vectors (one row per frame), e.g. CNN activations
/// computed upstream. frame_rate is the video rate in Hz.
struct FeatureSequence {
  Eigen::MatrixXd frames;  // N x D
  double frame_rate = 30.0;

  Eigen::Index count() const { return frames.rows(); }
  Eigen::Index dim() const { return frames.cols(); }
};

}  // namespace impact
