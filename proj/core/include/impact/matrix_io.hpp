// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>

#include <Eigen/Core>

#include "impact/cochleagram.hpp"
#include "impact/features.hpp"

namespace impact {

// Binary matrix container shared by cochleagrams ("CGM1") and feature
// sequences ("FTR1"): 4-byte magic, u32le channel/dim count, u32le frame
// count, f64le rate in Hz, then frame-major (row-major) f32le payload.
struct MatrixFileData {
  Eigen::MatrixXd data;  // frames x channels
  double rate_hz = 0.0;
};

void write_matrix_file(const std::filesystem::path& path,
                       const std::string& magic, const Eigen::MatrixXd& data,
                       double rate_hz);
MatrixFileData read_matrix_file(const std::filesystem::path& path,
                                const std::string& expected_magic);

void write_cochleagram(const std::filesystem::path& path, const Cochleagram& c);
// The container stores env values as written; compression/sqrt metadata is a
// runtime concern and callers get the defaults (c = 0.3, non-sqrt).
Cochleagram read_cochleagram(const std::filesystem::path& path);

void write_features(const std::filesystem::path& path, const FeatureSequence& f);
FeatureSequence read_features(const std::filesystem::path& path);

}  // namespace impact
