// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>

namespace impact {

// Orthonormal top-K projection fit on sound-feature frames. Columns of basis
// are ordered by descending explained variance; sign convention: the
// largest-magnitude coordinate of each column is positive.
struct PcaTransform {
  Eigen::VectorXd mean;                // C
  Eigen::MatrixXd basis;               // C x K, orthonormal columns
  Eigen::VectorXd explained_variance;  // K, descending
  bool rank_deficient = false;

  Eigen::Index input_dim() const { return mean.size(); }
  Eigen::Index k() const { return basis.cols(); }
};

/// Fits on rows of `samples` (N x C). Rank below k sets rank_deficient.
PcaTransform pca_fit(const Eigen::MatrixXd& samples, int k = 10);

Eigen::VectorXd pca_project(const PcaTransform& t, const Eigen::VectorXd& v);
Eigen::VectorXd pca_invert(const PcaTransform& t, const Eigen::VectorXd& q);

/// Row-wise variants (N x C -> N x K and back).
Eigen::MatrixXd pca_project_rows(const PcaTransform& t, const Eigen::MatrixXd& rows);
Eigen::MatrixXd pca_invert_rows(const PcaTransform& t, const Eigen::MatrixXd& rows);

}  // namespace impact
