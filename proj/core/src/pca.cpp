// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#include "impact/pca.hpp"

#include <Eigen/Eigenvalues>

#include "impact/errors.hpp"

namespace impact {

PcaTransform pca_fit(const Eigen::MatrixXd& samples, int k) {
  const Eigen::Index n = samples.rows();
  const Eigen::Index dim = samples.cols();
  if (n < 1) throw ArgumentError("pca_fit: need at least one sample");
  if (k < 1 || k > dim) throw ArgumentError("pca_fit: k out of range");

  PcaTransform t;
  t.mean = samples.colwise().mean();
  Eigen::MatrixXd centered = samples.rowwise() - t.mean.transpose();
  const double norm = n > 1 ? 1.0 / static_cast<double>(n - 1) : 1.0;
  Eigen::MatrixXd cov = centered.transpose() * centered * norm;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  // Eigen returns ascending eigenvalues; take the top k in reverse.
  t.basis.resize(dim, k);
  t.explained_variance.resize(k);
  for (int j = 0; j < k; ++j) {
    const Eigen::Index src = dim - 1 - j;
    Eigen::VectorXd col = solver.eigenvectors().col(src);
    Eigen::Index max_row = 0;
    col.cwiseAbs().maxCoeff(&max_row);
    if (col(max_row) < 0.0) col = -col;
    t.basis.col(j) = col;
    t.explained_variance(j) = std::max(0.0, solver.eigenvalues()(src));
  }

  const double top = solver.eigenvalues()(dim - 1);
  const double floor = std::max(top, 1.0) * 1e-12;
  int rank = 0;
  for (int j = 0; j < k; ++j) {
    if (t.explained_variance(j) > floor) ++rank;
  }
  t.rank_deficient = rank < k;
  return t;
}

Eigen::VectorXd pca_project(const PcaTransform& t, const Eigen::VectorXd& v) {
  if (v.size() != t.input_dim()) throw ArgumentError("pca_project: dimension mismatch");
  return t.basis.transpose() * (v - t.mean);
}

Eigen::VectorXd pca_invert(const PcaTransform& t, const Eigen::VectorXd& q) {
  if (q.size() != t.k()) throw ArgumentError("pca_invert: dimension mismatch");
  return t.basis * q + t.mean;
}

Eigen::MatrixXd pca_project_rows(const PcaTransform& t, const Eigen::MatrixXd& rows) {
  if (rows.cols() != t.input_dim()) throw ArgumentError("pca_project_rows: dimension mismatch");
  return (rows.rowwise() - t.mean.transpose()) * t.basis;
}

Eigen::MatrixXd pca_invert_rows(const PcaTransform& t, const Eigen::MatrixXd& rows) {
  if (rows.cols() != t.k()) throw ArgumentError("pca_invert_rows: dimension mismatch");
  return (rows * t.basis.transpose()).rowwise() + t.mean.transpose();
}

}  // namespace impact
