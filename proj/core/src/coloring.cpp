// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#include "impact/coloring.hpp"

#include <Eigen/Eigenvalues>

#include "impact/errors.hpp"
#include "impact/matrix_io.hpp"

namespace impact {
namespace {

Eigen::MatrixXd covariance(const Eigen::MatrixXd& samples,
                           const Eigen::VectorXd& mean) {
  const Eigen::MatrixXd centered = samples.rowwise() - mean.transpose();
  const double norm = samples.rows() > 1 ? 1.0 / (samples.rows() - 1.0) : 1.0;
  return centered.transpose() * centered * norm;
}

Eigen::MatrixXd symmetric_power(const Eigen::MatrixXd& cov, double exponent,
                                double floor, bool* hit_floor) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  Eigen::VectorXd eig = solver.eigenvalues();
  for (Eigen::Index i = 0; i < eig.size(); ++i) {
    if (eig(i) < floor) {
      eig(i) = floor;
      *hit_floor = true;
    }
  }
  const Eigen::VectorXd powered = eig.array().pow(exponent);
  return solver.eigenvectors() * powered.asDiagonal() *
         solver.eigenvectors().transpose();
}

}  // namespace

ColoringTransform ColoringTransform::identity(Eigen::Index dim) {
  ColoringTransform ct;
  ct.source_mean = Eigen::VectorXd::Zero(dim);
  ct.target_mean = Eigen::VectorXd::Zero(dim);
  ct.source_whitener = Eigen::MatrixXd::Identity(dim, dim);
  ct.target_colorer = Eigen::MatrixXd::Identity(dim, dim);
  return ct;
}

ColoringTransform fit_coloring(const Eigen::MatrixXd& predicted,
                               const Eigen::MatrixXd& real,
                               double eigenvalue_floor) {
  if (predicted.cols() != real.cols()) {
    throw ArgumentError("fit_coloring: dimension mismatch");
  }
  if (predicted.rows() < 2 || real.rows() < 2) {
    throw ArgumentError("fit_coloring: need at least two samples per side");
  }
  ColoringTransform ct;
  ct.source_mean = predicted.colwise().mean();
  ct.target_mean = real.colwise().mean();
  const Eigen::MatrixXd source_cov = covariance(predicted, ct.source_mean);
  const Eigen::MatrixXd target_cov = covariance(real, ct.target_mean);
  bool hit = false;
  ct.source_whitener = symmetric_power(source_cov, -0.5, eigenvalue_floor, &hit);
  ct.target_colorer = symmetric_power(target_cov, 0.5, eigenvalue_floor, &hit);
  ct.floored = hit;
  return ct;
}

Eigen::VectorXd apply_coloring(const ColoringTransform& ct,
                               const Eigen::VectorXd& v) {
  if (v.size() != ct.dim()) throw ArgumentError("apply_coloring: dimension mismatch");
  return ct.target_colorer * (ct.source_whitener * (v - ct.source_mean)) +
         ct.target_mean;
}

void save_coloring(const std::filesystem::path& path, const ColoringTransform& ct) {
  const Eigen::Index d = ct.dim();
  Eigen::MatrixXd packed(2 * d + 2, d);
  packed.row(0) = ct.source_mean.transpose();
  packed.row(1) = ct.target_mean.transpose();
  packed.block(2, 0, d, d) = ct.source_whitener;
  packed.block(2 + d, 0, d, d) = ct.target_colorer;
  write_matrix_file(path, "CLR1", packed, ct.floored ? 1.0 : 0.0);
}

ColoringTransform load_coloring(const std::filesystem::path& path) {
  const MatrixFileData m = read_matrix_file(path, "CLR1");
  const Eigen::Index d = m.data.cols();
  if (m.data.rows() != 2 * d + 2) {
    throw FormatError(path.string() + ": bad coloring layout");
  }
  ColoringTransform ct;
  ct.source_mean = m.data.row(0).transpose();
  ct.target_mean = m.data.row(1).transpose();
  ct.source_whitener = m.data.block(2, 0, d, d);
  ct.target_colorer = m.data.block(2 + d, 0, d, d);
  ct.floored = m.rate_hz != 0.0;
  return ct;
}

}  // namespace impact
