// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>

namespace impact {

constexpr double kDefaultLossEpsilon = 1.0 / (25.0 * 25.0);

struct LossResult {
  double value = 0.0;
  Eigen::MatrixXd grad;  // dLoss/dPred, same shape as pred
};

// Robust regression loss: sum_t log(epsilon + ||pred_t - target_t||^2).
// The per-step gradient 2 r / (epsilon + ||r||^2) is bounded by 1/sqrt(eps).
LossResult robust_loss(const Eigen::MatrixXd& pred,
                       const Eigen::MatrixXd& target,
                       double epsilon = kDefaultLossEpsilon);

// Lagged pairing: output row t is the prediction for target row t - lag, so
// the first `lag` outputs are unused and the last `lag` targets unsupervised.
// grad is w.r.t. pred (zero rows where unused).
LossResult lagged_robust_loss(const Eigen::MatrixXd& pred,
                              const Eigen::MatrixXd& target, int lag,
                              double epsilon = kDefaultLossEpsilon);

}  // namespace impact
