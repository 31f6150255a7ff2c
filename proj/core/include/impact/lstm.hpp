// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "impact/pca.hpp"
#include "impact/rng.hpp"

namespace impact {

// One LSTM layer. Gate order in the stacked 4H dimension is
// [input, forget, candidate, output].
struct LstmLayer {
  Eigen::MatrixXd w_input;   // 4H x D_in
  Eigen::MatrixXd w_hidden;  // 4H x H
  Eigen::VectorXd bias;      // 4H

  Eigen::Index hidden() const { return w_hidden.cols(); }
  Eigen::Index input_dim() const { return w_input.cols(); }
};

// Recurrent regressor from per-frame visual features to PCA-domain sound
// features: stacked LSTM, affine output head, k-fold input replication to
// bridge the video and envelope rates, and an output lag that lets the model
// see `lag` future steps before committing to a prediction.
//
// With more than one layer the replication feeds the last layer's input
// (earlier layers run at the video rate); with a single layer the input
// features themselves are replicated. `replicate_at_last_layer` switches
// between the two paths explicitly.
struct LstmRegressor {
  std::vector<LstmLayer> layers;
  Eigen::MatrixXd head_w;  // K x H
  Eigen::VectorXd head_b;  // K
  PcaTransform pca;
  int k_replicate = 3;
  int lag = 0;
  bool replicate_at_last_layer = true;

  Eigen::Index hidden() const { return layers.back().hidden(); }
  Eigen::Index input_dim() const { return layers.front().input_dim(); }
  Eigen::Index out_dim() const { return head_w.rows(); }

  /// Uniform(-0.08, 0.08) weights, forget-gate bias +1.
  static LstmRegressor init(int input_dim, int hidden, int n_layers,
                            int out_dim, Rng& rng, int k_replicate = 3,
                            int lag = 0, bool replicate_at_last_layer = true);
};

/// AAABBB...-style k-fold row replication (envelope sample t maps to video
/// frame t/k).
Eigen::MatrixXd replicate_rows(const Eigen::MatrixXd& frames, int k);

// Everything the backward pass needs from a forward pass.
struct LstmLayerCache {
  Eigen::MatrixXd inputs;  // T_layer x D_in
  Eigen::MatrixXd gate_i, gate_f, gate_g, gate_o;  // T x H (post-activation)
  Eigen::MatrixXd cell, tanh_cell, hidden;         // T x H
};

struct LstmForwardCache {
  std::vector<LstmLayerCache> layers;
  Eigen::MatrixXd outputs;  // T x K
};

// Runs the recurrence from zero initial state; returns raw per-step outputs
// (T x K with T = k_replicate * N). Lag does not change the forward pass,
// only how outputs are paired with targets.
Eigen::MatrixXd lstm_forward(const LstmRegressor& model,
                             const Eigen::MatrixXd& features,
                             LstmForwardCache* cache = nullptr);

struct LstmGradients {
  std::vector<LstmLayer> layers;  // same shapes as the model's
  Eigen::MatrixXd head_w;
  Eigen::VectorXd head_b;

  static LstmGradients zeros_like(const LstmRegressor& model);
  void add_scaled(const LstmGradients& other, double scale);
  double squared_norm() const;
};

/// BPTT: d_outputs is dLoss/d(raw outputs), T x K.
void lstm_backward(const LstmRegressor& model, const LstmForwardCache& cache,
                   const Eigen::MatrixXd& d_outputs, LstmGradients* grads);

}  // namespace impact
