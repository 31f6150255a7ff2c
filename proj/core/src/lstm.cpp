// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#include "impact/lstm.hpp"

#include <cmath>

#include "impact/errors.hpp"

namespace impact {
namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

void run_layer(const LstmLayer& layer, const Eigen::MatrixXd& inputs,
               LstmLayerCache& cache) {
  const Eigen::Index steps = inputs.rows();
  const Eigen::Index h_dim = layer.hidden();

  cache.inputs = inputs;
  cache.gate_i.resize(steps, h_dim);
  cache.gate_f.resize(steps, h_dim);
  cache.gate_g.resize(steps, h_dim);
  cache.gate_o.resize(steps, h_dim);
  cache.cell.resize(steps, h_dim);
  cache.tanh_cell.resize(steps, h_dim);
  cache.hidden.resize(steps, h_dim);

  Eigen::VectorXd h_prev = Eigen::VectorXd::Zero(h_dim);
  Eigen::VectorXd c_prev = Eigen::VectorXd::Zero(h_dim);
  Eigen::VectorXd z(4 * h_dim);
  for (Eigen::Index t = 0; t < steps; ++t) {
    z.noalias() = layer.w_input * inputs.row(t).transpose();
    z.noalias() += layer.w_hidden * h_prev;
    z += layer.bias;

    Eigen::VectorXd i(h_dim), f(h_dim), g(h_dim), o(h_dim);
    for (Eigen::Index j = 0; j < h_dim; ++j) {
      i(j) = sigmoid(z(j));
      f(j) = sigmoid(z(h_dim + j));
      g(j) = std::tanh(z(2 * h_dim + j));
      o(j) = sigmoid(z(3 * h_dim + j));
    }
    Eigen::VectorXd c = f.cwiseProduct(c_prev) + i.cwiseProduct(g);
    Eigen::VectorXd tanh_c = c.array().tanh();
    Eigen::VectorXd h = o.cwiseProduct(tanh_c);

    cache.gate_i.row(t) = i.transpose();
    cache.gate_f.row(t) = f.transpose();
    cache.gate_g.row(t) = g.transpose();
    cache.gate_o.row(t) = o.transpose();
    cache.cell.row(t) = c.transpose();
    cache.tanh_cell.row(t) = tanh_c.transpose();
    cache.hidden.row(t) = h.transpose();
    h_prev.swap(h);
    c_prev.swap(c);
  }
}

// Backward through one layer; returns gradient w.r.t. the layer input
// sequence and accumulates parameter gradients.
Eigen::MatrixXd backward_layer(const LstmLayer& layer,
                               const LstmLayerCache& cache,
                               const Eigen::MatrixXd& d_hidden_seq,
                               LstmLayer* grads) {
  const Eigen::Index steps = cache.inputs.rows();
  const Eigen::Index h_dim = layer.hidden();

  Eigen::MatrixXd d_inputs(steps, cache.inputs.cols());
  Eigen::VectorXd dh_next = Eigen::VectorXd::Zero(h_dim);
  Eigen::VectorXd dc_next = Eigen::VectorXd::Zero(h_dim);
  Eigen::VectorXd dz(4 * h_dim);

  for (Eigen::Index t = steps - 1; t >= 0; --t) {
    const Eigen::VectorXd dh = d_hidden_seq.row(t).transpose() + dh_next;
    const auto i = cache.gate_i.row(t).transpose().eval();
    const auto f = cache.gate_f.row(t).transpose().eval();
    const auto g = cache.gate_g.row(t).transpose().eval();
    const auto o = cache.gate_o.row(t).transpose().eval();
    const auto tanh_c = cache.tanh_cell.row(t).transpose().eval();

    const Eigen::VectorXd d_o = dh.cwiseProduct(tanh_c);
    Eigen::VectorXd dc =
        dc_next + dh.cwiseProduct(o).cwiseProduct(
                      (1.0 - tanh_c.array().square()).matrix());

    const Eigen::VectorXd c_prev =
        t > 0 ? cache.cell.row(t - 1).transpose().eval()
              : Eigen::VectorXd::Zero(h_dim).eval();
    const Eigen::VectorXd d_i = dc.cwiseProduct(g);
    const Eigen::VectorXd d_f = dc.cwiseProduct(c_prev);
    const Eigen::VectorXd d_g = dc.cwiseProduct(i);

    dz.segment(0, h_dim) =
        d_i.cwiseProduct(i).cwiseProduct((1.0 - i.array()).matrix());
    dz.segment(h_dim, h_dim) =
        d_f.cwiseProduct(f).cwiseProduct((1.0 - f.array()).matrix());
    dz.segment(2 * h_dim, h_dim) =
        d_g.cwiseProduct((1.0 - g.array().square()).matrix());
    dz.segment(3 * h_dim, h_dim) =
        d_o.cwiseProduct(o).cwiseProduct((1.0 - o.array()).matrix());

    grads->w_input.noalias() += dz * cache.inputs.row(t);
    if (t > 0) {
      grads->w_hidden.noalias() += dz * cache.hidden.row(t - 1);
    }
    grads->bias += dz;

    d_inputs.row(t) = (layer.w_input.transpose() * dz).transpose();
    dh_next.noalias() = layer.w_hidden.transpose() * dz;
    dc_next = dc.cwiseProduct(f);
  }
  return d_inputs;
}

Eigen::MatrixXd fold_replicated_rows(const Eigen::MatrixXd& d_rows, int k) {
  const Eigen::Index n = d_rows.rows() / k;
  Eigen::MatrixXd folded = Eigen::MatrixXd::Zero(n, d_rows.cols());
  for (Eigen::Index t = 0; t < d_rows.rows(); ++t) {
    folded.row(t / k) += d_rows.row(t);
  }
  return folded;
}

}  // namespace

LstmRegressor LstmRegressor::init(int input_dim, int hidden, int n_layers,
                                  int out_dim, Rng& rng, int k_replicate,
                                  int lag, bool replicate_at_last_layer) {
  if (input_dim < 1 || hidden < 1 || n_layers < 1 || out_dim < 1) {
    throw ArgumentError("LstmRegressor::init: dimensions must be positive");
  }
  if (k_replicate < 1) throw ArgumentError("LstmRegressor::init: k_replicate must be >= 1");
  if (lag < 0) throw ArgumentError("LstmRegressor::init: lag must be >= 0");

  const auto uniform_matrix = [&](Eigen::Index r, Eigen::Index c) {
    Eigen::MatrixXd m(r, c);
    for (Eigen::Index i = 0; i < r; ++i) {
      for (Eigen::Index j = 0; j < c; ++j) m(i, j) = rng.uniform(-0.08, 0.08);
    }
    return m;
  };

  LstmRegressor model;
  model.k_replicate = k_replicate;
  model.lag = lag;
  model.replicate_at_last_layer = replicate_at_last_layer;
  for (int l = 0; l < n_layers; ++l) {
    LstmLayer layer;
    const int d_in = l == 0 ? input_dim : hidden;
    layer.w_input = uniform_matrix(4 * hidden, d_in);
    layer.w_hidden = uniform_matrix(4 * hidden, hidden);
    layer.bias = uniform_matrix(4 * hidden, 1);
    layer.bias.segment(hidden, hidden).array() += 1.0;  // forget gate open
    model.layers.push_back(std::move(layer));
  }
  model.head_w = uniform_matrix(out_dim, hidden);
  model.head_b = uniform_matrix(out_dim, 1);
  return model;
}

Eigen::MatrixXd replicate_rows(const Eigen::MatrixXd& frames, int k) {
  if (k < 1) throw ArgumentError("replicate_rows: k must be >= 1");
  if (k == 1) return frames;
  Eigen::MatrixXd out(frames.rows() * k, frames.cols());
  for (Eigen::Index i = 0; i < frames.rows(); ++i) {
    for (int j = 0; j < k; ++j) {
      out.row(i * k + j) = frames.row(i);
    }
  }
  return out;
}

Eigen::MatrixXd lstm_forward(const LstmRegressor& model,
                             const Eigen::MatrixXd& features,
                             LstmForwardCache* cache) {
  if (features.cols() != model.input_dim()) {
    throw ArgumentError("lstm_forward: feature dimension mismatch");
  }
  const std::size_t n_layers = model.layers.size();
  const bool replicate_last = model.replicate_at_last_layer && n_layers > 1;

  LstmForwardCache local;
  LstmForwardCache* cc = cache ? cache : &local;
  cc->layers.assign(n_layers, {});

  Eigen::MatrixXd seq =
      replicate_last ? features : replicate_rows(features, model.k_replicate);
  for (std::size_t l = 0; l < n_layers; ++l) {
    if (replicate_last && l + 1 == n_layers) {
      seq = replicate_rows(seq, model.k_replicate);
    }
    run_layer(model.layers[l], seq, cc->layers[l]);
    seq = cc->layers[l].hidden;
  }
  cc->outputs = (seq * model.head_w.transpose()).rowwise() +
                model.head_b.transpose();
  return cc->outputs;
}

LstmGradients LstmGradients::zeros_like(const LstmRegressor& model) {
  LstmGradients g;
  for (const auto& layer : model.layers) {
    LstmLayer zero;
    zero.w_input = Eigen::MatrixXd::Zero(layer.w_input.rows(), layer.w_input.cols());
    zero.w_hidden = Eigen::MatrixXd::Zero(layer.w_hidden.rows(), layer.w_hidden.cols());
    zero.bias = Eigen::VectorXd::Zero(layer.bias.size());
    g.layers.push_back(std::move(zero));
  }
  g.head_w = Eigen::MatrixXd::Zero(model.head_w.rows(), model.head_w.cols());
  g.head_b = Eigen::VectorXd::Zero(model.head_b.size());
  return g;
}

void LstmGradients::add_scaled(const LstmGradients& other, double scale) {
  for (std::size_t l = 0; l < layers.size(); ++l) {
    layers[l].w_input += scale * other.layers[l].w_input;
    layers[l].w_hidden += scale * other.layers[l].w_hidden;
    layers[l].bias += scale * other.layers[l].bias;
  }
  head_w += scale * other.head_w;
  head_b += scale * other.head_b;
}

double LstmGradients::squared_norm() const {
  double s = 0.0;
  for (const auto& l : layers) {
    s += l.w_input.squaredNorm() + l.w_hidden.squaredNorm() + l.bias.squaredNorm();
  }
  s += head_w.squaredNorm() + head_b.squaredNorm();
  return s;
}

void lstm_backward(const LstmRegressor& model, const LstmForwardCache& cache,
                   const Eigen::MatrixXd& d_outputs, LstmGradients* grads) {
  const std::size_t n_layers = model.layers.size();
  const bool replicate_last = model.replicate_at_last_layer && n_layers > 1;

  grads->head_w.noalias() +=
      d_outputs.transpose() * cache.layers.back().hidden;
  grads->head_b += d_outputs.colwise().sum().transpose();

  Eigen::MatrixXd d_seq = d_outputs * model.head_w;
  for (std::size_t l = n_layers; l-- > 0;) {
    d_seq = backward_layer(model.layers[l], cache.layers[l], d_seq,
                           &grads->layers[l]);
    if (replicate_last && l + 1 == n_layers) {
      d_seq = fold_replicated_rows(d_seq, model.k_replicate);
    }
  }
}

}  // namespace impact
