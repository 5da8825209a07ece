// Copyright 2026 The bilat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "bilat/common.hpp"
#include "bilat/rng.hpp"

namespace bilat::learn {

// Stacked LSTM with a linear readout, written out by hand so that the
// backward pass can be checked against finite differences and the whole
// model stays deterministic and dependency-free.
//
// Gate blocks are ordered [input; forget; candidate; output] inside the
// 4H-row weight matrices.

struct LstmModel {
  struct Layer {
    Eigen::MatrixXd w_in;   // 4H x fan_in
    Eigen::MatrixXd w_rec;  // 4H x H
    Eigen::VectorXd bias;   // 4H
  };

  int input_size = 0;
  int hidden_size = 0;
  int output_size = 0;
  std::vector<Layer> layers;
  Eigen::MatrixXd fc_weight;  // out x H
  Eigen::VectorXd fc_bias;    // out

  // recurrent state, one (h, c) per layer
  std::vector<Eigen::VectorXd> h;
  std::vector<Eigen::VectorXd> c;

  static LstmModel zeros(int input, int hidden, int num_layers, int output);

  /// Uniform +-1/sqrt(fan_in) weights, zero biases.
  static LstmModel init(int input, int hidden, int num_layers, int output, Rng& rng);

  int num_layers() const { return static_cast<int>(layers.size()); }

  void reset_state();

  /// One stateful step.
  Eigen::VectorXd step(const Eigen::VectorXd& x);

  /// Stateful forward over a whole sequence (rows are timesteps).
  Eigen::MatrixXd forward(const Eigen::MatrixXd& x_seq);

  std::int64_t param_count() const;
  Eigen::VectorXd pack_params() const;
  void unpack_params(const Eigen::VectorXd& flat);
  bool params_finite() const;

  void validate() const;
};

/// Mean squared error over every timestep and output dim of a batch of
/// equal-length sequences, plus its gradient w.r.t. the packed parameters,
/// computed by backpropagation through time over the full window. The model's
/// recurrent state is not touched; each window starts from rest.
double loss_and_gradients(const LstmModel& model,
                          const std::vector<const Eigen::MatrixXd*>& inputs,
                          const std::vector<const Eigen::MatrixXd*>& targets,
                          Eigen::VectorXd& grad);

/// Loss only (same reduction), for validation.
double sequence_loss(const LstmModel& model, const Eigen::MatrixXd& inputs,
                     const Eigen::MatrixXd& targets);

}  // namespace bilat::learn
