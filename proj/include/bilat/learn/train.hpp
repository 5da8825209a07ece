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

#include <cstdint>
#include <vector>

#include "bilat/demo/dataset.hpp"
#include "bilat/learn/lstm.hpp"
#include "bilat/learn/normalizer.hpp"

namespace bilat::learn {

struct TrainConfig {
  int layers = 4;
  int hidden = 200;
  int sequence_length = 100;   // truncation window for backprop
  int batch_size = 32;
  double learning_rate = 1e-3;
  int epochs = 100;
  std::uint64_t seed = 1;
  int augment_factor = 20;
  double noise_scale = 0.01;   // in normalized units
  double validation_fraction = 0.1;

  void validate() const {
    require(layers > 0 && hidden > 0, "model shape must be positive");
    require(sequence_length > 0 && batch_size > 0, "window/batch must be positive");
    require(learning_rate >= 0.0, "learning rate must be >= 0");
    require(epochs > 0, "epochs must be positive");
    require(augment_factor >= 1, "augment factor must be >= 1");
    require(noise_scale >= 0.0, "noise scale must be >= 0");
    require(validation_fraction >= 0.0 && validation_fraction < 1.0,
            "validation fraction must be in [0, 1)");
  }
};

/// Replicates an (already normalized) dataset `factor` times. Copy zero is
/// untouched; the other copies get zero-mean Gaussian noise of the given
/// scale added to the inputs. Targets are never perturbed.
std::vector<demo::SequencePair> augment(const std::vector<demo::SequencePair>& dataset,
                                        int factor, double noise_scale, std::uint64_t seed);

struct EpochStats {
  int epoch = 0;
  double train_mse = 0.0;
  double val_mse = 0.0;
};

struct TrainResult {
  LstmModel model;          // best-validation parameters
  NormalizerStats stats;
  std::vector<EpochStats> history;
  int best_epoch = -1;
  double best_val = 0.0;
};

/// Fits the normalizer on the training split, augments, and optimizes the
/// model with adaptive-moment gradient descent over sequence windows.
/// Episodes are split 90/10 into train/validation (by episode); the returned
/// model is the best-validation one. Non-finite loss aborts with
/// DivergenceError.
TrainResult train(const std::vector<demo::SequencePair>& dataset, const TrainConfig& cfg);

}  // namespace bilat::learn
