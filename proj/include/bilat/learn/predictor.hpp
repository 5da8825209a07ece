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

#include "bilat/learn/lstm.hpp"
#include "bilat/learn/normalizer.hpp"
#include "bilat/sim/types.hpp"

namespace bilat::learn {

/// Stateful master-response predictor: normalize the slave response, advance
/// the network one step, denormalize. The recurrent state persists across
/// calls within an episode; reset() starts a new one.
class MasterPredictor {
 public:
  MasterPredictor(LstmModel model, NormalizerStats stats)
      : model_(std::move(model)), stats_(std::move(stats)) {
    model_.validate();
    stats_.validate();
    require(model_.input_size == stats_.input_dims() &&
                model_.output_size == stats_.input_dims(),
            "model/normalizer dim mismatch");
    model_.reset_state();
  }

  void reset() { model_.reset_state(); }

  sim::JointState predict(const sim::JointState& slave_measured) {
    const Eigen::VectorXd x = sim::response_vector(slave_measured);
    const Eigen::VectorXd x_hat = (stats_.apply_input(x).array() - 0.5).matrix();
    const Eigen::VectorXd y_hat = model_.step(x_hat);
    const Eigen::VectorXd y = stats_.invert_target((y_hat.array() + 0.5).matrix());
    return sim::response_from_vector(y);
  }

  const LstmModel& model() const { return model_; }
  const NormalizerStats& stats() const { return stats_; }

 private:
  LstmModel model_;
  NormalizerStats stats_;
};

}  // namespace bilat::learn
