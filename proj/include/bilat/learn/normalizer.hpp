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
#include <vector>

#include "bilat/common.hpp"
#include "bilat/demo/dataset.hpp"

namespace bilat::learn {

/// Min-max statistics over the training set, input dims first, target dims
/// second (2 * 3N total). apply() maps a training-range value into [0, 1];
/// values outside the range extend affinely without clamping. Degenerate dims
/// (max == min) map to the constant 0.5 and invert back to their single
/// value.
struct NormalizerStats {
  Eigen::VectorXd min;
  Eigen::VectorXd max;

  static NormalizerStats fit(const std::vector<demo::SequencePair>& dataset);

  int input_dims() const { return static_cast<int>(min.size()) / 2; }

  Eigen::VectorXd apply_input(const Eigen::VectorXd& x) const;
  Eigen::VectorXd apply_target(const Eigen::VectorXd& y) const;
  Eigen::VectorXd invert_target(const Eigen::VectorXd& y_hat) const;

  /// Dims whose training range collapsed to a point.
  std::vector<int> degenerate_dims() const;

  void validate() const;
};

}  // namespace bilat::learn
