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

#include "bilat/signal/filters.hpp"
#include "bilat/sim/types.hpp"

namespace bilat::control {

/// Full controller constant set: position/velocity/force feedback gains, the
/// nominal inertia they scale with, the admittance parameters, and the filter
/// cutoffs (g for the pseudo-derivative, g_dob for the observer).
struct GainSet {
  Eigen::VectorXd kp;
  Eigen::VectorXd kd;
  Eigen::VectorXd kf;
  sim::InertiaParams j;
  signal::AdmittanceParams admittance;
  double g = 20.0;      // rad/s
  double g_dob = 10.0;  // rad/s

  int joints() const { return static_cast<int>(kp.size()); }

  void validate() const;

  /// Stock gain schedule identified on the reference six-axis arm, truncated
  /// to the first n joints (n <= 6).
  static GainSet defaults(int n);
};

}  // namespace bilat::control
