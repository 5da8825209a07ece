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

#include "bilat/common.hpp"

namespace bilat::sim {

/// Diagonal joint-space inertia.
struct InertiaParams {
  Eigen::VectorXd j;

  int joints() const { return static_cast<int>(j.size()); }

  void validate() const {
    require(j.size() > 0, "inertia vector must not be empty");
    for (int i = 0; i < j.size(); ++i) {
      require(std::isfinite(j[i]) && j[i] > 0.0, "inertia entries must be positive");
    }
  }
};

/// Per-joint angle / angular velocity / torque response of one robot.
struct JointState {
  Eigen::VectorXd theta;   // rad
  Eigen::VectorXd dtheta;  // rad/s
  Eigen::VectorXd tau;     // Nm

  static JointState zero(int n) {
    return {Eigen::VectorXd::Zero(n), Eigen::VectorXd::Zero(n), Eigen::VectorXd::Zero(n)};
  }

  int joints() const { return static_cast<int>(theta.size()); }

  bool consistent() const { return theta.size() == dtheta.size() && theta.size() == tau.size(); }

  bool finite() const { return theta.allFinite() && dtheta.allFinite() && tau.allFinite(); }
};

/// Flattens a response into the [theta..., dtheta..., tau...] layout used for
/// logging and as network input/output.
Eigen::VectorXd response_vector(const JointState& s);

/// Inverse of response_vector.
JointState response_from_vector(const Eigen::VectorXd& v);

/// A robot whose joints track velocity commands through a first-order inner
/// servo. The servo itself is opaque; only its lag and torque limit behavior
/// are modeled.
struct RobotSim {
  JointState state;
  double servo_time_constant = 0.01;  // s; +inf disables the servo
  double velocity_limit = 6.0;        // rad/s
  InertiaParams inertia;

  void validate() const {
    inertia.validate();
    require(state.consistent() && state.joints() == inertia.joints(),
            "robot state size mismatch");
    require(servo_time_constant > 0.0, "servo_time_constant must be > 0");
    require(std::isfinite(velocity_limit) && velocity_limit > 0.0,
            "velocity_limit must be positive");
  }
};

/// Planar task environment: a serial chain holding a mop that may touch a
/// desk surface at y = desk_height.
struct EnvParams {
  Eigen::VectorXd link_lengths;    // m
  double mop_length = 0.48;        // m, grip point to tip
  double desk_height = -0.25;      // m
  double contact_stiffness = 1000.0;  // N/m
  double contact_damping = 10.0;      // N s/m
  double friction_coeff = 0.3;

  void validate() const {
    for (int i = 0; i < link_lengths.size(); ++i) {
      require(std::isfinite(link_lengths[i]) && link_lengths[i] >= 0.0,
              "link lengths must be >= 0");
    }
    require(std::isfinite(mop_length) && mop_length > 0.0, "mop_length must be > 0");
    require(std::isfinite(desk_height), "desk_height must be finite");
    require(contact_stiffness >= 0.0, "contact_stiffness must be >= 0");
    require(contact_damping >= 0.0, "contact_damping must be >= 0");
    require(std::isfinite(friction_coeff) && friction_coeff >= 0.0,
            "friction_coeff must be >= 0");
  }
};

}  // namespace bilat::sim
