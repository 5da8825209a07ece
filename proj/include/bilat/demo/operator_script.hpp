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

#include "bilat/sim/types.hpp"

namespace bilat::demo {

/// Scripted stand-in for the human demonstrator. The reference is a tip
/// trajectory (approach ramp from the start pose down to the desk, then a
/// sinusoidal wipe with a sustained press) plus a held mop orientation; both
/// are turned into a posture by inverse kinematics and tracked with a
/// joint-space impedance, the way a hand guides the whole tool rather than a
/// point on it. The press depth is press_force_target / contact_stiffness
/// below the desk plane, so a slave tracking the master generates roughly
/// that normal force.
struct OperatorScript {
  double wipe_amplitude = 0.07;      // m
  double wipe_frequency = 0.6;       // Hz
  double press_force_target = 20.0;  // N
  double approach_duration = 4.0;    // s
  double episode_duration = 12.0;    // s
  double stiffness = 100.0;          // Nm/rad, per joint
  double damping = 10.0;             // Nm s/rad
  double angle_target = -0.9;        // rad, held mop orientation
  Eigen::Vector2d start_tip = Eigen::Vector2d::Zero();
  double start_angle = -0.9;         // rad, mop orientation at episode start
  double contact_x = 0.65;           // m, wipe center on the desk

  void validate() const {
    require(wipe_frequency > 0.0, "wipe_frequency must be > 0");
    require(approach_duration > 0.0, "approach_duration must be > 0");
    require(episode_duration > 0.0, "episode_duration must be > 0");
    require(stiffness >= 0.0 && damping >= 0.0, "operator impedance must be >= 0");
  }
};

/// Reference tip position at time t.
Eigen::Vector2d operator_tip_target(double t, const OperatorScript& script,
                                    const sim::EnvParams& env);

/// Reference mop orientation at time t (eased from start_angle to
/// angle_target over the approach).
double operator_angle_target(double t, const OperatorScript& script);

/// Reference posture at time t, inverse kinematics of the two targets above.
Eigen::VectorXd operator_joint_target(double t, const OperatorScript& script,
                                      const sim::EnvParams& env);

/// Joint torque the virtual operator applies to the master:
///   K (theta_des(t) - theta) - D dtheta
Eigen::VectorXd virtual_operator_torque(double t, const sim::JointState& master,
                                        const OperatorScript& script,
                                        const sim::EnvParams& env);

}  // namespace bilat::demo
