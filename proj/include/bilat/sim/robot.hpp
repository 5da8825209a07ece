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

namespace bilat::sim {

/// Advances the velocity-servo robot by one explicit step of length dt.
///
/// The joint velocity relaxes toward vel_cmd with the servo time constant and
/// is additionally accelerated by ext_torque / J; positions integrate the new
/// velocity (semi-implicit Euler). Velocities are clamped to the actuator
/// limit. state.tau is updated to the torque the servo itself exerted,
/// J * ddtheta - ext_torque, which is what a joint torque sensor reads.
void velocity_servo_step(RobotSim& robot, const Eigen::VectorXd& vel_cmd,
                         const Eigen::VectorXd& ext_torque, double dt);

}  // namespace bilat::sim
