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

#include "bilat/sim/kinematics.hpp"
#include "bilat/sim/types.hpp"

namespace bilat::sim {

/// Spring-damper desk contact at the mop tip. Returns (tangential, normal)
/// force in world frame; zero when the tip is above the desk plane. The
/// normal component is clamped at zero (the desk cannot pull), friction is
/// kinetic Coulomb against the tangential velocity.
Eigen::Vector2d contact_force(const TipPose& tip, const Eigen::Vector2d& tip_vel,
                              const EnvParams& env);

/// Maps a Cartesian force at the tip into joint torques via the transposed
/// Jacobian.
Eigen::VectorXd external_joint_torque(const Eigen::VectorXd& theta,
                                      const Eigen::Vector2d& force, const EnvParams& env);

}  // namespace bilat::sim
