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

struct TipPose {
  double x = 0.0;
  double y = 0.0;
  double angle = 0.0;  // rad, orientation of the mop axis
};

// Planar serial chain rooted at the origin. Joints beyond the last link act
// as zero-length wrist joints; the mop extends mop_length past the chain end
// along the accumulated orientation, so its tip is the contact point.

/// Tip pose of the mop for joint angles `theta` (length >= link count).
TipPose forward_kinematics(const Eigen::VectorXd& theta, const EnvParams& env);

/// 2xN Jacobian of the tip position w.r.t. the joint angles.
Eigen::MatrixXd tip_jacobian(const Eigen::VectorXd& theta, const EnvParams& env);

/// Cartesian tip velocity, J(theta) * dtheta.
Eigen::Vector2d tip_velocity(const Eigen::VectorXd& theta, const Eigen::VectorXd& dtheta,
                             const EnvParams& env);

/// Closed-form inverse kinematics of the two-link arm with the mop as tool:
/// joint angles placing the tip at `tip` with mop orientation `angle`, on the
/// positive-elbow branch. Requires exactly two links (three joints); throws
/// if the target is out of reach.
Eigen::Vector3d inverse_kinematics(const Eigen::Vector2d& tip, double angle,
                                   const EnvParams& env);

}  // namespace bilat::sim
