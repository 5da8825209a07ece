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

#include "bilat/sim/contact.hpp"

#include <algorithm>
#include <cmath>

namespace bilat::sim {

Eigen::Vector2d contact_force(const TipPose& tip, const Eigen::Vector2d& tip_vel,
                              const EnvParams& env) {
  const double penetration = env.desk_height - tip.y;
  if (penetration <= 0.0) return Eigen::Vector2d::Zero();

  double normal = env.contact_stiffness * penetration + env.contact_damping * (-tip_vel.y());
  normal = std::max(normal, 0.0);

  double tangential = 0.0;
  if (tip_vel.x() > 0.0) {
    tangential = -env.friction_coeff * normal;
  } else if (tip_vel.x() < 0.0) {
    tangential = env.friction_coeff * normal;
  }
  return Eigen::Vector2d(tangential, normal);
}

Eigen::VectorXd external_joint_torque(const Eigen::VectorXd& theta,
                                      const Eigen::Vector2d& force, const EnvParams& env) {
  return tip_jacobian(theta, env).transpose() * force;
}

}  // namespace bilat::sim
