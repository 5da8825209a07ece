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

#include "bilat/sim/kinematics.hpp"

#include <cmath>

namespace bilat::sim {

TipPose forward_kinematics(const Eigen::VectorXd& theta, const EnvParams& env) {
  const int links = static_cast<int>(env.link_lengths.size());
  require(theta.size() >= links, "theta shorter than link chain");
  require_finite(theta, "theta");

  double phi = 0.0;
  double x = 0.0;
  double y = 0.0;
  for (int i = 0; i < theta.size(); ++i) {
    phi += theta[i];
    if (i < links) {
      x += env.link_lengths[i] * std::cos(phi);
      y += env.link_lengths[i] * std::sin(phi);
    }
  }
  return TipPose{x + env.mop_length * std::cos(phi), y + env.mop_length * std::sin(phi), phi};
}

Eigen::MatrixXd tip_jacobian(const Eigen::VectorXd& theta, const EnvParams& env) {
  const int links = static_cast<int>(env.link_lengths.size());
  const int n = static_cast<int>(theta.size());
  require(n >= links, "theta shorter than link chain");
  require_finite(theta, "theta");

  // Joint i rotates everything distal to it rigidly, so column i is the tip
  // offset from joint i rotated by 90 degrees.
  Eigen::MatrixXd jac(2, n);
  std::vector<Eigen::Vector2d> joint_pos(n);
  double phi = 0.0;
  Eigen::Vector2d p(0.0, 0.0);
  for (int i = 0; i < n; ++i) {
    joint_pos[i] = p;
    phi += theta[i];
    if (i < links) {
      p.x() += env.link_lengths[i] * std::cos(phi);
      p.y() += env.link_lengths[i] * std::sin(phi);
    }
  }
  const Eigen::Vector2d tip(p.x() + env.mop_length * std::cos(phi),
                            p.y() + env.mop_length * std::sin(phi));
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector2d r = tip - joint_pos[i];
    jac(0, i) = -r.y();
    jac(1, i) = r.x();
  }
  return jac;
}

Eigen::Vector2d tip_velocity(const Eigen::VectorXd& theta, const Eigen::VectorXd& dtheta,
                             const EnvParams& env) {
  return tip_jacobian(theta, env) * dtheta;
}

Eigen::Vector3d inverse_kinematics(const Eigen::Vector2d& tip, double angle,
                                   const EnvParams& env) {
  require(env.link_lengths.size() == 2, "inverse kinematics needs a two-link arm");
  const double l1 = env.link_lengths[0];
  const double l2 = env.link_lengths[1];
  const Eigen::Vector2d wrist =
      tip - env.mop_length * Eigen::Vector2d(std::cos(angle), std::sin(angle));

  const double d2 = wrist.squaredNorm();
  const double c1 = (d2 - l1 * l1 - l2 * l2) / (2.0 * l1 * l2);
  if (c1 < -1.0 || c1 > 1.0) {
    throw std::invalid_argument("inverse kinematics target out of reach");
  }
  const double elbow = std::acos(c1);
  const double base = std::atan2(wrist.y(), wrist.x()) -
                      std::atan2(l2 * std::sin(elbow), l1 + l2 * c1);
  return Eigen::Vector3d(base, elbow, angle - base - elbow);
}

}  // namespace bilat::sim
