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

#include "bilat/sim/robot.hpp"

namespace bilat::sim {

Eigen::VectorXd response_vector(const JointState& s) {
  Eigen::VectorXd v(3 * s.joints());
  v << s.theta, s.dtheta, s.tau;
  return v;
}

JointState response_from_vector(const Eigen::VectorXd& v) {
  require(v.size() % 3 == 0, "response vector length must be a multiple of 3");
  const int n = static_cast<int>(v.size()) / 3;
  return JointState{v.segment(0, n), v.segment(n, n), v.segment(2 * n, n)};
}

void velocity_servo_step(RobotSim& robot, const Eigen::VectorXd& vel_cmd,
                         const Eigen::VectorXd& ext_torque, double dt) {
  const int n = robot.state.joints();
  require(vel_cmd.size() == n && ext_torque.size() == n, "command size mismatch");
  require(dt > 0.0 && std::isfinite(dt), "dt must be positive");
  require_finite(vel_cmd, "vel_cmd");
  require_finite(ext_torque, "ext_torque");
  require_finite(robot.state.theta, "robot state");

  const Eigen::VectorXd dtheta_old = robot.state.dtheta;
  // (x / inf) == 0, so an infinite time constant turns the servo off.
  const Eigen::VectorXd accel =
      (vel_cmd - dtheta_old) / robot.servo_time_constant +
      ext_torque.cwiseQuotient(robot.inertia.j);

  Eigen::VectorXd dtheta_new = dtheta_old + dt * accel;
  dtheta_new = dtheta_new.cwiseMax(-robot.velocity_limit).cwiseMin(robot.velocity_limit);

  robot.state.theta += dt * dtheta_new;
  robot.state.dtheta = dtheta_new;
  robot.state.tau =
      robot.inertia.j.cwiseProduct(dtheta_new - dtheta_old) / dt - ext_torque;
}

}  // namespace bilat::sim
