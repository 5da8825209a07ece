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

#include "bilat/demo/operator_script.hpp"

#include <cmath>
#include <numbers>

#include "bilat/sim/kinematics.hpp"

namespace bilat::demo {

static double press_depth(const OperatorScript& script, const sim::EnvParams& env) {
  if (env.contact_stiffness <= 0.0) return 0.0;
  return script.press_force_target / env.contact_stiffness;
}

// Cosine ease, monotone from 0 to 1.
static double ease(double s) { return 0.5 * (1.0 - std::cos(std::numbers::pi * s)); }

Eigen::Vector2d operator_tip_target(double t, const OperatorScript& script,
                                    const sim::EnvParams& env) {
  const double press_y = env.desk_height - press_depth(script, env);
  const Eigen::Vector2d contact_point(script.contact_x, press_y);

  if (t < script.approach_duration) {
    const double a = ease(t / script.approach_duration);
    return script.start_tip + a * (contact_point - script.start_tip);
  }
  const double tw = t - script.approach_duration;
  const double x =
      script.contact_x +
      script.wipe_amplitude * std::sin(2.0 * std::numbers::pi * script.wipe_frequency * tw);
  return Eigen::Vector2d(x, press_y);
}

double operator_angle_target(double t, const OperatorScript& script) {
  if (t < script.approach_duration) {
    const double a = ease(t / script.approach_duration);
    return script.start_angle + a * (script.angle_target - script.start_angle);
  }
  return script.angle_target;
}

Eigen::VectorXd operator_joint_target(double t, const OperatorScript& script,
                                      const sim::EnvParams& env) {
  return sim::inverse_kinematics(operator_tip_target(t, script, env),
                                 operator_angle_target(t, script), env);
}

Eigen::VectorXd virtual_operator_torque(double t, const sim::JointState& master,
                                        const OperatorScript& script,
                                        const sim::EnvParams& env) {
  require(t >= 0.0 && std::isfinite(t), "time must be >= 0");

  const Eigen::VectorXd target = operator_joint_target(t, script, env);
  return script.stiffness * (target - master.theta) - script.damping * master.dtheta;
}

}  // namespace bilat::demo
