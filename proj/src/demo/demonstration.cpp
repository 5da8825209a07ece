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

#include "bilat/demo/demonstration.hpp"

#include <cmath>
#include <string>

#include "bilat/sim/contact.hpp"
#include "bilat/sim/kinematics.hpp"

namespace bilat::demo {

static void check_divergence(const sim::RobotSim& robot, const char* which, double t) {
  if (!robot.state.finite() ||
      robot.state.dtheta.cwiseAbs().maxCoeff() > 10.0 * robot.velocity_limit) {
    throw DivergenceError(std::string("simulation diverged on the ") + which +
                          " robot at t=" + std::to_string(t));
  }
}

EpisodeLog run_demonstration(const DemoSetup& setup) {
  setup.validate();

  sim::RobotSim master = setup.robot;
  sim::RobotSim slave = setup.robot;
  auto tick_state = control::ControllerTickState::make(setup.gains, setup.dt);

  EpisodeLog log;
  log.dt = setup.dt;
  log.joints = setup.robot.state.joints();

  const auto ticks = static_cast<std::size_t>(
      std::llround(setup.script.episode_duration / setup.dt));
  log.reserve(ticks);

  for (std::size_t k = 0; k < ticks; ++k) {
    const double t = static_cast<double>(k) * setup.dt;

    const auto tick =
        control::controller_tick(tick_state, master.state, slave.state, setup.gains, setup.dt);

    const Eigen::VectorXd op_torque =
        virtual_operator_torque(t, master.state, setup.script, setup.env);
    const sim::TipPose tip = sim::forward_kinematics(slave.state.theta, setup.env);
    const Eigen::Vector2d tip_vel =
        sim::tip_velocity(slave.state.theta, slave.state.dtheta, setup.env);
    const Eigen::Vector2d force = sim::contact_force(tip, tip_vel, setup.env);
    const Eigen::VectorXd contact_torque =
        sim::external_joint_torque(slave.state.theta, force, setup.env);

    log.push_row(t, tick.measured_master, tick.measured_slave, tick.vel_cmd_m,
                 tick.vel_cmd_s, setup.env.mop_length, force);

    sim::velocity_servo_step(master, tick.vel_cmd_m, op_torque, setup.dt);
    sim::velocity_servo_step(slave, tick.vel_cmd_s, contact_torque, setup.dt);

    check_divergence(master, "master", t);
    check_divergence(slave, "slave", t);
  }
  return log;
}

}  // namespace bilat::demo
