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

#include "bilat/autoop/rollout.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "bilat/sim/contact.hpp"
#include "bilat/sim/kinematics.hpp"

namespace bilat::autoop {

ReplayMasterSource::ReplayMasterSource(const demo::EpisodeLog& log, int horizon_ticks) {
  require(horizon_ticks >= 1, "horizon must be >= 1 tick");
  require(log.rows() > static_cast<std::size_t>(horizon_ticks),
          "log shorter than one horizon");
  // Entry k is what the network would ideally emit at grid step k: the master
  // response one period ahead.
  for (std::size_t at = horizon_ticks; at < log.rows(); at += horizon_ticks) {
    grid_.push_back(log.master[at]);
  }
}

sim::JointState ReplayMasterSource::next(const sim::JointState&) {
  const sim::JointState& out = grid_[std::min(cursor_, grid_.size() - 1)];
  ++cursor_;
  return out;
}

double MopSchedule::at(double t) const {
  double length = points.front().second;
  for (const auto& [start, value] : points) {
    if (t >= start) length = value;
  }
  return length;
}

void MopSchedule::validate() const {
  require(!points.empty(), "mop schedule must have at least one entry");
  double prev = -std::numeric_limits<double>::infinity();
  for (const auto& [start, value] : points) {
    require(std::isfinite(start) && start >= prev, "schedule times must be sorted");
    require(std::isfinite(value) && value > 0.0, "mop lengths must be > 0");
    prev = start;
  }
}

int AutoOpConfig::period_ticks() const {
  return static_cast<int>(std::llround(nn_period / dt));
}

void AutoOpConfig::validate() const {
  gains.validate();
  env.validate();
  robot.validate();
  schedule.validate();
  require(duration >= 0.0, "duration must be >= 0");
  require(dt > 0.0 && nn_period > 0.0, "dt and nn_period must be > 0");
  const int ticks = period_ticks();
  require(ticks >= 1 && std::abs(ticks * dt - nn_period) < 1e-9,
          "nn_period must be an integer multiple of dt");
}

RolloutResult run_autonomous(const AutoOpConfig& cfg, MasterSource& source) {
  cfg.validate();

  sim::RobotSim slave = cfg.robot;
  sim::EnvParams env = cfg.env;
  auto tick_state = control::ControllerTickState::make(cfg.gains, cfg.dt);
  source.reset();

  const int n = slave.state.joints();
  const int period = cfg.period_ticks();
  const auto ticks = static_cast<std::size_t>(std::llround(cfg.duration / cfg.dt));

  RolloutResult result;
  result.log.dt = cfg.dt;
  result.log.joints = n;
  result.log.reserve(ticks);

  sim::JointState held_prediction = sim::JointState::zero(n);
  Eigen::VectorXd vel_cmd = Eigen::VectorXd::Zero(n);
  bool window_valid = true;
  int faults = 0;

  for (std::size_t k = 0; k < ticks; ++k) {
    const double t = static_cast<double>(k) * cfg.dt;
    env.mop_length = cfg.schedule.at(t);

    if (k % period == 0) {
      // The measurement filters advance inside the controller tick below;
      // peeking here would double-step them, so the prediction input comes
      // from a copy of the filter bank.
      auto probe = tick_state.slave;
      const sim::JointState measured = control::measure_response(probe, slave.state, cfg.dt);
      const sim::JointState prediction = source.next(measured);
      if (prediction.consistent() && prediction.joints() == n && prediction.finite()) {
        held_prediction = prediction;
        window_valid = true;
      } else {
        ++faults;
        window_valid = false;
      }
    }

    sim::JointState measured_slave = slave.state;
    if (window_valid) {
      const auto tick = control::autonomous_controller_tick(tick_state, held_prediction,
                                                            slave.state, cfg.gains, cfg.dt);
      vel_cmd = tick.vel_cmd_s;
      measured_slave = tick.measured_slave;
    }
    // else: previous command held, controller state frozen for this window

    const sim::TipPose tip = sim::forward_kinematics(slave.state.theta, env);
    const Eigen::Vector2d tip_vel =
        sim::tip_velocity(slave.state.theta, slave.state.dtheta, env);
    const Eigen::Vector2d force = sim::contact_force(tip, tip_vel, env);
    const Eigen::VectorXd contact_torque =
        sim::external_joint_torque(slave.state.theta, force, env);

    result.log.push_row(t, held_prediction, measured_slave, Eigen::VectorXd::Zero(n),
                        vel_cmd, env.mop_length, force);

    sim::velocity_servo_step(slave, vel_cmd, contact_torque, cfg.dt);

    if (!slave.state.finite() ||
        slave.state.dtheta.cwiseAbs().maxCoeff() > 10.0 * slave.velocity_limit) {
      result.report = evaluate_episode(result.log);
      result.report.prediction_faults = faults;
      throw DivergenceError("autonomous rollout diverged at t=" + std::to_string(t));
    }
  }

  result.report = evaluate_episode(result.log);
  result.report.prediction_faults = faults;
  return result;
}

}  // namespace bilat::autoop
