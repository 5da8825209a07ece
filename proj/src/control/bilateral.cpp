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

#include "bilat/control/bilateral.hpp"

namespace bilat::control {

Eigen::VectorXd tracking_torque_ref(const sim::JointState& ref, const sim::JointState& own,
                                    const GainSet& gains) {
  const int n = gains.joints();
  require(ref.joints() == n && own.joints() == n, "state size mismatch");
  require(ref.finite() && own.finite(), "non-finite joint state");

  const Eigen::VectorXd position_term =
      gains.kp.cwiseProduct(ref.theta - own.theta) +
      gains.kd.cwiseProduct(ref.dtheta - own.dtheta);
  return gains.j.j.cwiseProduct(position_term) - gains.kf.cwiseProduct(ref.tau + own.tau);
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> bilateral_torque_refs(
    const sim::JointState& master, const sim::JointState& slave, const GainSet& gains) {
  return {tracking_torque_ref(slave, master, gains),
          tracking_torque_ref(master, slave, gains)};
}

Eigen::VectorXd autonomous_torque_ref(const sim::JointState& predicted_master,
                                      const sim::JointState& slave, const GainSet& gains) {
  return tracking_torque_ref(predicted_master, slave, gains);
}

SideState SideState::make(const GainSet& gains, double dt) {
  const int n = gains.joints();
  SideState side;
  side.derivative.reserve(n);
  side.admittance.reserve(n);
  for (int i = 0; i < n; ++i) {
    side.derivative.push_back(signal::FilterState::make(gains.g, dt));
    side.admittance.push_back(signal::FilterState::make(gains.admittance.omega, dt));
  }
  side.dob = signal::DobState::make(n, gains.g_dob, dt);
  side.disturbance = Eigen::VectorXd::Zero(n);
  return side;
}

sim::JointState measure_response(SideState& side, const sim::JointState& raw, double dt) {
  if (!side.primed) {
    // Angles do not start at zero; without this the differentiator would see
    // a fake step on the first sample.
    for (int i = 0; i < raw.joints(); ++i) side.derivative[i].u_prev = raw.theta[i];
    side.primed = true;
  }
  sim::JointState measured = raw;
  for (int i = 0; i < raw.joints(); ++i) {
    measured.dtheta[i] = signal::pseudo_derivative_step(side.derivative[i], raw.theta[i], dt);
  }
  return measured;
}

Eigen::VectorXd side_command(SideState& side, const sim::JointState& ref_meas,
                             const sim::JointState& own_meas, const GainSet& gains,
                             double dt) {
  const Eigen::VectorXd raw_ref = tracking_torque_ref(ref_meas, own_meas, gains);
  const Eigen::VectorXd compensated = raw_ref + side.disturbance;
  side.disturbance = signal::dob_step(side.dob, own_meas.dtheta, compensated, gains.j, dt);
  return signal::admittance_step(side.admittance, compensated, gains.admittance, dt);
}

ControllerTickState ControllerTickState::make(const GainSet& gains, double dt) {
  return ControllerTickState{SideState::make(gains, dt), SideState::make(gains, dt), dt};
}

TickOutput controller_tick(ControllerTickState& state, const sim::JointState& master_raw,
                           const sim::JointState& slave_raw, const GainSet& gains,
                           double dt) {
  require(dt == state.dt, "tick dt mismatch");
  TickOutput out;
  out.measured_master = measure_response(state.master, master_raw, dt);
  out.measured_slave = measure_response(state.slave, slave_raw, dt);
  out.vel_cmd_m = side_command(state.master, out.measured_slave, out.measured_master, gains, dt);
  out.vel_cmd_s = side_command(state.slave, out.measured_master, out.measured_slave, gains, dt);
  return out;
}

AutonomousTickOutput autonomous_controller_tick(ControllerTickState& state,
                                                const sim::JointState& predicted_master,
                                                const sim::JointState& slave_raw,
                                                const GainSet& gains, double dt) {
  require(dt == state.dt, "tick dt mismatch");
  require(predicted_master.finite(), "non-finite master prediction");
  AutonomousTickOutput out;
  out.measured_slave = measure_response(state.slave, slave_raw, dt);
  out.vel_cmd_s = side_command(state.slave, predicted_master, out.measured_slave, gains, dt);
  return out;
}

}  // namespace bilat::control
