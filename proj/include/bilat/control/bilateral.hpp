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
#include <utility>

#include "bilat/control/gains.hpp"
#include "bilat/signal/filters.hpp"
#include "bilat/sim/types.hpp"

namespace bilat::control {

// Four-channel bilateral control. Position and velocity errors are exchanged
// symmetrically between the two arms while the force channel drives the sum
// of the measured torques toward zero (action-reaction). In autonomous
// operation the same slave-side law runs against model-predicted master
// responses; nothing in the slave path changes.

/// One side's torque reference for tracking `ref` from `own`:
///   J (Kp (theta_ref - theta) + Kd (dtheta_ref - dtheta)) - Kf (tau_ref + tau)
/// Velocities are expected to be pseudo-differentiated upstream.
Eigen::VectorXd tracking_torque_ref(const sim::JointState& ref, const sim::JointState& own,
                                    const GainSet& gains);

/// Master and slave torque references of the bilateral pair.
std::pair<Eigen::VectorXd, Eigen::VectorXd> bilateral_torque_refs(
    const sim::JointState& master, const sim::JointState& slave, const GainSet& gains);

/// Slave torque reference with network-predicted master responses substituted
/// for the measured ones. Identical code path to the slave half of
/// bilateral_torque_refs.
Eigen::VectorXd autonomous_torque_ref(const sim::JointState& predicted_master,
                                      const sim::JointState& slave, const GainSet& gains);

/// Per-robot filter bank: pseudo-derivative per joint, admittance lag per
/// joint, disturbance observer, and the last disturbance estimate (applied to
/// the next tick's torque reference).
struct SideState {
  std::vector<signal::FilterState> derivative;
  std::vector<signal::FilterState> admittance;
  signal::DobState dob;
  Eigen::VectorXd disturbance;
  bool primed = false;  // derivative input latched to the first sample

  static SideState make(const GainSet& gains, double dt);
};

/// Replaces the raw velocity with the pseudo-derivative of the measured angle
/// and keeps the torque reading, i.e. turns a raw robot state into what the
/// controller actually measures.
sim::JointState measure_response(SideState& side, const sim::JointState& raw, double dt);

/// Runs one side of the control law on already-measured states: torque
/// reference, observer compensation, admittance conversion. Returns the
/// velocity command.
Eigen::VectorXd side_command(SideState& side, const sim::JointState& ref_meas,
                             const sim::JointState& own_meas, const GainSet& gains, double dt);

struct ControllerTickState {
  SideState master;
  SideState slave;
  double dt = 1e-3;

  static ControllerTickState make(const GainSet& gains, double dt);
};

struct TickOutput {
  Eigen::VectorXd vel_cmd_m;
  Eigen::VectorXd vel_cmd_s;
  sim::JointState measured_master;
  sim::JointState measured_slave;
};

/// Full bilateral tick: measure both arms, evaluate both torque references,
/// compensate with the observers, convert to velocity commands.
TickOutput controller_tick(ControllerTickState& state, const sim::JointState& master_raw,
                           const sim::JointState& slave_raw, const GainSet& gains, double dt);

struct AutonomousTickOutput {
  Eigen::VectorXd vel_cmd_s;
  sim::JointState measured_slave;
};

/// Autonomous-phase tick: the predicted master response is used as-is (the
/// network outputs a full response triple) and only the slave command is
/// produced.
AutonomousTickOutput autonomous_controller_tick(ControllerTickState& state,
                                                const sim::JointState& predicted_master,
                                                const sim::JointState& slave_raw,
                                                const GainSet& gains, double dt);

}  // namespace bilat::control
