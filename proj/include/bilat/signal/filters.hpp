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
#include <vector>

#include "bilat/common.hpp"
#include "bilat/sim/types.hpp"

namespace bilat::signal {

// Every continuous-time block in the controller is first order, and all of
// them are discretized with backward Euler, which is unconditionally stable
// for any cutoff * dt > 0. States start at zero; episodes begin at rest.

/// State of one discrete first-order section.
struct FilterState {
  double y_prev = 0.0;
  double u_prev = 0.0;
  double cutoff = 0.0;  // rad/s
  double dt = 0.0;      // s

  static FilterState make(double cutoff, double dt) {
    require(cutoff > 0.0 && std::isfinite(cutoff), "filter cutoff must be > 0");
    require(dt > 0.0 && std::isfinite(dt), "filter dt must be > 0");
    return FilterState{0.0, 0.0, cutoff, dt};
  }
};

/// Low-pass g/(s+g): y_k = (y_{k-1} + g dt u_k) / (1 + g dt).
double lowpass_step(FilterState& fs, double u, double dt);

/// Pseudo-derivative g s/(s+g); band-limited differentiation used to obtain
/// velocity responses from angle responses.
double pseudo_derivative_step(FilterState& fs, double u, double dt);

/// Virtual mass/damping of the torque-to-velocity conversion. The damping is
/// tied to the cutoff, d = omega * m, so the map is (1/m) * 1/(s + omega).
struct AdmittanceParams {
  Eigen::VectorXd m;  // virtual mass per joint
  double omega = 30.0;  // rad/s
  Eigen::VectorXd d;  // omega * m

  static AdmittanceParams make(const Eigen::VectorXd& m, double omega) {
    require(omega > 0.0 && std::isfinite(omega), "admittance cutoff must be > 0");
    for (int i = 0; i < m.size(); ++i) {
      require(std::isfinite(m[i]) && m[i] > 0.0, "virtual masses must be > 0");
    }
    return AdmittanceParams{m, omega, omega * m};
  }

  void validate() const {
    require(omega > 0.0, "admittance cutoff must be > 0");
    require(m.size() == d.size(), "admittance m/d size mismatch");
    for (int i = 0; i < m.size(); ++i) {
      require(m[i] > 0.0, "virtual masses must be > 0");
      require(std::abs(d[i] - omega * m[i]) <= 1e-12 * std::abs(d[i]) + 1e-15,
              "damping must equal omega * m");
    }
  }
};

/// Converts per-joint torque references to velocity commands through the
/// virtual admittance. One FilterState per joint carries the lag state; the
/// output is exactly lowpass_step scaled by 1/(omega * m).
Eigen::VectorXd admittance_step(std::vector<FilterState>& fs, const Eigen::VectorXd& tau_ref,
                                const AdmittanceParams& params, double dt);

/// Velocity-measurement-form disturbance observer state.
struct DobState {
  std::vector<FilterState> lowpass;  // one per joint
  double cutoff = 10.0;              // rad/s

  static DobState make(int joints, double cutoff, double dt) {
    DobState ds;
    ds.cutoff = cutoff;
    ds.lowpass.reserve(joints);
    for (int i = 0; i < joints; ++i) ds.lowpass.push_back(FilterState::make(cutoff, dt));
    return ds;
  }
};

/// One observer update. Estimates the torque the applied input failed to turn
/// into momentum: lowpass(tau_applied + g J dtheta) - g J dtheta, which is a
/// filtered version of tau_applied - J * ddtheta. For a plant
/// J ddtheta = tau_applied - d the estimate converges to d with time
/// constant 1/g.
Eigen::VectorXd dob_step(DobState& ds, const Eigen::VectorXd& dtheta_res,
                         const Eigen::VectorXd& tau_applied, const sim::InertiaParams& j,
                         double dt);

}  // namespace bilat::signal
