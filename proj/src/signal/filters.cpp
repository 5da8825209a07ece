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

#include "bilat/signal/filters.hpp"

namespace bilat::signal {

static void check_step(const FilterState& fs, double u, double dt) {
  require_finite(u, "filter input");
  require(dt == fs.dt, "filter stepped with a different dt than it was built for");
}

double lowpass_step(FilterState& fs, double u, double dt) {
  check_step(fs, u, dt);
  const double y = (fs.y_prev + fs.cutoff * dt * u) / (1.0 + fs.cutoff * dt);
  fs.y_prev = y;
  fs.u_prev = u;
  return y;
}

double pseudo_derivative_step(FilterState& fs, double u, double dt) {
  check_step(fs, u, dt);
  // Backward Euler of g s/(s+g): y_k = (y_{k-1} + g (u_k - u_{k-1})) / (1 + g dt)
  const double y = (fs.y_prev + fs.cutoff * (u - fs.u_prev)) / (1.0 + fs.cutoff * dt);
  fs.y_prev = y;
  fs.u_prev = u;
  return y;
}

Eigen::VectorXd admittance_step(std::vector<FilterState>& fs, const Eigen::VectorXd& tau_ref,
                                const AdmittanceParams& params, double dt) {
  const int n = static_cast<int>(tau_ref.size());
  require(static_cast<int>(fs.size()) == n && params.m.size() == n,
          "admittance size mismatch");
  require_finite(tau_ref, "tau_ref");

  Eigen::VectorXd vel_cmd(n);
  for (int i = 0; i < n; ++i) {
    const double lag = lowpass_step(fs[i], tau_ref[i], dt);
    vel_cmd[i] = lag / (params.omega * params.m[i]);
  }
  return vel_cmd;
}

Eigen::VectorXd dob_step(DobState& ds, const Eigen::VectorXd& dtheta_res,
                         const Eigen::VectorXd& tau_applied, const sim::InertiaParams& j,
                         double dt) {
  const int n = static_cast<int>(dtheta_res.size());
  require(tau_applied.size() == n && j.j.size() == n &&
              static_cast<int>(ds.lowpass.size()) == n,
          "dob size mismatch");
  require_finite(dtheta_res, "dtheta_res");
  require_finite(tau_applied, "tau_applied");

  Eigen::VectorXd estimate(n);
  for (int i = 0; i < n; ++i) {
    const double momentum_term = ds.cutoff * j.j[i] * dtheta_res[i];
    const double filtered = lowpass_step(ds.lowpass[i], tau_applied[i] + momentum_term, dt);
    estimate[i] = filtered - momentum_term;
  }
  return estimate;
}

}  // namespace bilat::signal
