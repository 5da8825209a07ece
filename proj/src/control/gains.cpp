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

#include "bilat/control/gains.hpp"

namespace bilat::control {

void GainSet::validate() const {
  const int n = joints();
  require(n > 0, "gain set must cover at least one joint");
  require(kd.size() == n && kf.size() == n, "gain vector length mismatch");
  require(j.joints() == n && admittance.m.size() == n, "gain set size mismatch");
  for (int i = 0; i < n; ++i) {
    require(std::isfinite(kp[i]) && kp[i] > 0.0, "kp entries must be > 0");
    require(std::isfinite(kd[i]) && kd[i] > 0.0, "kd entries must be > 0");
    require(std::isfinite(kf[i]) && kf[i] >= 0.0, "kf entries must be >= 0");
  }
  j.validate();
  admittance.validate();
  require(g > 0.0 && std::isfinite(g), "pseudo-derivative cutoff must be > 0");
  require(g_dob > 0.0 && std::isfinite(g_dob), "observer cutoff must be > 0");
}

GainSet GainSet::defaults(int n) {
  require(n >= 1 && n <= 6, "default gains cover 1..6 joints");
  const double kp6[] = {9.0, 16.0, 16.0, 4.0, 9.0, 16.0};
  const double kd6[] = {6.0, 8.0, 8.0, 4.0, 6.0, 8.0};
  const double kf6[] = {0.13, 0.05, 0.05, 0.10, 0.2, 0.2};
  const double m6[] = {0.2, 0.5, 0.5, 0.3, 0.1, 0.1};
  const double j6[] = {0.939, 1.32, 1.32, 0.363, 0.196, 0.246};

  GainSet gs;
  gs.kp = Eigen::Map<const Eigen::VectorXd>(kp6, n);
  gs.kd = Eigen::Map<const Eigen::VectorXd>(kd6, n);
  gs.kf = Eigen::Map<const Eigen::VectorXd>(kf6, n);
  gs.j = sim::InertiaParams{Eigen::Map<const Eigen::VectorXd>(j6, n)};
  gs.admittance =
      signal::AdmittanceParams::make(Eigen::Map<const Eigen::VectorXd>(m6, n), 30.0);
  gs.g = 20.0;
  gs.g_dob = 10.0;
  return gs;
}

}  // namespace bilat::control
