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
#include <string>
#include <vector>

#include "bilat/demo/episode_log.hpp"

namespace bilat::autoop {

/// Mopping-quality metrics of one episode. The wipe phase is detected from
/// the log itself: it starts at the first 0.2 s of sustained contact and runs
/// to the end. A wipe_period of zero means no period could be estimated.
struct EvalReport {
  double mean_normal_force = 0.0;        // N, over the wipe phase
  double contact_duty_cycle = 0.0;       // fraction of wipe samples in contact
  double wipe_period = 0.0;              // s, autocorrelation estimate; 0 = absent
  double wipe_start = 0.0;               // s, detected phase boundary
  Eigen::VectorXd torque_amplitude;      // per joint, peak-to-peak over the wipe
  double sync_rms = 0.0;                 // rad, master-slave angle error
  double sync_max = 0.0;                 // rad
  int prediction_faults = 0;             // non-finite predictions held over

  void validate() const;

  /// Flat "key value" text, one metric per line.
  void write_text(const std::string& path, const std::vector<std::string>& comments) const;
  std::string to_text() const;
};

EvalReport evaluate_episode(const demo::EpisodeLog& log);

}  // namespace bilat::autoop
