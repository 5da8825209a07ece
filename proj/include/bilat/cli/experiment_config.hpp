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

#include <cstdint>
#include <string>
#include <vector>

#include "bilat/autoop/rollout.hpp"
#include "bilat/demo/demonstration.hpp"
#include "bilat/learn/train.hpp"

namespace bilat::cli {

/// The experiment file: one JSON document with a section per module. Missing
/// keys fall back to the stock defaults; unknown keys are rejected. The raw
/// file text is kept for embedding into output headers.
struct ExperimentConfig {
  double dt = 1e-3;
  double nn_period = 0.02;
  std::uint64_t seed = 7;

  // robot
  int joints = 3;
  Eigen::VectorXd inertia;
  double servo_time_constant = 0.01;
  double velocity_limit = 6.0;
  Eigen::VectorXd initial_joints;

  // controller
  control::GainSet gains;

  // environment
  sim::EnvParams env;

  // scripted operator
  demo::OperatorScript script;
  double operator_variability = 0.03;  // relative jitter between episodes

  // data collection
  int episodes = 15;
  std::vector<double> mop_lengths;

  // training
  learn::TrainConfig train;

  // autonomous operation
  double autoop_duration = 12.0;

  std::string raw_text;

  static ExperimentConfig defaults();
  static ExperimentConfig load(const std::string& path);
  static ExperimentConfig from_json_text(const std::string& text);

  void validate() const;

  int horizon_ticks() const;
  sim::RobotSim robot_prototype() const;

  /// Demo setup for one episode: the scripted operator gets a small seeded
  /// perturbation per episode (stand-in for trial-to-trial human variation)
  /// and the start tip is the actual tip pose at the initial joints.
  demo::DemoSetup demo_setup(double mop_length, std::uint64_t episode_index) const;

  autoop::AutoOpConfig autoop_config(const autoop::MopSchedule& schedule) const;

  /// The verbatim config text as '#' comment lines for output provenance.
  std::vector<std::string> provenance() const;
};

/// CSV with columns (t, mop_length) describing a piecewise-constant schedule.
autoop::MopSchedule load_mop_schedule_csv(const std::string& path);

}  // namespace bilat::cli
