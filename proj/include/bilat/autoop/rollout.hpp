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

#include <memory>
#include <vector>

#include "bilat/autoop/evaluate.hpp"
#include "bilat/control/bilateral.hpp"
#include "bilat/demo/episode_log.hpp"
#include "bilat/learn/predictor.hpp"
#include "bilat/sim/robot.hpp"

namespace bilat::autoop {

/// Supplier of master responses on the network grid. The trained network is
/// the real implementation; a recorded-episode replayer stands in for it when
/// validating that the autonomous slave controller reproduces demonstrations.
class MasterSource {
 public:
  virtual ~MasterSource() = default;
  virtual void reset() = 0;
  /// Called once per network period with the measured slave response.
  virtual sim::JointState next(const sim::JointState& slave_measured) = 0;
};

class LstmMasterSource : public MasterSource {
 public:
  explicit LstmMasterSource(learn::MasterPredictor predictor)
      : predictor_(std::move(predictor)) {}
  void reset() override { predictor_.reset(); }
  sim::JointState next(const sim::JointState& slave_measured) override {
    return predictor_.predict(slave_measured);
  }

 private:
  learn::MasterPredictor predictor_;
};

/// Replays the master responses recorded in an episode log, resampled to the
/// network grid with the same one-period lead the network is trained to
/// produce.
class ReplayMasterSource : public MasterSource {
 public:
  ReplayMasterSource(const demo::EpisodeLog& log, int horizon_ticks);
  void reset() override { cursor_ = 0; }
  sim::JointState next(const sim::JointState& slave_measured) override;

 private:
  std::vector<sim::JointState> grid_;
  std::size_t cursor_ = 0;
};

/// Piecewise-constant mop length over time.
struct MopSchedule {
  std::vector<std::pair<double, double>> points;  // (start time, length)

  static MopSchedule constant(double length) { return MopSchedule{{{0.0, length}}}; }
  double at(double t) const;
  void validate() const;
};

struct AutoOpConfig {
  control::GainSet gains;
  sim::EnvParams env;
  sim::RobotSim robot;   // initial slave state
  MopSchedule schedule;
  double duration = 12.0;   // s
  double dt = 1e-3;         // s
  double nn_period = 0.02;  // s, must be an integer multiple of dt

  int period_ticks() const;
  void validate() const;
};

struct RolloutResult {
  demo::EpisodeLog log;   // master columns hold the held prediction
  EvalReport report;
};

/// Closed-loop autonomous run: the master source is queried every nn_period
/// and held between queries (zero-order hold); the slave-side controller is
/// the unchanged demonstration controller. A non-finite prediction freezes
/// the previous command for that tick and is counted in the report.
RolloutResult run_autonomous(const AutoOpConfig& cfg, MasterSource& source);

}  // namespace bilat::autoop
