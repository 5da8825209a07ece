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

#include <vector>

#include "bilat/control/bilateral.hpp"
#include "bilat/demo/episode_log.hpp"
#include "bilat/demo/operator_script.hpp"
#include "bilat/sim/robot.hpp"

namespace bilat::demo {

/// Everything one demonstration needs: the controller constants, the task
/// environment, the scripted operator, and the robot prototype both arms are
/// instantiated from.
struct DemoSetup {
  control::GainSet gains;
  sim::EnvParams env;
  OperatorScript script;
  sim::RobotSim robot;  // initial state shared by master and slave
  double dt = 1e-3;

  void validate() const {
    gains.validate();
    env.validate();
    script.validate();
    robot.validate();
    require(dt > 0.0, "dt must be > 0");
    require(gains.joints() == robot.state.joints(), "gains/robot joint count mismatch");
  }
};

/// Runs one teleoperated episode: the virtual operator drives the master, the
/// slave works against the desk, both under the bilateral controller at dt.
/// Aborts with DivergenceError if a velocity exceeds ten times the actuator
/// limit or any state stops being finite.
EpisodeLog run_demonstration(const DemoSetup& setup);

}  // namespace bilat::demo
