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

namespace bilat::demo {

/// One training sequence: slave responses as inputs, the master responses one
/// network period later as targets, both on the network update grid. Row k of
/// `inputs` pairs with row k of `targets`.
struct SequencePair {
  int episode = 0;
  Eigen::MatrixXd inputs;   // grid_steps x 3N, [theta, dtheta, tau]
  Eigen::MatrixXd targets;  // grid_steps x 3N
};

/// Resamples each episode to the network grid (every horizon_ticks control
/// ticks) and pairs the slave response at grid step k with the master
/// response at grid step k+1. Episodes shorter than one horizon are rejected.
std::vector<SequencePair> build_dataset(const std::vector<EpisodeLog>& episodes,
                                        int horizon_ticks);

void write_dataset_csv(const std::string& path, const std::vector<std::string>& comments,
                       const std::vector<SequencePair>& dataset);
std::vector<SequencePair> read_dataset_csv(const std::string& path);

}  // namespace bilat::demo
