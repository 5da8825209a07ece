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

#include "bilat/sim/types.hpp"

namespace bilat::demo {

/// Time-indexed record of one run: master and slave responses, the velocity
/// commands that were sent, the active mop length, and the tip contact force.
/// This is the unit of teacher data.
struct EpisodeLog {
  double dt = 1e-3;
  int joints = 0;

  std::vector<double> t;
  std::vector<sim::JointState> master;
  std::vector<sim::JointState> slave;
  std::vector<Eigen::VectorXd> vel_cmd_m;
  std::vector<Eigen::VectorXd> vel_cmd_s;
  std::vector<double> mop_length;
  std::vector<Eigen::Vector2d> contact;  // (tangential, normal)

  std::size_t rows() const { return t.size(); }

  void reserve(std::size_t n);
  void push_row(double time, const sim::JointState& m, const sim::JointState& s,
                const Eigen::VectorXd& cmd_m, const Eigen::VectorXd& cmd_s, double mop,
                const Eigen::Vector2d& force);

  /// CSV with one row per tick; `comments` go into '#' header lines (the run
  /// embeds its config there). Doubles round-trip bit-exactly.
  void write_csv(const std::string& path, const std::vector<std::string>& comments) const;
  static EpisodeLog read_csv(const std::string& path);
  static EpisodeLog read_csv(const std::string& path, std::vector<std::string>* comments);
};

}  // namespace bilat::demo
