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

#include "bilat/demo/episode_log.hpp"

#include "bilat/io/csv.hpp"

namespace bilat::demo {

void EpisodeLog::reserve(std::size_t n) {
  t.reserve(n);
  master.reserve(n);
  slave.reserve(n);
  vel_cmd_m.reserve(n);
  vel_cmd_s.reserve(n);
  mop_length.reserve(n);
  contact.reserve(n);
}

void EpisodeLog::push_row(double time, const sim::JointState& m, const sim::JointState& s,
                          const Eigen::VectorXd& cmd_m, const Eigen::VectorXd& cmd_s,
                          double mop, const Eigen::Vector2d& force) {
  t.push_back(time);
  master.push_back(m);
  slave.push_back(s);
  vel_cmd_m.push_back(cmd_m);
  vel_cmd_s.push_back(cmd_s);
  mop_length.push_back(mop);
  contact.push_back(force);
}

static void append_joint_headers(std::vector<std::string>& header, const std::string& prefix,
                                 int n) {
  for (int i = 0; i < n; ++i) header.push_back(prefix + std::to_string(i));
}

void EpisodeLog::write_csv(const std::string& path,
                           const std::vector<std::string>& comments) const {
  io::CsvTable table;
  table.comments = comments;
  table.comments.push_back("dt " + io::format_double(dt));
  table.comments.push_back("joints " + std::to_string(joints));

  table.header.push_back("t");
  append_joint_headers(table.header, "m_theta", joints);
  append_joint_headers(table.header, "m_dtheta", joints);
  append_joint_headers(table.header, "m_tau", joints);
  append_joint_headers(table.header, "s_theta", joints);
  append_joint_headers(table.header, "s_dtheta", joints);
  append_joint_headers(table.header, "s_tau", joints);
  append_joint_headers(table.header, "cmd_m", joints);
  append_joint_headers(table.header, "cmd_s", joints);
  table.header.push_back("mop_length");
  table.header.push_back("force_t");
  table.header.push_back("force_n");

  table.rows.reserve(rows());
  for (std::size_t k = 0; k < rows(); ++k) {
    std::vector<double> row;
    row.reserve(table.header.size());
    row.push_back(t[k]);
    auto push_vec = [&row](const Eigen::VectorXd& v) {
      for (int i = 0; i < v.size(); ++i) row.push_back(v[i]);
    };
    push_vec(master[k].theta);
    push_vec(master[k].dtheta);
    push_vec(master[k].tau);
    push_vec(slave[k].theta);
    push_vec(slave[k].dtheta);
    push_vec(slave[k].tau);
    push_vec(vel_cmd_m[k]);
    push_vec(vel_cmd_s[k]);
    row.push_back(mop_length[k]);
    row.push_back(contact[k].x());
    row.push_back(contact[k].y());
    table.rows.push_back(std::move(row));
  }
  io::write_csv(path, table);
}

EpisodeLog EpisodeLog::read_csv(const std::string& path) { return read_csv(path, nullptr); }

EpisodeLog EpisodeLog::read_csv(const std::string& path, std::vector<std::string>* comments) {
  const io::CsvTable table = io::read_csv(path);

  EpisodeLog log;
  for (const auto& c : table.comments) {
    if (c.rfind("dt ", 0) == 0) log.dt = io::parse_double(c.substr(3));
    if (c.rfind("joints ", 0) == 0) log.joints = static_cast<int>(io::parse_double(c.substr(7)));
  }
  if (comments) *comments = table.comments;
  if (log.joints <= 0) {
    throw ConfigError("episode file missing 'joints' header: " + path);
  }
  const int n = log.joints;
  const std::size_t expected = 1 + 8 * static_cast<std::size_t>(n) + 3;
  if (table.header.size() != expected) {
    throw ConfigError("episode file has unexpected column count: " + path);
  }

  log.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    std::size_t at = 0;
    const double time = row[at++];
    auto take_vec = [&row, &at, n]() {
      Eigen::VectorXd v(n);
      for (int i = 0; i < n; ++i) v[i] = row[at++];
      return v;
    };
    sim::JointState m{take_vec(), take_vec(), take_vec()};
    sim::JointState s{take_vec(), take_vec(), take_vec()};
    const Eigen::VectorXd cm = take_vec();
    const Eigen::VectorXd cs = take_vec();
    const double mop = row[at++];
    const Eigen::Vector2d force(row[at], row[at + 1]);
    log.push_row(time, m, s, cm, cs, mop, force);
  }
  return log;
}

}  // namespace bilat::demo
