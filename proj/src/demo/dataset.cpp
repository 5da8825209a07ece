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

#include "bilat/demo/dataset.hpp"

#include "bilat/io/csv.hpp"
#include "bilat/sim/robot.hpp"

namespace bilat::demo {

std::vector<SequencePair> build_dataset(const std::vector<EpisodeLog>& episodes,
                                        int horizon_ticks) {
  require(horizon_ticks >= 1, "horizon must be >= 1 tick");

  std::vector<SequencePair> dataset;
  dataset.reserve(episodes.size());
  for (std::size_t e = 0; e < episodes.size(); ++e) {
    const EpisodeLog& log = episodes[e];
    if (log.rows() <= static_cast<std::size_t>(horizon_ticks)) {
      throw ConfigError("episode " + std::to_string(e) +
                        " is shorter than the prediction horizon");
    }
    const std::size_t grid_samples = (log.rows() - 1) / horizon_ticks + 1;
    const std::size_t pairs = grid_samples - 1;
    const int dims = 3 * log.joints;

    SequencePair seq;
    seq.episode = static_cast<int>(e);
    seq.inputs.resize(pairs, dims);
    seq.targets.resize(pairs, dims);
    for (std::size_t k = 0; k < pairs; ++k) {
      seq.inputs.row(k) = sim::response_vector(log.slave[k * horizon_ticks]).transpose();
      seq.targets.row(k) =
          sim::response_vector(log.master[(k + 1) * horizon_ticks]).transpose();
    }
    dataset.push_back(std::move(seq));
  }
  return dataset;
}

void write_dataset_csv(const std::string& path, const std::vector<std::string>& comments,
                       const std::vector<SequencePair>& dataset) {
  require(!dataset.empty(), "dataset must not be empty");
  const int dims = static_cast<int>(dataset.front().inputs.cols());
  const int n = dims / 3;

  io::CsvTable table;
  table.comments = comments;
  table.header.push_back("episode");
  const char* group[3] = {"theta", "dtheta", "tau"};
  for (const char* side : {"in", "tgt"}) {
    for (int g = 0; g < 3; ++g) {
      for (int i = 0; i < n; ++i) {
        table.header.push_back(std::string(side) + "_" + group[g] + std::to_string(i));
      }
    }
  }

  for (const auto& seq : dataset) {
    for (int k = 0; k < seq.inputs.rows(); ++k) {
      std::vector<double> row;
      row.reserve(1 + 2 * dims);
      row.push_back(static_cast<double>(seq.episode));
      for (int i = 0; i < dims; ++i) row.push_back(seq.inputs(k, i));
      for (int i = 0; i < dims; ++i) row.push_back(seq.targets(k, i));
      table.rows.push_back(std::move(row));
    }
  }
  io::write_csv(path, table);
}

std::vector<SequencePair> read_dataset_csv(const std::string& path) {
  const io::CsvTable table = io::read_csv(path);
  if (table.header.size() < 7 || (table.header.size() - 1) % 6 != 0) {
    throw ConfigError("dataset file has unexpected column count: " + path);
  }
  if (table.rows.empty()) throw ConfigError("dataset file has no rows: " + path);
  const int dims = static_cast<int>((table.header.size() - 1) / 2);

  std::vector<SequencePair> dataset;
  std::size_t row = 0;
  while (row < table.rows.size()) {
    const int episode = static_cast<int>(table.rows[row][0]);
    std::size_t end = row;
    while (end < table.rows.size() && static_cast<int>(table.rows[end][0]) == episode) ++end;

    SequencePair seq;
    seq.episode = episode;
    seq.inputs.resize(end - row, dims);
    seq.targets.resize(end - row, dims);
    for (std::size_t k = row; k < end; ++k) {
      for (int i = 0; i < dims; ++i) {
        seq.inputs(k - row, i) = table.rows[k][1 + i];
        seq.targets(k - row, i) = table.rows[k][1 + dims + i];
      }
    }
    dataset.push_back(std::move(seq));
    row = end;
  }
  return dataset;
}

}  // namespace bilat::demo
