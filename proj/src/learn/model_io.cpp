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

#include "bilat/learn/model_io.hpp"

#include <fstream>

#include <json.hpp>

namespace bilat::learn {

static constexpr const char* kMagic = "bilat-lstm v1";

void save_model(const std::string& path, const LstmModel& model,
                const NormalizerStats& stats) {
  model.validate();
  stats.validate();

  nlohmann::json header;
  header["input"] = model.input_size;
  header["hidden"] = model.hidden_size;
  header["layers"] = model.num_layers();
  header["output"] = model.output_size;
  header["params"] = model.param_count();
  header["stats_min"] = std::vector<double>(stats.min.data(), stats.min.data() + stats.min.size());
  header["stats_max"] = std::vector<double>(stats.max.data(), stats.max.data() + stats.max.size());

  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write model file: " + path);
  out << kMagic << '\n' << header.dump() << '\n';
  const Eigen::VectorXd flat = model.pack_params();
  out.write(reinterpret_cast<const char*>(flat.data()),
            static_cast<std::streamsize>(flat.size() * sizeof(double)));
  if (!out) throw ConfigError("write failed: " + path);
}

std::pair<LstmModel, NormalizerStats> load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("model file not found: " + path);

  std::string magic, header_line;
  if (!std::getline(in, magic) || magic != kMagic) {
    throw ConfigError("not a model file (bad magic): " + path);
  }
  if (!std::getline(in, header_line)) throw ConfigError("truncated model file: " + path);

  nlohmann::json header;
  try {
    header = nlohmann::json::parse(header_line);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("bad model header in " + path + ": " + e.what());
  }

  LstmModel model = LstmModel::zeros(header.at("input").get<int>(),
                                     header.at("hidden").get<int>(),
                                     header.at("layers").get<int>(),
                                     header.at("output").get<int>());
  const auto params = header.at("params").get<std::int64_t>();
  if (params != model.param_count()) {
    throw ConfigError("model header parameter count mismatch: " + path);
  }

  Eigen::VectorXd flat(params);
  in.read(reinterpret_cast<char*>(flat.data()),
          static_cast<std::streamsize>(params * sizeof(double)));
  if (in.gcount() != static_cast<std::streamsize>(params * sizeof(double))) {
    throw ConfigError("truncated model file: " + path);
  }
  model.unpack_params(flat);

  NormalizerStats stats;
  const auto mins = header.at("stats_min").get<std::vector<double>>();
  const auto maxs = header.at("stats_max").get<std::vector<double>>();
  stats.min = Eigen::Map<const Eigen::VectorXd>(mins.data(), mins.size());
  stats.max = Eigen::Map<const Eigen::VectorXd>(maxs.data(), maxs.size());

  model.validate();
  stats.validate();
  return {std::move(model), std::move(stats)};
}

}  // namespace bilat::learn
