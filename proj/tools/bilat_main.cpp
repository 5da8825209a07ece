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

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bilat/autoop/rollout.hpp"
#include "bilat/cli/experiment_config.hpp"
#include "bilat/demo/dataset.hpp"
#include "bilat/demo/demonstration.hpp"
#include "bilat/io/csv.hpp"
#include "bilat/learn/model_io.hpp"
#include "bilat/learn/train.hpp"

namespace fs = std::filesystem;
using bilat::cli::ExperimentConfig;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

std::string episode_filename(int index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "episode_%03d.csv", index);
  return buf;
}

int cmd_demo(const std::string& config_path, int episodes_override,
             std::optional<std::uint64_t> seed_override, const std::string& out_dir) {
  ExperimentConfig cfg = ExperimentConfig::load(config_path);
  if (seed_override) cfg.seed = *seed_override;
  const int episodes = episodes_override > 0 ? episodes_override : cfg.episodes;

  fs::create_directories(out_dir);
  std::vector<bilat::demo::EpisodeLog> logs;
  logs.reserve(episodes);
  for (int e = 0; e < episodes; ++e) {
    const double mop = cfg.mop_lengths[e % cfg.mop_lengths.size()];
    const auto setup = cfg.demo_setup(mop, static_cast<std::uint64_t>(e));
    bilat::demo::EpisodeLog log = bilat::demo::run_demonstration(setup);

    std::vector<std::string> comments = cfg.provenance();
    comments.push_back("episode " + std::to_string(e));
    comments.push_back("mop_length " + bilat::io::format_double(mop));
    log.write_csv((fs::path(out_dir) / episode_filename(e)).string(), comments);
    logs.push_back(std::move(log));
    std::cout << "episode " << e << " done (mop " << mop << " m)\n";
  }

  const auto dataset = bilat::demo::build_dataset(logs, cfg.horizon_ticks());
  std::vector<std::string> comments = cfg.provenance();
  comments.push_back("episodes " + std::to_string(episodes));
  bilat::demo::write_dataset_csv((fs::path(out_dir) / "dataset.csv").string(), comments,
                                 dataset);
  std::cout << "wrote " << episodes << " episodes and dataset to " << out_dir << "\n";
  return kExitOk;
}

int cmd_train(const std::string& dataset_path, const std::string& config_path,
              std::optional<std::uint64_t> seed_override, const std::string& out_path) {
  ExperimentConfig cfg = ExperimentConfig::load(config_path);
  if (seed_override) {
    cfg.seed = *seed_override;
    cfg.train.seed = *seed_override;
  }
  const auto dataset = bilat::demo::read_dataset_csv(dataset_path);

  const auto result = bilat::learn::train(dataset, cfg.train);
  if (const fs::path parent = fs::path(out_path).parent_path(); !parent.empty()) {
    fs::create_directories(parent);
  }
  bilat::learn::save_model(out_path, result.model, result.stats);

  bilat::io::CsvTable history;
  history.comments = cfg.provenance();
  history.comments.push_back("dataset " + dataset_path);
  history.header = {"epoch", "train_mse", "val_mse"};
  for (const auto& row : result.history) {
    history.rows.push_back({static_cast<double>(row.epoch), row.train_mse, row.val_mse});
  }
  bilat::io::write_csv(out_path + ".loss.csv", history);

  std::cout << "trained " << cfg.train.layers << "x" << cfg.train.hidden << " model, best val mse "
            << result.best_val << " at epoch " << result.best_epoch << "\n";
  std::cout << "wrote " << out_path << " and " << out_path << ".loss.csv\n";
  return kExitOk;
}

int cmd_run(const std::string& model_path, const std::string& config_path,
            double mop_length, const std::string& schedule_path, const std::string& out_dir) {
  ExperimentConfig cfg = ExperimentConfig::load(config_path);

  bilat::autoop::MopSchedule schedule;
  if (!schedule_path.empty()) {
    schedule = bilat::cli::load_mop_schedule_csv(schedule_path);
  } else if (mop_length > 0.0) {
    schedule = bilat::autoop::MopSchedule::constant(mop_length);
  } else {
    schedule = bilat::autoop::MopSchedule::constant(cfg.env.mop_length);
  }

  auto [model, stats] = bilat::learn::load_model(model_path);
  bilat::autoop::LstmMasterSource source(bilat::learn::MasterPredictor(model, stats));

  const auto auto_cfg = cfg.autoop_config(schedule);
  const auto result = bilat::autoop::run_autonomous(auto_cfg, source);

  fs::create_directories(out_dir);
  std::vector<std::string> comments = cfg.provenance();
  comments.push_back("model " + model_path);
  for (const auto& [t, len] : schedule.points) {
    comments.push_back("schedule " + bilat::io::format_double(t) + " " +
                       bilat::io::format_double(len));
  }
  result.log.write_csv((fs::path(out_dir) / "episode.csv").string(), comments);
  result.report.write_text((fs::path(out_dir) / "report.txt").string(), comments);

  std::cout << result.report.to_text();
  std::cout << "wrote episode and report to " << out_dir << "\n";
  return kExitOk;
}

int cmd_eval(const std::string& episode_path, const std::string& out_path) {
  std::vector<std::string> comments;
  const auto log = bilat::demo::EpisodeLog::read_csv(episode_path, &comments);
  const auto report = bilat::autoop::evaluate_episode(log);
  if (out_path.empty()) {
    std::cout << report.to_text();
  } else {
    comments.push_back("episode " + episode_path);
    report.write_text(out_path, comments);
    std::cout << "wrote " << out_path << "\n";
  }
  return kExitOk;
}

int cmd_export(const std::string& what, const std::string& series, const std::string& out_path,
               const std::vector<std::string>& episode_paths) {
  if (what != "angles" && what != "torques") {
    throw bilat::ConfigError("--what must be 'angles' or 'torques'");
  }
  if (series != "master" && series != "slave") {
    throw bilat::ConfigError("--series must be 'master' or 'slave'");
  }

  bilat::io::CsvTable table;
  table.header = {"t", "joint", "value", "run_id"};
  for (std::size_t run = 0; run < episode_paths.size(); ++run) {
    table.comments.push_back("run_id " + std::to_string(run) + " " + episode_paths[run]);
    const auto log = bilat::demo::EpisodeLog::read_csv(episode_paths[run]);
    const auto& states = series == "master" ? log.master : log.slave;
    for (std::size_t k = 0; k < log.rows(); ++k) {
      const Eigen::VectorXd& value = what == "angles" ? states[k].theta : states[k].tau;
      for (int j = 0; j < log.joints; ++j) {
        table.rows.push_back({log.t[k], static_cast<double>(j), value[j],
                              static_cast<double>(run)});
      }
    }
  }
  bilat::io::write_csv(out_path, table);
  std::cout << "wrote " << table.rows.size() << " rows to " << out_path << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bilateral teleoperation, imitation learning, and autonomous mopping sandbox"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string dataset_path;
  std::string model_path;
  std::string episode_path;
  std::string schedule_path;
  std::string what = "angles";
  std::string series = "slave";
  std::vector<std::string> episode_paths;
  int episodes = 0;
  double mop_length = 0.0;
  std::optional<std::uint64_t> seed;

  auto* demo = app.add_subcommand("demo", "collect teacher data with the virtual operator");
  demo->add_option("--config", config_path, "experiment config (JSON)")->required();
  demo->add_option("--episodes", episodes, "number of episodes (default from config)");
  demo->add_option("--seed", seed, "override the config seed");
  demo->add_option("--out", out_path, "output directory")->required();

  auto* train = app.add_subcommand("train", "train the master-response predictor");
  train->add_option("--dataset", dataset_path, "dataset CSV from 'demo'")->required();
  train->add_option("--config", config_path, "experiment config (JSON)")->required();
  train->add_option("--seed", seed, "override the config seed");
  train->add_option("--out", out_path, "model output path")->required();

  auto* run = app.add_subcommand("run", "autonomous operation with a trained model");
  run->add_option("--model", model_path, "trained model file")->required();
  run->add_option("--config", config_path, "experiment config (JSON)")->required();
  run->add_option("--mop-length", mop_length, "constant mop length [m]");
  run->add_option("--schedule", schedule_path, "CSV schedule t,mop_length");
  run->add_option("--out", out_path, "output directory")->required();

  auto* eval = app.add_subcommand("eval", "recompute the report of an episode file");
  eval->add_option("--episode", episode_path, "episode CSV")->required();
  eval->add_option("--out", out_path, "report output path (default: stdout)");

  auto* exp = app.add_subcommand("export", "tidy per-joint traces for plotting");
  exp->add_option("--what", what, "angles | torques");
  exp->add_option("--series", series, "master | slave");
  exp->add_option("--out", out_path, "output CSV")->required();
  exp->add_option("episodes", episode_paths, "episode CSV files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (demo->parsed()) return cmd_demo(config_path, episodes, seed, out_path);
    if (train->parsed()) return cmd_train(dataset_path, config_path, seed, out_path);
    if (run->parsed()) return cmd_run(model_path, config_path, mop_length, schedule_path, out_path);
    if (eval->parsed()) return cmd_eval(episode_path, out_path);
    if (exp->parsed()) return cmd_export(what, series, out_path, episode_paths);
  } catch (const bilat::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const bilat::DivergenceError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitOk;
}
