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

#include "bilat/cli/experiment_config.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include <json.hpp>

#include "bilat/io/csv.hpp"
#include "bilat/rng.hpp"
#include "bilat/sim/kinematics.hpp"

namespace bilat::cli {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) {
      throw ConfigError("unknown key '" + key + "' in " + where);
    }
  }
}

double num_or(const json& obj, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj.at(key).is_number()) throw ConfigError(std::string("'") + key + "' must be a number");
  return obj.at(key).get<double>();
}

int int_or(const json& obj, const char* key, int fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj.at(key).is_number_integer()) {
    throw ConfigError(std::string("'") + key + "' must be an integer");
  }
  return obj.at(key).get<int>();
}

Eigen::VectorXd vec_or(const json& obj, const char* key, const Eigen::VectorXd& fallback) {
  if (!obj.contains(key)) return fallback;
  const auto& arr = obj.at(key);
  if (!arr.is_array()) throw ConfigError(std::string("'") + key + "' must be an array");
  Eigen::VectorXd out(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number()) throw ConfigError(std::string("'") + key + "' must be numeric");
    out[static_cast<int>(i)] = arr[i].get<double>();
  }
  return out;
}

std::vector<double> default_mop_lengths() {
  // 15 uniformly spaced handle lengths covering both test lengths.
  std::vector<double> lengths;
  for (int i = 0; i < 15; ++i) lengths.push_back(0.43 + 0.01 * i);
  return lengths;
}

}  // namespace

ExperimentConfig ExperimentConfig::defaults() {
  ExperimentConfig cfg;
  cfg.gains = control::GainSet::defaults(cfg.joints);
  cfg.inertia = cfg.gains.j.j;
  cfg.initial_joints = Eigen::Vector3d(0.3, 0.5, -1.2);
  cfg.env.link_lengths = Eigen::Vector2d(0.3, 0.25);
  cfg.mop_lengths = default_mop_lengths();
  cfg.train.layers = 2;
  cfg.train.hidden = 32;
  cfg.train.epochs = 30;
  cfg.raw_text = "{}";
  return cfg;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  return from_json_text(io::read_text_file(path));
}

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config root must be an object");

  reject_unknown_keys(root,
                      {"dt", "nn_period", "seed", "robot", "gains", "env", "operator",
                       "demo", "train", "autoop"},
                      "config root");

  ExperimentConfig cfg = defaults();
  cfg.raw_text = text;
  cfg.dt = num_or(root, "dt", cfg.dt);
  cfg.nn_period = num_or(root, "nn_period", cfg.nn_period);
  if (root.contains("seed")) cfg.seed = root.at("seed").get<std::uint64_t>();

  if (root.contains("robot")) {
    const json& robot = root.at("robot");
    reject_unknown_keys(robot,
                        {"joints", "inertia", "servo_time_constant", "velocity_limit",
                         "initial_joints"},
                        "robot");
    cfg.joints = int_or(robot, "joints", cfg.joints);
    if (cfg.joints < 1) throw ConfigError("robot.joints must be >= 1");
    cfg.gains = control::GainSet::defaults(std::min(cfg.joints, 6));
    if (cfg.joints > 6 && !robot.contains("inertia")) {
      throw ConfigError("robot.inertia required for more than 6 joints");
    }
    cfg.inertia = vec_or(robot, "inertia", cfg.gains.j.j);
    cfg.servo_time_constant = num_or(robot, "servo_time_constant", cfg.servo_time_constant);
    cfg.velocity_limit = num_or(robot, "velocity_limit", cfg.velocity_limit);
    cfg.initial_joints =
        vec_or(robot, "initial_joints", Eigen::VectorXd::Zero(cfg.joints));
    if (!robot.contains("initial_joints") && cfg.joints == 3) {
      cfg.initial_joints = Eigen::Vector3d(0.3, 0.5, -1.2);
    }
  }

  if (root.contains("gains")) {
    const json& gains = root.at("gains");
    reject_unknown_keys(gains,
                        {"kp", "kd", "kf", "virtual_mass", "admittance_cutoff",
                         "derivative_cutoff", "dob_cutoff"},
                        "gains");
    cfg.gains.kp = vec_or(gains, "kp", cfg.gains.kp);
    cfg.gains.kd = vec_or(gains, "kd", cfg.gains.kd);
    cfg.gains.kf = vec_or(gains, "kf", cfg.gains.kf);
    const Eigen::VectorXd mass = vec_or(gains, "virtual_mass", cfg.gains.admittance.m);
    const double omega = num_or(gains, "admittance_cutoff", cfg.gains.admittance.omega);
    cfg.gains.admittance = signal::AdmittanceParams::make(mass, omega);
    cfg.gains.g = num_or(gains, "derivative_cutoff", cfg.gains.g);
    cfg.gains.g_dob = num_or(gains, "dob_cutoff", cfg.gains.g_dob);
  }
  cfg.gains.j = sim::InertiaParams{cfg.inertia};

  if (root.contains("env")) {
    const json& env = root.at("env");
    reject_unknown_keys(env,
                        {"link_lengths", "mop_length", "desk_height", "contact_stiffness",
                         "contact_damping", "friction_coeff"},
                        "env");
    cfg.env.link_lengths = vec_or(env, "link_lengths", cfg.env.link_lengths);
    cfg.env.mop_length = num_or(env, "mop_length", cfg.env.mop_length);
    cfg.env.desk_height = num_or(env, "desk_height", cfg.env.desk_height);
    cfg.env.contact_stiffness = num_or(env, "contact_stiffness", cfg.env.contact_stiffness);
    cfg.env.contact_damping = num_or(env, "contact_damping", cfg.env.contact_damping);
    cfg.env.friction_coeff = num_or(env, "friction_coeff", cfg.env.friction_coeff);
  }

  if (root.contains("operator")) {
    const json& op = root.at("operator");
    reject_unknown_keys(op,
                        {"wipe_amplitude", "wipe_frequency", "press_force_target",
                         "approach_duration", "episode_duration", "stiffness", "damping",
                         "angle_target", "contact_x", "variability"},
                        "operator");
    cfg.script.wipe_amplitude = num_or(op, "wipe_amplitude", cfg.script.wipe_amplitude);
    cfg.script.wipe_frequency = num_or(op, "wipe_frequency", cfg.script.wipe_frequency);
    cfg.script.press_force_target =
        num_or(op, "press_force_target", cfg.script.press_force_target);
    cfg.script.approach_duration =
        num_or(op, "approach_duration", cfg.script.approach_duration);
    cfg.script.episode_duration = num_or(op, "episode_duration", cfg.script.episode_duration);
    cfg.script.stiffness = num_or(op, "stiffness", cfg.script.stiffness);
    cfg.script.damping = num_or(op, "damping", cfg.script.damping);
    cfg.script.angle_target = num_or(op, "angle_target", cfg.script.angle_target);
    cfg.script.contact_x = num_or(op, "contact_x", cfg.script.contact_x);
    cfg.operator_variability = num_or(op, "variability", cfg.operator_variability);
  }

  if (root.contains("demo")) {
    const json& demo_section = root.at("demo");
    reject_unknown_keys(demo_section, {"episodes", "mop_lengths"}, "demo");
    cfg.episodes = int_or(demo_section, "episodes", cfg.episodes);
    if (demo_section.contains("mop_lengths")) {
      const Eigen::VectorXd v = vec_or(demo_section, "mop_lengths", Eigen::VectorXd());
      cfg.mop_lengths.assign(v.data(), v.data() + v.size());
    }
  }

  if (root.contains("train")) {
    const json& train = root.at("train");
    reject_unknown_keys(train,
                        {"layers", "hidden", "sequence_length", "batch_size",
                         "learning_rate", "epochs", "augment_factor", "noise_scale",
                         "validation_fraction"},
                        "train");
    cfg.train.layers = int_or(train, "layers", cfg.train.layers);
    cfg.train.hidden = int_or(train, "hidden", cfg.train.hidden);
    cfg.train.sequence_length = int_or(train, "sequence_length", cfg.train.sequence_length);
    cfg.train.batch_size = int_or(train, "batch_size", cfg.train.batch_size);
    cfg.train.learning_rate = num_or(train, "learning_rate", cfg.train.learning_rate);
    cfg.train.epochs = int_or(train, "epochs", cfg.train.epochs);
    cfg.train.augment_factor = int_or(train, "augment_factor", cfg.train.augment_factor);
    cfg.train.noise_scale = num_or(train, "noise_scale", cfg.train.noise_scale);
    cfg.train.validation_fraction =
        num_or(train, "validation_fraction", cfg.train.validation_fraction);
  }

  if (root.contains("autoop")) {
    const json& autoop_section = root.at("autoop");
    reject_unknown_keys(autoop_section, {"duration"}, "autoop");
    cfg.autoop_duration = num_or(autoop_section, "duration", cfg.autoop_duration);
  }

  cfg.train.seed = cfg.seed;
  cfg.validate();
  return cfg;
}

void ExperimentConfig::validate() const {
  try {
    require(dt > 0.0 && std::isfinite(dt), "dt must be > 0");
    require(nn_period > 0.0, "nn_period must be > 0");
    const double ratio = nn_period / dt;
    require(std::abs(ratio - std::round(ratio)) < 1e-9 && ratio >= 1.0,
            "nn_period must be an integer multiple of dt");
    require(joints >= 1, "joints must be >= 1");
    require(inertia.size() == joints, "inertia length must match joint count");
    require(initial_joints.size() == joints, "initial_joints length must match joint count");
    require(servo_time_constant > 0.0, "servo_time_constant must be > 0");
    require(velocity_limit > 0.0, "velocity_limit must be > 0");
    require(gains.joints() == joints, "gain vectors must match joint count");
    gains.validate();
    env.validate();
    script.validate();
    require(episodes >= 1, "demo.episodes must be >= 1");
    require(!mop_lengths.empty(), "demo.mop_lengths must not be empty");
    for (double m : mop_lengths) require(m > 0.0, "mop lengths must be > 0");
    require(operator_variability >= 0.0 && operator_variability < 0.5,
            "operator.variability must be in [0, 0.5)");
    train.validate();
    require(autoop_duration >= 0.0, "autoop.duration must be >= 0");
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

int ExperimentConfig::horizon_ticks() const {
  return static_cast<int>(std::llround(nn_period / dt));
}

sim::RobotSim ExperimentConfig::robot_prototype() const {
  sim::RobotSim robot;
  robot.state = sim::JointState::zero(joints);
  robot.state.theta = initial_joints;
  robot.servo_time_constant = servo_time_constant;
  robot.velocity_limit = velocity_limit;
  robot.inertia = sim::InertiaParams{inertia};
  return robot;
}

demo::DemoSetup ExperimentConfig::demo_setup(double mop_length,
                                             std::uint64_t episode_index) const {
  demo::DemoSetup setup;
  setup.gains = gains;
  setup.env = env;
  setup.env.mop_length = mop_length;
  setup.robot = robot_prototype();
  setup.dt = dt;
  setup.script = script;

  if (operator_variability > 0.0) {
    Rng rng = Rng(seed).stream(1000 + episode_index);
    auto jitter = [&rng, this]() {
      return 1.0 + operator_variability * (2.0 * rng.uniform() - 1.0);
    };
    setup.script.wipe_amplitude *= jitter();
    setup.script.wipe_frequency *= jitter();
    setup.script.press_force_target *= jitter();
  }

  const sim::TipPose tip = sim::forward_kinematics(setup.robot.state.theta, setup.env);
  setup.script.start_tip = Eigen::Vector2d(tip.x, tip.y);
  return setup;
}

autoop::AutoOpConfig ExperimentConfig::autoop_config(const autoop::MopSchedule& schedule) const {
  autoop::AutoOpConfig cfg;
  cfg.gains = gains;
  cfg.env = env;
  cfg.robot = robot_prototype();
  cfg.schedule = schedule;
  cfg.duration = autoop_duration;
  cfg.dt = dt;
  cfg.nn_period = nn_period;
  return cfg;
}

std::vector<std::string> ExperimentConfig::provenance() const {
  std::vector<std::string> lines;
  lines.push_back("config-begin");
  std::istringstream in(raw_text);
  std::string line;
  while (std::getline(in, line)) lines.push_back("  " + line);
  lines.push_back("config-end");
  lines.push_back("seed " + std::to_string(seed));
  return lines;
}

autoop::MopSchedule load_mop_schedule_csv(const std::string& path) {
  const io::CsvTable table = io::read_csv(path);
  if (table.header.size() != 2 || table.header[0] != "t" ||
      table.header[1] != "mop_length") {
    throw ConfigError("schedule file must have columns t,mop_length: " + path);
  }
  if (table.rows.empty()) throw ConfigError("schedule file has no rows: " + path);
  autoop::MopSchedule schedule;
  for (const auto& row : table.rows) schedule.points.emplace_back(row[0], row[1]);
  try {
    schedule.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string(e.what()) + ": " + path);
  }
  return schedule;
}

}  // namespace bilat::cli
