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

#include "bilat/autoop/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bilat/io/csv.hpp"

namespace bilat::autoop {

namespace {

// Start of the wipe phase: the first instant from which contact stays on for
// at least 0.2 s. Returns the log size if there is none.
std::size_t detect_wipe_start(const demo::EpisodeLog& log) {
  const std::size_t needed = std::max<std::size_t>(1, std::llround(0.2 / log.dt));
  std::size_t run = 0;
  for (std::size_t k = 0; k < log.rows(); ++k) {
    if (log.contact[k].y() > 0.0) {
      ++run;
      if (run >= needed) return k + 1 - run;
    } else {
      run = 0;
    }
  }
  return log.rows();
}

// Lag of the first autocorrelation peak of the detrended signal, or 0 when
// the log does not carry a usable cycle.
double estimate_period(const std::vector<double>& signal, double dt) {
  const std::size_t n = signal.size();
  if (n < 8) return 0.0;

  double mean = 0.0;
  for (double v : signal) mean += v;
  mean /= static_cast<double>(n);

  std::vector<double> x(n);
  double energy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = signal[i] - mean;
    energy += x[i] * x[i];
  }
  if (energy <= 0.0) return 0.0;

  const std::size_t max_lag = n / 2;
  std::vector<double> corr(max_lag + 1, 0.0);
  for (std::size_t lag = 1; lag <= max_lag; ++lag) {
    double acc = 0.0;
    for (std::size_t i = lag; i < n; ++i) acc += x[i] * x[i - lag];
    corr[lag] = acc / energy;
  }

  // Wait for the correlation to dip, then take the first local maximum.
  std::size_t lag = 1;
  while (lag <= max_lag && corr[lag] > 0.0) ++lag;
  std::size_t best = 0;
  double best_value = 0.3;  // demand a clear cycle
  for (; lag + 1 <= max_lag; ++lag) {
    if (corr[lag] > best_value && corr[lag] >= corr[lag - 1] && corr[lag] >= corr[lag + 1]) {
      best = lag;
      break;
    }
  }
  return static_cast<double>(best) * dt;
}

}  // namespace

void EvalReport::validate() const {
  require(std::isfinite(mean_normal_force) && std::isfinite(contact_duty_cycle) &&
              std::isfinite(wipe_period) && std::isfinite(sync_rms) && std::isfinite(sync_max),
          "report metrics must be finite");
  require(contact_duty_cycle >= 0.0 && contact_duty_cycle <= 1.0,
          "duty cycle must be in [0, 1]");
  require(torque_amplitude.allFinite(), "torque amplitudes must be finite");
}

EvalReport evaluate_episode(const demo::EpisodeLog& log) {
  EvalReport report;
  report.torque_amplitude = Eigen::VectorXd::Zero(log.joints);
  if (log.rows() == 0) {
    report.validate();
    return report;
  }

  const std::size_t rows = log.rows();
  const int n = log.joints;

  // Master-slave synchronization over the whole log.
  double sq_sum = 0.0;
  double max_err = 0.0;
  for (std::size_t k = 0; k < rows; ++k) {
    const Eigen::VectorXd err = log.master[k].theta - log.slave[k].theta;
    sq_sum += err.squaredNorm();
    max_err = std::max(max_err, err.cwiseAbs().maxCoeff());
  }
  report.sync_rms = std::sqrt(sq_sum / (static_cast<double>(rows) * n));
  report.sync_max = max_err;

  const std::size_t wipe_start = detect_wipe_start(log);
  report.wipe_start = wipe_start < rows ? log.t[wipe_start] : 0.0;
  if (wipe_start >= rows) {
    report.validate();
    return report;
  }

  std::size_t contact_samples = 0;
  double force_sum = 0.0;
  Eigen::VectorXd tau_min = Eigen::VectorXd::Constant(n, std::numeric_limits<double>::infinity());
  Eigen::VectorXd tau_max = -tau_min;
  std::vector<double> wipe_signal;
  wipe_signal.reserve(rows - wipe_start);
  for (std::size_t k = wipe_start; k < rows; ++k) {
    if (log.contact[k].y() > 0.0) {
      ++contact_samples;
      force_sum += log.contact[k].y();
    }
    tau_min = tau_min.cwiseMin(log.slave[k].tau);
    tau_max = tau_max.cwiseMax(log.slave[k].tau);
    wipe_signal.push_back(0.0);  // filled below with the liveliest joint angle
  }

  const std::size_t wipe_samples = rows - wipe_start;
  report.contact_duty_cycle =
      static_cast<double>(contact_samples) / static_cast<double>(wipe_samples);
  report.mean_normal_force =
      contact_samples > 0 ? force_sum / static_cast<double>(contact_samples) : 0.0;
  report.torque_amplitude = tau_max - tau_min;

  // Period from the joint angle with the largest wipe-phase variance.
  int best_joint = 0;
  double best_var = -1.0;
  for (int j = 0; j < n; ++j) {
    double mean = 0.0, sq = 0.0;
    for (std::size_t k = wipe_start; k < rows; ++k) {
      const double v = log.slave[k].theta[j];
      mean += v;
      sq += v * v;
    }
    mean /= static_cast<double>(wipe_samples);
    const double var = sq / static_cast<double>(wipe_samples) - mean * mean;
    if (var > best_var) {
      best_var = var;
      best_joint = j;
    }
  }
  for (std::size_t k = wipe_start; k < rows; ++k) {
    wipe_signal[k - wipe_start] = log.slave[k].theta[best_joint];
  }
  report.wipe_period = estimate_period(wipe_signal, log.dt);

  report.validate();
  return report;
}

std::string EvalReport::to_text() const {
  std::ostringstream out;
  out << "mean_normal_force " << io::format_double(mean_normal_force) << '\n';
  out << "contact_duty_cycle " << io::format_double(contact_duty_cycle) << '\n';
  out << "wipe_period " << io::format_double(wipe_period) << '\n';
  out << "wipe_start " << io::format_double(wipe_start) << '\n';
  for (int j = 0; j < torque_amplitude.size(); ++j) {
    out << "torque_amplitude_j" << j << ' ' << io::format_double(torque_amplitude[j]) << '\n';
  }
  out << "sync_rms " << io::format_double(sync_rms) << '\n';
  out << "sync_max " << io::format_double(sync_max) << '\n';
  out << "prediction_faults " << prediction_faults << '\n';
  return out.str();
}

void EvalReport::write_text(const std::string& path,
                            const std::vector<std::string>& comments) const {
  std::ostringstream out;
  for (const auto& c : comments) out << "# " << c << '\n';
  out << to_text();
  io::write_text_file(path, out.str());
}

}  // namespace bilat::autoop
