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

#include "bilat/learn/train.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

namespace bilat::learn {

std::vector<demo::SequencePair> augment(const std::vector<demo::SequencePair>& dataset,
                                        int factor, double noise_scale, std::uint64_t seed) {
  require(factor >= 1, "augment factor must be >= 1");
  std::vector<demo::SequencePair> out;
  out.reserve(dataset.size() * factor);
  Rng rng(seed);
  for (std::size_t s = 0; s < dataset.size(); ++s) {
    Rng stream = rng.stream(s);
    for (int copy = 0; copy < factor; ++copy) {
      demo::SequencePair aug = dataset[s];
      if (copy > 0 && noise_scale > 0.0) {
        for (int r = 0; r < aug.inputs.rows(); ++r) {
          for (int c = 0; c < aug.inputs.cols(); ++c) {
            aug.inputs(r, c) += noise_scale * stream.normal();
          }
        }
      }
      out.push_back(std::move(aug));
    }
  }
  return out;
}

namespace {

struct Adam {
  Eigen::VectorXd m, v;
  double lr;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  int t = 0;

  Adam(std::int64_t n, double lr_in)
      : m(Eigen::VectorXd::Zero(n)), v(Eigen::VectorXd::Zero(n)), lr(lr_in) {}

  void update(Eigen::VectorXd& params, const Eigen::VectorXd& grad) {
    ++t;
    m = beta1 * m + (1.0 - beta1) * grad;
    v = beta2 * v + (1.0 - beta2) * grad.cwiseProduct(grad);
    const double c1 = 1.0 - std::pow(beta1, t);
    const double c2 = 1.0 - std::pow(beta2, t);
    params -= (lr / c1) * m.cwiseQuotient(((v / c2).cwiseSqrt().array() + eps).matrix());
  }
};

// Normalized to [0, 1] and then centered so that a zero network output means
// "middle of the training range".
demo::SequencePair normalize_centered(const NormalizerStats& stats,
                                      const demo::SequencePair& seq) {
  demo::SequencePair out;
  out.episode = seq.episode;
  out.inputs.resize(seq.inputs.rows(), seq.inputs.cols());
  out.targets.resize(seq.targets.rows(), seq.targets.cols());
  for (int r = 0; r < seq.inputs.rows(); ++r) {
    out.inputs.row(r) =
        (stats.apply_input(seq.inputs.row(r).transpose()).array() - 0.5).matrix().transpose();
    out.targets.row(r) =
        (stats.apply_target(seq.targets.row(r).transpose()).array() - 0.5).matrix().transpose();
  }
  return out;
}

struct Window {
  const demo::SequencePair* seq;
  int start;
  int length;
};

}  // namespace

TrainResult train(const std::vector<demo::SequencePair>& dataset, const TrainConfig& cfg) {
  cfg.validate();
  require(!dataset.empty(), "cannot train on an empty dataset");
  const int dims = static_cast<int>(dataset.front().inputs.cols());

  Rng rng(cfg.seed);

  // Split by episode before any augmentation.
  std::vector<std::size_t> order(dataset.size());
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::size_t n_val = 0;
  if (dataset.size() > 1 && cfg.validation_fraction > 0.0) {
    n_val = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::llround(cfg.validation_fraction * dataset.size())));
    n_val = std::min(n_val, dataset.size() - 1);
  }
  std::vector<demo::SequencePair> train_raw, val_raw;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i < n_val) {
      val_raw.push_back(dataset[order[i]]);
    } else {
      train_raw.push_back(dataset[order[i]]);
    }
  }

  TrainResult result;
  result.stats = NormalizerStats::fit(train_raw);

  std::vector<demo::SequencePair> train_norm, val_norm;
  train_norm.reserve(train_raw.size());
  for (const auto& seq : train_raw) train_norm.push_back(normalize_centered(result.stats, seq));
  for (const auto& seq : val_raw) val_norm.push_back(normalize_centered(result.stats, seq));

  const std::vector<demo::SequencePair> train_set =
      augment(train_norm, cfg.augment_factor, cfg.noise_scale, rng.stream(1).next_u64());

  LstmModel model = LstmModel::init(dims, cfg.hidden, cfg.layers, dims, rng);
  Eigen::VectorXd params = model.pack_params();
  Adam adam(params.size(), cfg.learning_rate);

  double best_val = std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_params = params;

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    // Fresh window phase every epoch.
    std::vector<Window> windows;
    for (const auto& seq : train_set) {
      const int total = static_cast<int>(seq.inputs.rows());
      if (total <= cfg.sequence_length) {
        windows.push_back({&seq, 0, total});
        continue;
      }
      const int offset = static_cast<int>(rng.index(total - cfg.sequence_length + 1));
      for (int start = offset; start + cfg.sequence_length <= total;
           start += cfg.sequence_length) {
        windows.push_back({&seq, start, cfg.sequence_length});
      }
    }
    rng.shuffle(windows);

    // Batch equal-length windows together.
    std::map<int, std::vector<Window>> by_length;
    for (const auto& w : windows) by_length[w.length].push_back(w);

    double loss_sum = 0.0;
    double weight_sum = 0.0;
    Eigen::VectorXd grad;
    for (auto& [length, bucket] : by_length) {
      for (std::size_t at = 0; at < bucket.size(); at += cfg.batch_size) {
        const std::size_t batch_end = std::min(at + cfg.batch_size, bucket.size());
        std::vector<Eigen::MatrixXd> xs, ys;
        std::vector<const Eigen::MatrixXd*> xp, yp;
        xs.reserve(batch_end - at);
        ys.reserve(batch_end - at);
        for (std::size_t i = at; i < batch_end; ++i) {
          const Window& w = bucket[i];
          xs.push_back(w.seq->inputs.middleRows(w.start, w.length));
          ys.push_back(w.seq->targets.middleRows(w.start, w.length));
        }
        for (std::size_t i = 0; i < xs.size(); ++i) {
          xp.push_back(&xs[i]);
          yp.push_back(&ys[i]);
        }

        const double loss = loss_and_gradients(model, xp, yp, grad);
        if (!std::isfinite(loss)) {
          throw DivergenceError("training loss became non-finite at epoch " +
                                std::to_string(epoch));
        }
        const double weight = static_cast<double>(length) * xs.size();
        loss_sum += loss * weight;
        weight_sum += weight;

        adam.update(params, grad);
        model.unpack_params(params);
      }
    }
    const double train_mse = weight_sum > 0.0 ? loss_sum / weight_sum : 0.0;

    double val_mse = train_mse;
    if (!val_norm.empty()) {
      double acc = 0.0;
      for (const auto& seq : val_norm) acc += sequence_loss(model, seq.inputs, seq.targets);
      val_mse = acc / static_cast<double>(val_norm.size());
    }
    if (!std::isfinite(val_mse)) {
      throw DivergenceError("validation loss became non-finite at epoch " +
                            std::to_string(epoch));
    }

    result.history.push_back({epoch, train_mse, val_mse});
    if (val_mse < best_val) {
      best_val = val_mse;
      best_params = params;
      result.best_epoch = epoch;
    }
  }

  model.unpack_params(best_params);
  model.reset_state();
  result.model = std::move(model);
  result.best_val = best_val;
  return result;
}

}  // namespace bilat::learn
