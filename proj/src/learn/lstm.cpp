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

#include "bilat/learn/lstm.hpp"

#include <cmath>

namespace bilat::learn {

namespace {

inline Eigen::ArrayXXd sigmoid(const Eigen::ArrayXXd& x) {
  return 1.0 / (1.0 + (-x).exp());
}

int layer_fan_in(const LstmModel& m, int l) {
  return l == 0 ? m.input_size : m.hidden_size;
}

}  // namespace

LstmModel LstmModel::zeros(int input, int hidden, int num_layers, int output) {
  require(input > 0 && hidden > 0 && num_layers > 0 && output > 0,
          "model sizes must be positive");
  LstmModel m;
  m.input_size = input;
  m.hidden_size = hidden;
  m.output_size = output;
  m.layers.resize(num_layers);
  for (int l = 0; l < num_layers; ++l) {
    const int fan_in = l == 0 ? input : hidden;
    m.layers[l].w_in = Eigen::MatrixXd::Zero(4 * hidden, fan_in);
    m.layers[l].w_rec = Eigen::MatrixXd::Zero(4 * hidden, hidden);
    m.layers[l].bias = Eigen::VectorXd::Zero(4 * hidden);
  }
  m.fc_weight = Eigen::MatrixXd::Zero(output, hidden);
  m.fc_bias = Eigen::VectorXd::Zero(output);
  m.reset_state();
  return m;
}

LstmModel LstmModel::init(int input, int hidden, int num_layers, int output, Rng& rng) {
  LstmModel m = zeros(input, hidden, num_layers, output);
  auto fill = [&rng](Eigen::MatrixXd& w, int fan_in) {
    const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
    for (int c = 0; c < w.cols(); ++c) {
      for (int r = 0; r < w.rows(); ++r) w(r, c) = rng.uniform(-bound, bound);
    }
  };
  for (int l = 0; l < num_layers; ++l) {
    fill(m.layers[l].w_in, layer_fan_in(m, l));
    fill(m.layers[l].w_rec, hidden);
  }
  fill(m.fc_weight, hidden);
  return m;
}

void LstmModel::reset_state() {
  h.assign(layers.size(), Eigen::VectorXd::Zero(hidden_size));
  c.assign(layers.size(), Eigen::VectorXd::Zero(hidden_size));
}

Eigen::VectorXd LstmModel::step(const Eigen::VectorXd& x) {
  require(x.size() == input_size, "input size mismatch");
  const int H = hidden_size;
  Eigen::VectorXd in = x;
  for (int l = 0; l < num_layers(); ++l) {
    const Layer& ly = layers[l];
    const Eigen::VectorXd z = ly.w_in * in + ly.w_rec * h[l] + ly.bias;
    const Eigen::ArrayXd gi = sigmoid(z.segment(0, H).array());
    const Eigen::ArrayXd gf = sigmoid(z.segment(H, H).array());
    const Eigen::ArrayXd gg = z.segment(2 * H, H).array().tanh();
    const Eigen::ArrayXd go = sigmoid(z.segment(3 * H, H).array());
    c[l] = (gf * c[l].array() + gi * gg).matrix();
    h[l] = (go * c[l].array().tanh()).matrix();
    in = h[l];
  }
  return fc_weight * in + fc_bias;
}

Eigen::MatrixXd LstmModel::forward(const Eigen::MatrixXd& x_seq) {
  require(x_seq.cols() == input_size, "input size mismatch");
  Eigen::MatrixXd out(x_seq.rows(), output_size);
  for (int t = 0; t < x_seq.rows(); ++t) {
    out.row(t) = step(x_seq.row(t).transpose()).transpose();
  }
  return out;
}

std::int64_t LstmModel::param_count() const {
  std::int64_t n = 0;
  for (const auto& ly : layers) {
    n += ly.w_in.size() + ly.w_rec.size() + ly.bias.size();
  }
  return n + fc_weight.size() + fc_bias.size();
}

Eigen::VectorXd LstmModel::pack_params() const {
  Eigen::VectorXd flat(param_count());
  std::int64_t at = 0;
  auto put = [&flat, &at](const Eigen::MatrixXd& m) {
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) flat[at++] = m(r, c);
    }
  };
  for (const auto& ly : layers) {
    put(ly.w_in);
    put(ly.w_rec);
    put(ly.bias);
  }
  put(fc_weight);
  put(fc_bias);
  return flat;
}

void LstmModel::unpack_params(const Eigen::VectorXd& flat) {
  require(flat.size() == param_count(), "parameter vector size mismatch");
  std::int64_t at = 0;
  auto get = [&flat, &at](Eigen::MatrixXd& m) {
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) m(r, c) = flat[at++];
    }
  };
  for (auto& ly : layers) {
    get(ly.w_in);
    get(ly.w_rec);
    Eigen::MatrixXd b = ly.bias;
    get(b);
    ly.bias = b;
  }
  get(fc_weight);
  Eigen::MatrixXd b = fc_bias;
  get(b);
  fc_bias = b;
}

bool LstmModel::params_finite() const {
  for (const auto& ly : layers) {
    if (!ly.w_in.allFinite() || !ly.w_rec.allFinite() || !ly.bias.allFinite()) return false;
  }
  return fc_weight.allFinite() && fc_bias.allFinite();
}

void LstmModel::validate() const {
  require(input_size > 0 && hidden_size > 0 && output_size > 0 && !layers.empty(),
          "model sizes must be positive");
  for (int l = 0; l < num_layers(); ++l) {
    const auto& ly = layers[l];
    require(ly.w_in.rows() == 4 * hidden_size && ly.w_in.cols() == layer_fan_in(*this, l),
            "layer input weight shape mismatch");
    require(ly.w_rec.rows() == 4 * hidden_size && ly.w_rec.cols() == hidden_size,
            "layer recurrent weight shape mismatch");
    require(ly.bias.size() == 4 * hidden_size, "layer bias shape mismatch");
  }
  require(fc_weight.rows() == output_size && fc_weight.cols() == hidden_size,
          "readout shape mismatch");
  require(fc_bias.size() == output_size, "readout bias shape mismatch");
  require(params_finite(), "model parameters must be finite");
}

namespace {

// Per-(t, layer) quantities kept for the backward pass.
struct StepCache {
  Eigen::ArrayXXd gi, gf, gg, go;  // H x B
  Eigen::ArrayXXd c;               // H x B
  Eigen::ArrayXXd h;               // H x B
};

struct LayerGrads {
  Eigen::MatrixXd w_in, w_rec;
  Eigen::VectorXd bias;
};

}  // namespace

double loss_and_gradients(const LstmModel& model,
                          const std::vector<const Eigen::MatrixXd*>& inputs,
                          const std::vector<const Eigen::MatrixXd*>& targets,
                          Eigen::VectorXd& grad) {
  require(!inputs.empty() && inputs.size() == targets.size(), "empty or mismatched batch");
  const int B = static_cast<int>(inputs.size());
  const int T = static_cast<int>(inputs[0]->rows());
  const int H = model.hidden_size;
  const int L = model.num_layers();
  require(T > 0, "empty sequence in batch");
  for (int b = 0; b < B; ++b) {
    require(inputs[b]->rows() == T && targets[b]->rows() == T,
            "sequences in a batch must have equal length");
    require(inputs[b]->cols() == model.input_size &&
                targets[b]->cols() == model.output_size,
            "batch dim mismatch");
  }

  // Stack the batch: X[t] is input_size x B.
  std::vector<Eigen::MatrixXd> x(T), y(T);
  for (int t = 0; t < T; ++t) {
    x[t].resize(model.input_size, B);
    y[t].resize(model.output_size, B);
    for (int b = 0; b < B; ++b) {
      x[t].col(b) = inputs[b]->row(t).transpose();
      y[t].col(b) = targets[b]->row(t).transpose();
    }
  }

  // Forward with caches; windows start from rest.
  std::vector<std::vector<StepCache>> cache(T, std::vector<StepCache>(L));
  std::vector<Eigen::MatrixXd> y_hat(T);
  Eigen::MatrixXd zeros = Eigen::MatrixXd::Zero(H, B);

  double loss = 0.0;
  const double norm = 1.0 / (static_cast<double>(T) * B * model.output_size);
  for (int t = 0; t < T; ++t) {
    Eigen::MatrixXd in = x[t];
    for (int l = 0; l < L; ++l) {
      const auto& ly = model.layers[l];
      const Eigen::MatrixXd& h_prev = t == 0 ? zeros : cache[t - 1][l].h.matrix();
      const Eigen::MatrixXd& c_prev = t == 0 ? zeros : cache[t - 1][l].c.matrix();
      Eigen::MatrixXd z = ly.w_in * in + ly.w_rec * h_prev;
      z.colwise() += ly.bias;

      StepCache& sc = cache[t][l];
      sc.gi = sigmoid(z.topRows(H).array());
      sc.gf = sigmoid(z.middleRows(H, H).array());
      sc.gg = z.middleRows(2 * H, H).array().tanh();
      sc.go = sigmoid(z.bottomRows(H).array());
      sc.c = sc.gf * c_prev.array() + sc.gi * sc.gg;
      sc.h = sc.go * sc.c.tanh();
      in = sc.h.matrix();
    }
    y_hat[t] = model.fc_weight * in;
    y_hat[t].colwise() += model.fc_bias;
    loss += (y_hat[t] - y[t]).squaredNorm();
  }
  loss *= norm;

  // Backward through time.
  std::vector<LayerGrads> lg(L);
  for (int l = 0; l < L; ++l) {
    lg[l].w_in = Eigen::MatrixXd::Zero(4 * H, l == 0 ? model.input_size : H);
    lg[l].w_rec = Eigen::MatrixXd::Zero(4 * H, H);
    lg[l].bias = Eigen::VectorXd::Zero(4 * H);
  }
  Eigen::MatrixXd d_fc_w = Eigen::MatrixXd::Zero(model.output_size, H);
  Eigen::VectorXd d_fc_b = Eigen::VectorXd::Zero(model.output_size);

  std::vector<Eigen::MatrixXd> dh_time(L, zeros), dc_time(L, zeros);
  for (int t = T - 1; t >= 0; --t) {
    const Eigen::MatrixXd dy = 2.0 * norm * (y_hat[t] - y[t]);
    d_fc_w += dy * cache[t][L - 1].h.matrix().transpose();
    d_fc_b += dy.rowwise().sum();

    Eigen::MatrixXd d_from_above = model.fc_weight.transpose() * dy;
    for (int l = L - 1; l >= 0; --l) {
      const StepCache& sc = cache[t][l];
      const Eigen::MatrixXd& h_prev = t == 0 ? zeros : cache[t - 1][l].h.matrix();
      const Eigen::ArrayXXd c_prev =
          t == 0 ? zeros.array() : cache[t - 1][l].c;
      const Eigen::MatrixXd& x_in = l == 0 ? x[t] : cache[t][l - 1].h.matrix();

      const Eigen::ArrayXXd dh = dh_time[l].array() + d_from_above.array();
      const Eigen::ArrayXXd tanh_c = sc.c.tanh();
      const Eigen::ArrayXXd dc = dc_time[l].array() + dh * sc.go * (1.0 - tanh_c.square());

      const Eigen::ArrayXXd d_zi = (dc * sc.gg) * sc.gi * (1.0 - sc.gi);
      const Eigen::ArrayXXd d_zf = (dc * c_prev) * sc.gf * (1.0 - sc.gf);
      const Eigen::ArrayXXd d_zg = (dc * sc.gi) * (1.0 - sc.gg.square());
      const Eigen::ArrayXXd d_zo = (dh * tanh_c) * sc.go * (1.0 - sc.go);

      Eigen::MatrixXd dz(4 * H, B);
      dz.topRows(H) = d_zi.matrix();
      dz.middleRows(H, H) = d_zf.matrix();
      dz.middleRows(2 * H, H) = d_zg.matrix();
      dz.bottomRows(H) = d_zo.matrix();

      lg[l].w_in += dz * x_in.transpose();
      lg[l].w_rec += dz * h_prev.transpose();
      lg[l].bias += dz.rowwise().sum();

      dh_time[l] = model.layers[l].w_rec.transpose() * dz;
      dc_time[l] = (dc * sc.gf).matrix();
      d_from_above = model.layers[l].w_in.transpose() * dz;
    }
  }

  // Pack gradients in parameter order.
  grad.resize(model.param_count());
  std::int64_t at = 0;
  auto put = [&grad, &at](const Eigen::MatrixXd& m) {
    for (int r = 0; r < m.rows(); ++r) {
      for (int col = 0; col < m.cols(); ++col) grad[at++] = m(r, col);
    }
  };
  for (int l = 0; l < L; ++l) {
    put(lg[l].w_in);
    put(lg[l].w_rec);
    put(lg[l].bias);
  }
  put(d_fc_w);
  put(d_fc_b);
  return loss;
}

double sequence_loss(const LstmModel& model, const Eigen::MatrixXd& inputs,
                     const Eigen::MatrixXd& targets) {
  require(inputs.rows() == targets.rows() && inputs.rows() > 0, "sequence size mismatch");
  LstmModel scratch = model;
  scratch.reset_state();
  const Eigen::MatrixXd y_hat = scratch.forward(inputs);
  return (y_hat - targets).squaredNorm() /
         (static_cast<double>(targets.rows()) * targets.cols());
}

}  // namespace bilat::learn
