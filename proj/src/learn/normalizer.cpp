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

#include "bilat/learn/normalizer.hpp"

#include <limits>

namespace bilat::learn {

NormalizerStats NormalizerStats::fit(const std::vector<demo::SequencePair>& dataset) {
  require(!dataset.empty(), "cannot fit normalizer on an empty dataset");
  const int dims = static_cast<int>(dataset.front().inputs.cols());

  NormalizerStats stats;
  stats.min = Eigen::VectorXd::Constant(2 * dims, std::numeric_limits<double>::infinity());
  stats.max = Eigen::VectorXd::Constant(2 * dims, -std::numeric_limits<double>::infinity());
  for (const auto& seq : dataset) {
    require(seq.inputs.cols() == dims && seq.targets.cols() == dims,
            "inconsistent dataset dims");
    require(seq.inputs.rows() > 0, "cannot fit normalizer on an empty sequence");
    stats.min.head(dims) = stats.min.head(dims).cwiseMin(seq.inputs.colwise().minCoeff().transpose());
    stats.max.head(dims) = stats.max.head(dims).cwiseMax(seq.inputs.colwise().maxCoeff().transpose());
    stats.min.tail(dims) = stats.min.tail(dims).cwiseMin(seq.targets.colwise().minCoeff().transpose());
    stats.max.tail(dims) = stats.max.tail(dims).cwiseMax(seq.targets.colwise().maxCoeff().transpose());
  }
  stats.validate();
  return stats;
}

static double apply_one(double x, double lo, double hi) {
  if (hi == lo) return 0.5;
  return (x - lo) / (hi - lo);
}

Eigen::VectorXd NormalizerStats::apply_input(const Eigen::VectorXd& x) const {
  const int dims = input_dims();
  require(x.size() == dims, "input dim mismatch");
  Eigen::VectorXd out(dims);
  for (int i = 0; i < dims; ++i) out[i] = apply_one(x[i], min[i], max[i]);
  return out;
}

Eigen::VectorXd NormalizerStats::apply_target(const Eigen::VectorXd& y) const {
  const int dims = input_dims();
  require(y.size() == dims, "target dim mismatch");
  Eigen::VectorXd out(dims);
  for (int i = 0; i < dims; ++i) out[i] = apply_one(y[i], min[dims + i], max[dims + i]);
  return out;
}

Eigen::VectorXd NormalizerStats::invert_target(const Eigen::VectorXd& y_hat) const {
  const int dims = input_dims();
  require(y_hat.size() == dims, "target dim mismatch");
  Eigen::VectorXd out(dims);
  for (int i = 0; i < dims; ++i) {
    out[i] = min[dims + i] + y_hat[i] * (max[dims + i] - min[dims + i]);
  }
  return out;
}

std::vector<int> NormalizerStats::degenerate_dims() const {
  std::vector<int> dims;
  for (int i = 0; i < min.size(); ++i) {
    if (max[i] == min[i]) dims.push_back(i);
  }
  return dims;
}

void NormalizerStats::validate() const {
  require(min.size() == max.size() && min.size() > 0, "stats size mismatch");
  require(min.size() % 6 == 0, "stats must cover 2 * 3N dims");
  for (int i = 0; i < min.size(); ++i) {
    require(std::isfinite(min[i]) && std::isfinite(max[i]) && max[i] >= min[i],
            "invalid normalizer range");
  }
}

}  // namespace bilat::learn
