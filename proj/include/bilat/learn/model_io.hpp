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

#include <string>
#include <utility>

#include "bilat/learn/lstm.hpp"
#include "bilat/learn/normalizer.hpp"

namespace bilat::learn {

// Model file layout: a magic+version line, one JSON line describing shapes
// and normalizer stats, then the packed parameters as raw little-endian
// doubles. Self-describing and byte-stable.

void save_model(const std::string& path, const LstmModel& model,
                const NormalizerStats& stats);

std::pair<LstmModel, NormalizerStats> load_model(const std::string& path);

}  // namespace bilat::learn
