// Copyright 2026 The Figstory Authors.
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

#include "figstory/scoring/score_head.h"

#include <string>

#include "figstory/common/error.h"

namespace figstory::scoring {

ScoreHead::ScoreHead(size_t dim, double dropout_rate)
    : weights_(dim, 0.0), dropout_rate_(dropout_rate) {
  if (dim == 0) throw InvalidArgument("score head dimension must be positive");
  if (!(dropout_rate >= 0.0 && dropout_rate < 1.0)) {
    throw InvalidArgument("dropout rate must be in [0, 1)");
  }
}

ScoreHead ScoreHead::Random(size_t dim, Rng &rng, double scale,
                            double dropout_rate) {
  ScoreHead head(dim, dropout_rate);
  for (double &w : head.weights_) w = scale * (2.0 * UniformUnit(rng) - 1.0);
  return head;
}

void ScoreHead::CheckDim(size_t n) const {
  if (n != weights_.size()) {
    throw InvalidArgument("encoder dimension " + std::to_string(n) +
                          " does not match score head dimension " +
                          std::to_string(weights_.size()));
  }
}

double ScoreHead::Score(std::span<const double> pooled) const {
  CheckDim(pooled.size());
  double score = bias_;
  for (size_t i = 0; i < pooled.size(); ++i) score += weights_[i] * pooled[i];
  return score;
}

double ScoreHead::ScoreTraining(std::span<const double> pooled, Rng &rng,
                                std::vector<double> &mask) const {
  CheckDim(pooled.size());
  mask.assign(pooled.size(), 0.0);
  const double keep_scale = 1.0 / (1.0 - dropout_rate_);
  double score = bias_;
  for (size_t i = 0; i < pooled.size(); ++i) {
    if (UniformUnit(rng) >= dropout_rate_) mask[i] = keep_scale;
    score += weights_[i] * pooled[i] * mask[i];
  }
  return score;
}

}  // namespace figstory::scoring
