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

#ifndef FIGSTORY_SCORING_SCORE_HEAD_H_
#define FIGSTORY_SCORING_SCORE_HEAD_H_

#include <span>
#include <vector>

#include "figstory/common/random.h"

namespace figstory::scoring {

inline constexpr double kDefaultDropout = 0.1;

// Dropout followed by a linear map to one score. Dropout is applied only by
// ScoreTraining.
class ScoreHead {
 public:
  explicit ScoreHead(size_t dim, double dropout_rate = kDefaultDropout);

  // Weights drawn uniformly from [-scale, scale].
  static ScoreHead Random(size_t dim, Rng &rng, double scale = 0.1,
                          double dropout_rate = kDefaultDropout);

  size_t dim() const { return weights_.size(); }
  double dropout_rate() const { return dropout_rate_; }

  std::vector<double> &weights() { return weights_; }
  const std::vector<double> &weights() const { return weights_; }
  double &bias() { return bias_; }
  double bias() const { return bias_; }

  // Evaluation mode. Throws InvalidArgument on a dimension mismatch.
  double Score(std::span<const double> pooled) const;

  // Training mode: draws an inverted-dropout mask (kept units scaled by
  // 1 / (1 - rate)), stores it in `mask`, and scores the masked vector.
  double ScoreTraining(std::span<const double> pooled, Rng &rng,
                       std::vector<double> &mask) const;

 private:
  void CheckDim(size_t n) const;

  std::vector<double> weights_;
  double bias_ = 0.0;
  double dropout_rate_;
};

}  // namespace figstory::scoring

#endif  // FIGSTORY_SCORING_SCORE_HEAD_H_
