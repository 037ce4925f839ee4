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

#ifndef FIGSTORY_DECODING_SAMPLING_H_
#define FIGSTORY_DECODING_SAMPLING_H_

#include <span>
#include <vector>

#include "figstory/common/random.h"
#include "figstory/decoding/language_model.h"

namespace figstory::decoding {

enum class Strategy { kTopK, kNucleus };

struct DecodingConfig {
  Strategy strategy = Strategy::kTopK;
  size_t k = 5;
  double temperature = 0.7;
  double p = 0.9;
  size_t max_tokens = 20;
  // Query the ensemble prompts concurrently within a step.
  bool parallel_prompts = false;

  // Throws InvalidArgument unless k >= 1, 0 < p <= 1, temperature > 0.
  void Validate() const;
};

// Numerically stable softmax.
std::vector<double> Softmax(std::span<const double> logits);

// logits / temperature. Throws InvalidArgument if temperature <= 0.
std::vector<double> ApplyTemperature(std::span<const double> logits,
                                     double temperature);

// Distribution over the k highest logits (ties to the lower id); every other
// token gets exactly zero. Throws InvalidArgument unless 1 <= k <= |V|.
std::vector<double> TopKFilter(std::span<const double> logits, size_t k);

// Smallest prefix of tokens, sorted by probability (ties to the lower id),
// whose mass reaches p, renormalized. Throws unless 0 < p <= 1.
std::vector<double> NucleusFilter(std::span<const double> logits, double p);

// Temperature, then the configured filter.
std::vector<double> FilteredDistribution(std::span<const double> logits,
                                         const DecodingConfig &config);

// Inverse-CDF draw from a normalized distribution.
TokenId SampleToken(std::span<const double> probabilities, Rng &rng);

}  // namespace figstory::decoding

#endif  // FIGSTORY_DECODING_SAMPLING_H_
