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

#include "figstory/decoding/sampling.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "figstory/common/error.h"

namespace figstory::decoding {
namespace {

// Token ids ordered by descending value, ties to the lower id.
std::vector<size_t> RankDescending(std::span<const double> values) {
  std::vector<size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return values[a] > values[b] || (values[a] == values[b] && a < b);
  });
  return order;
}

// Slack for comparing cumulative mass with p: 0.6 + 0.3 < 0.9 in doubles.
constexpr double kMassSlack = 1e-12;

}  // namespace

void DecodingConfig::Validate() const {
  if (k < 1) throw InvalidArgument("top-k requires k >= 1");
  if (!(p > 0.0 && p <= 1.0)) throw InvalidArgument("nucleus p must be in (0, 1]");
  if (!(temperature > 0.0)) throw InvalidArgument("temperature must be > 0");
  if (max_tokens == 0) throw InvalidArgument("max_tokens must be positive");
}

std::vector<double> Softmax(std::span<const double> logits) {
  std::vector<double> probs(logits.size());
  if (logits.empty()) return probs;
  const double max = *std::max_element(logits.begin(), logits.end());
  double sum = 0.0;
  for (size_t i = 0; i < logits.size(); ++i) {
    probs[i] = std::exp(logits[i] - max);
    sum += probs[i];
  }
  for (double &p : probs) p /= sum;
  return probs;
}

std::vector<double> ApplyTemperature(std::span<const double> logits,
                                     double temperature) {
  if (!(temperature > 0.0)) throw InvalidArgument("temperature must be > 0");
  std::vector<double> out(logits.begin(), logits.end());
  for (double &z : out) z /= temperature;
  return out;
}

std::vector<double> TopKFilter(std::span<const double> logits, size_t k) {
  if (k < 1 || k > logits.size()) {
    throw InvalidArgument("top-k requires 1 <= k <= |V| (k=" +
                          std::to_string(k) + ", |V|=" +
                          std::to_string(logits.size()) + ")");
  }
  // Highest k logits, ties broken by lower index.
  std::vector<size_t> order(logits.size());
  std::iota(order.begin(), order.end(), 0);
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k),
                    order.end(), [&](size_t a, size_t b) {
                      return logits[a] > logits[b] ||
                             (logits[a] == logits[b] && a < b);
                    });
  std::vector<double> kept(k);
  for (size_t i = 0; i < k; ++i) kept[i] = logits[order[i]];
  const auto kept_probs = Softmax(kept);
  std::vector<double> probs(logits.size(), 0.0);
  for (size_t i = 0; i < k; ++i) probs[order[i]] = kept_probs[i];
  return probs;
}

std::vector<double> NucleusFilter(std::span<const double> logits, double p) {
  if (!(p > 0.0 && p <= 1.0)) throw InvalidArgument("nucleus p must be in (0, 1]");
  const auto full = Softmax(logits);
  const auto order = RankDescending(full);
  double mass = 0.0;
  size_t keep = 0;
  while (keep < order.size()) {
    mass += full[order[keep]];
    ++keep;
    if (mass >= p - kMassSlack) break;
  }
  std::vector<double> probs(logits.size(), 0.0);
  for (size_t i = 0; i < keep; ++i) probs[order[i]] = full[order[i]] / mass;
  return probs;
}

std::vector<double> FilteredDistribution(std::span<const double> logits,
                                         const DecodingConfig &config) {
  const auto scaled = ApplyTemperature(logits, config.temperature);
  if (config.strategy == Strategy::kTopK) {
    return TopKFilter(scaled, std::min(config.k, scaled.size()));
  }
  return NucleusFilter(scaled, config.p);
}

TokenId SampleToken(std::span<const double> probabilities, Rng &rng) {
  if (probabilities.empty()) throw InvalidArgument("empty distribution");
  const double u = UniformUnit(rng);
  double cumulative = 0.0;
  size_t last_nonzero = 0;
  for (size_t i = 0; i < probabilities.size(); ++i) {
    if (probabilities[i] <= 0.0) continue;
    last_nonzero = i;
    cumulative += probabilities[i];
    if (u < cumulative) return static_cast<TokenId>(i);
  }
  return static_cast<TokenId>(last_nonzero);
}

}  // namespace figstory::decoding
