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

#include "figstory/evaluation/metrics.h"

#include <algorithm>
#include <cmath>

#include "figstory/common/error.h"
#include "figstory/common/random.h"
#include "figstory/common/text.h"

namespace figstory::evaluation {

double Accuracy(std::span<const size_t> predictions,
                std::span<const size_t> golds) {
  if (predictions.size() != golds.size()) {
    throw InvalidArgument("accuracy: " + std::to_string(predictions.size()) +
                          " predictions for " + std::to_string(golds.size()) +
                          " gold labels");
  }
  if (predictions.empty()) throw InvalidArgument("accuracy: no predictions");
  size_t correct = 0;
  for (size_t i = 0; i < golds.size(); ++i) {
    if (predictions[i] == golds[i]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(golds.size());
}

size_t LcsLength(std::span<const std::string> a,
                 std::span<const std::string> b) {
  std::vector<size_t> prev(b.size() + 1, 0);
  std::vector<size_t> cur(b.size() + 1, 0);
  for (size_t i = 1; i <= a.size(); ++i) {
    for (size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                    : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

double HarmonicMean(double precision, double recall) {
  const double sum = precision + recall;
  return sum > 0.0 ? 2.0 * precision * recall / sum : 0.0;
}

std::vector<std::string> MetricTokens(std::string_view text) {
  std::vector<std::string> tokens;
  for (const auto &token : TokenStrings(text)) {
    if (!IsPunctuation(token)) tokens.push_back(ToLower(token));
  }
  return tokens;
}

namespace {

void RequireTokens(std::span<const std::string> candidate,
                   std::span<const std::string> reference,
                   std::string_view metric) {
  if (candidate.empty() || reference.empty()) {
    throw InvalidArgument(std::string(metric) +
                          ": candidate and reference must be non-empty");
  }
}

}  // namespace

PrfScore RougeL(std::span<const std::string> candidate,
                std::span<const std::string> reference) {
  RequireTokens(candidate, reference, "rouge-l");
  const auto lcs = static_cast<double>(LcsLength(candidate, reference));
  PrfScore score;
  score.precision = lcs / static_cast<double>(candidate.size());
  score.recall = lcs / static_cast<double>(reference.size());
  score.f1 = HarmonicMean(score.precision, score.recall);
  return score;
}

PrfScore RougeL(std::string_view candidate, std::string_view reference) {
  return RougeL(MetricTokens(candidate), MetricTokens(reference));
}

OneHotEmbedder::OneHotEmbedder(std::vector<std::string> vocab)
    : vocab_(std::move(vocab)) {
  for (size_t i = 0; i < vocab_.size(); ++i) {
    if (!index_.emplace(vocab_[i], i).second) {
      throw InvalidArgument("duplicate vocabulary entry '" + vocab_[i] + "'");
    }
  }
}

std::vector<double> OneHotEmbedder::Embed(std::string_view token) const {
  std::vector<double> v(vocab_.size(), 0.0);
  auto it = index_.find(std::string(token));
  if (it != index_.end()) v[it->second] = 1.0;
  return v;
}

HashEmbedder::HashEmbedder(size_t dim, uint64_t salt) : dim_(dim), salt_(salt) {
  if (dim == 0) throw InvalidArgument("embedder dimension must be positive");
}

std::vector<double> HashEmbedder::Embed(std::string_view token) const {
  Rng rng(SplitMix64(Fingerprint(token) ^ salt_));
  std::vector<double> v(dim_);
  double norm = 0.0;
  for (double &x : v) {
    x = 2.0 * UniformUnit(rng) - 1.0;
    norm += x * x;
  }
  norm = std::sqrt(norm);
  if (norm > 0.0) {
    for (double &x : v) x /= norm;
  }
  return v;
}

double Cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw InvalidArgument("cosine of vectors with different dimensions");
  }
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

PrfScore EmbedScore(std::span<const std::string> candidate,
                    std::span<const std::string> reference,
                    const TokenEmbedder &embedder) {
  RequireTokens(candidate, reference, "embed score");
  std::vector<std::vector<double>> cand_vecs, ref_vecs;
  for (const auto &t : candidate) cand_vecs.push_back(embedder.Embed(t));
  for (const auto &t : reference) ref_vecs.push_back(embedder.Embed(t));

  // sim[i][j]: candidate token i against reference token j, floored at 0 so
  // that the score stays in [0, 1].
  std::vector<std::vector<double>> sim(candidate.size(),
                                       std::vector<double>(reference.size()));
  for (size_t i = 0; i < candidate.size(); ++i) {
    for (size_t j = 0; j < reference.size(); ++j) {
      sim[i][j] = candidate[i] == reference[j]
                      ? 1.0
                      : std::max(0.0, Cosine(cand_vecs[i], ref_vecs[j]));
    }
  }
  double precision = 0.0;
  for (size_t i = 0; i < candidate.size(); ++i) {
    precision += *std::max_element(sim[i].begin(), sim[i].end());
  }
  double recall = 0.0;
  for (size_t j = 0; j < reference.size(); ++j) {
    double best = sim[0][j];
    for (size_t i = 1; i < candidate.size(); ++i) best = std::max(best, sim[i][j]);
    recall += best;
  }
  PrfScore score;
  score.precision = precision / static_cast<double>(candidate.size());
  score.recall = recall / static_cast<double>(reference.size());
  score.f1 = HarmonicMean(score.precision, score.recall);
  return score;
}

PrfScore EmbedScore(std::string_view candidate, std::string_view reference,
                    const TokenEmbedder &embedder) {
  return EmbedScore(MetricTokens(candidate), MetricTokens(reference), embedder);
}

}  // namespace figstory::evaluation
