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

#ifndef FIGSTORY_EVALUATION_METRICS_H_
#define FIGSTORY_EVALUATION_METRICS_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace figstory::evaluation {

// Fraction of positions where prediction equals gold. Throws
// InvalidArgument on empty or mismatched inputs.
double Accuracy(std::span<const size_t> predictions,
                std::span<const size_t> golds);

size_t LcsLength(std::span<const std::string> a,
                 std::span<const std::string> b);

struct PrfScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// 2PR / (P + R), or 0 when both are 0.
double HarmonicMean(double precision, double recall);

// Lowercased word tokens with punctuation tokens removed.
std::vector<std::string> MetricTokens(std::string_view text);

// Sentence-level Rouge-L with beta = 1. Throws InvalidArgument if either
// side has no tokens.
PrfScore RougeL(std::string_view candidate, std::string_view reference);
PrfScore RougeL(std::span<const std::string> candidate,
                std::span<const std::string> reference);

class TokenEmbedder {
 public:
  virtual ~TokenEmbedder() = default;
  virtual size_t dim() const = 0;
  virtual std::vector<double> Embed(std::string_view token) const = 0;
};

// Indicator vectors over a fixed vocabulary. Unknown tokens map to the zero
// vector.
class OneHotEmbedder : public TokenEmbedder {
 public:
  explicit OneHotEmbedder(std::vector<std::string> vocab);

  size_t dim() const override { return vocab_.size(); }
  std::vector<double> Embed(std::string_view token) const override;

 private:
  std::vector<std::string> vocab_;
  std::unordered_map<std::string, size_t> index_;
};

// Pseudo-random unit vectors keyed on the token text.
class HashEmbedder : public TokenEmbedder {
 public:
  explicit HashEmbedder(size_t dim, uint64_t salt = 0);

  size_t dim() const override { return dim_; }
  std::vector<double> Embed(std::string_view token) const override;

 private:
  size_t dim_;
  uint64_t salt_;
};

// Cosine similarity; 0 when either vector has zero norm.
double Cosine(std::span<const double> a, std::span<const double> b);

// Greedy matching without idf weighting: recall averages, over reference
// tokens, the best cosine to any candidate token; precision is the mirror
// image. Negative cosines count as 0 and string-identical tokens always
// match with similarity 1. Throws InvalidArgument if either side has no
// tokens.
PrfScore EmbedScore(std::string_view candidate, std::string_view reference,
                    const TokenEmbedder &embedder);
PrfScore EmbedScore(std::span<const std::string> candidate,
                    std::span<const std::string> reference,
                    const TokenEmbedder &embedder);

}  // namespace figstory::evaluation

#endif  // FIGSTORY_EVALUATION_METRICS_H_
