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

#ifndef FIGSTORY_SCORING_TOY_MODEL_H_
#define FIGSTORY_SCORING_TOY_MODEL_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "figstory/corpus/narrative.h"
#include "figstory/knowledge/inference.h"
#include "figstory/scoring/encoder.h"
#include "figstory/scoring/multiple_choice.h"
#include "figstory/scoring/score_head.h"

namespace figstory::scoring {

// Bag-of-tokens encoder: the mean of hashed token embeddings over all
// segments (lowercased words; punctuation and the separator are ignored).
class ToyEncoder : public Encoder {
 public:
  ToyEncoder(size_t dim, size_t buckets, uint64_t seed);

  size_t dim() const override { return dim_; }
  std::vector<double> Encode(
      std::span<const std::string> segments) const override;

  // Embedding row index of every token occurrence.
  std::vector<size_t> Features(std::span<const std::string> segments) const;

  size_t buckets() const { return buckets_; }
  std::vector<double> &embeddings() { return embeddings_; }
  const std::vector<double> &embeddings() const { return embeddings_; }

 private:
  size_t dim_;
  size_t buckets_;
  std::vector<double> embeddings_;  // buckets x dim, row-major
};

// A candidate's score is the sum of head(encoder(x)) over its inputs: one
// input for plain and continuation-only models, K for knowledge models.
struct ChoiceExample {
  std::vector<std::vector<SegmentList>> candidates;
  size_t gold = 0;
};

ChoiceExample MakeSupervisedExample(const MultipleChoiceInstance &instance);
ChoiceExample MakeContinuationOnlyExample(
    const MultipleChoiceInstance &instance);
ChoiceExample MakeKnowledgeExample(const MultipleChoiceInstance &instance,
                                   const knowledge::InferenceBundle &bundle);

double CandidateScore(const Encoder &encoder, const ScoreHead &head,
                      std::span<const SegmentList> inputs);
size_t PredictChoice(const Encoder &encoder, const ScoreHead &head,
                     const ChoiceExample &example);
double ChoiceAccuracy(const Encoder &encoder, const ScoreHead &head,
                      std::span<const ChoiceExample> examples);

struct TrainConfig {
  int epochs = 10;
  double learning_rate = 1e-5;
  size_t batch_size = 8;
  uint64_t seed = 0;

  // Knowledge models keep the same schedule with a larger effective batch.
  static TrainConfig KnowledgeDefaults(corpus::ExpressionKind kind);

  void Validate() const;
};

struct TrainReport {
  std::vector<double> train_loss;
  std::vector<double> validation_accuracy;
  int best_epoch = -1;
  double best_validation_accuracy = 0.0;
};

// Minibatch SGD on softmax cross-entropy over each example's candidate
// scores. Dropout masks are drawn independently per input. After training,
// the parameters of the epoch with the best validation accuracy are
// restored (the last epoch when `validation` is empty).
TrainReport TrainToyModel(ToyEncoder &encoder, ScoreHead &head,
                          std::span<const ChoiceExample> train,
                          std::span<const ChoiceExample> validation,
                          const TrainConfig &config);

}  // namespace figstory::scoring

#endif  // FIGSTORY_SCORING_TOY_MODEL_H_
