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

#include "figstory/scoring/toy_model.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "figstory/common/error.h"
#include "figstory/common/random.h"
#include "figstory/common/text.h"

namespace figstory::scoring {

ToyEncoder::ToyEncoder(size_t dim, size_t buckets, uint64_t seed)
    : dim_(dim), buckets_(buckets), embeddings_(dim * buckets) {
  if (dim == 0 || buckets == 0) {
    throw InvalidArgument("toy encoder needs positive dim and bucket count");
  }
  Rng rng(seed);
  for (double &v : embeddings_) v = 2.0 * UniformUnit(rng) - 1.0;
}

std::vector<size_t> ToyEncoder::Features(
    std::span<const std::string> segments) const {
  std::vector<size_t> features;
  for (const auto &segment : segments) {
    for (const auto &word : SplitWhitespace(segment)) {
      if (word == separator()) continue;
      for (const auto &token : TokenStrings(word)) {
        if (IsPunctuation(token)) continue;
        features.push_back(Fingerprint(ToLower(token)) % buckets_);
      }
    }
  }
  return features;
}

std::vector<double> ToyEncoder::Encode(
    std::span<const std::string> segments) const {
  std::vector<double> pooled(dim_, 0.0);
  const auto features = Features(segments);
  if (features.empty()) return pooled;
  for (size_t f : features) {
    const double *row = &embeddings_[f * dim_];
    for (size_t d = 0; d < dim_; ++d) pooled[d] += row[d];
  }
  const double inv = 1.0 / static_cast<double>(features.size());
  for (double &v : pooled) v *= inv;
  return pooled;
}

ChoiceExample MakeSupervisedExample(const MultipleChoiceInstance &instance) {
  ChoiceExample example;
  example.gold = instance.gold;
  for (const auto &candidate : instance.candidates) {
    example.candidates.push_back({BuildMcInput(instance.narrative, candidate)});
  }
  return example;
}

ChoiceExample MakeContinuationOnlyExample(
    const MultipleChoiceInstance &instance) {
  ChoiceExample example;
  example.gold = instance.gold;
  for (const auto &candidate : instance.candidates) {
    example.candidates.push_back({SegmentList{candidate}});
  }
  return example;
}

ChoiceExample MakeKnowledgeExample(const MultipleChoiceInstance &instance,
                                   const knowledge::InferenceBundle &bundle) {
  if (bundle.inferences.empty()) {
    throw InvalidArgument("empty inference bundle for " + instance.id);
  }
  ChoiceExample example;
  example.gold = instance.gold;
  for (const auto &candidate : instance.candidates) {
    std::vector<SegmentList> inputs;
    inputs.reserve(bundle.inferences.size());
    for (const auto &inference : bundle.inferences) {
      inputs.push_back(
          BuildMcInput(instance.narrative, candidate, inference.verbalized));
    }
    example.candidates.push_back(std::move(inputs));
  }
  return example;
}

double CandidateScore(const Encoder &encoder, const ScoreHead &head,
                      std::span<const SegmentList> inputs) {
  double score = 0.0;
  for (const auto &input : inputs) score += head.Score(encoder.Encode(input));
  return score;
}

size_t PredictChoice(const Encoder &encoder, const ScoreHead &head,
                     const ChoiceExample &example) {
  std::vector<double> scores;
  scores.reserve(example.candidates.size());
  for (const auto &inputs : example.candidates) {
    scores.push_back(CandidateScore(encoder, head, inputs));
  }
  return ChooseIndex(scores);
}

double ChoiceAccuracy(const Encoder &encoder, const ScoreHead &head,
                      std::span<const ChoiceExample> examples) {
  if (examples.empty()) return 0.0;
  size_t correct = 0;
  for (const auto &example : examples) {
    if (PredictChoice(encoder, head, example) == example.gold) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(examples.size());
}

TrainConfig TrainConfig::KnowledgeDefaults(corpus::ExpressionKind kind) {
  TrainConfig config;
  config.batch_size = kind == corpus::ExpressionKind::kIdiom ? 16 : 64;
  return config;
}

void TrainConfig::Validate() const {
  if (epochs <= 0) throw InvalidArgument("epochs must be positive");
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw InvalidArgument("learning rate must be positive");
  }
  if (batch_size == 0) throw InvalidArgument("batch size must be positive");
}

namespace {

struct Gradients {
  std::vector<double> weights;
  double bias = 0.0;
  std::vector<double> embeddings;

  Gradients(size_t dim, size_t table)
      : weights(dim, 0.0), embeddings(table, 0.0) {}

  void Clear() {
    std::fill(weights.begin(), weights.end(), 0.0);
    bias = 0.0;
    std::fill(embeddings.begin(), embeddings.end(), 0.0);
  }
};

struct InputTrace {
  std::vector<size_t> features;
  std::vector<double> pooled;
  std::vector<double> mask;
};

// Forward pass with dropout, then accumulates the gradient of the example's
// cross-entropy loss. Returns the loss.
double AccumulateExample(const ToyEncoder &encoder, const ScoreHead &head,
                         const ChoiceExample &example, Rng &rng,
                         Gradients &grad) {
  const size_t n = example.candidates.size();
  if (example.gold >= n) throw InvalidArgument("gold index out of range");
  std::vector<std::vector<InputTrace>> traces(n);
  std::vector<double> scores(n, 0.0);
  for (size_t c = 0; c < n; ++c) {
    for (const auto &input : example.candidates[c]) {
      InputTrace trace;
      trace.features = encoder.Features(input);
      trace.pooled = encoder.Encode(input);
      scores[c] += head.ScoreTraining(trace.pooled, rng, trace.mask);
      traces[c].push_back(std::move(trace));
    }
  }
  const double max = *std::max_element(scores.begin(), scores.end());
  double sum = 0.0;
  for (double s : scores) sum += std::exp(s - max);
  const double log_z = max + std::log(sum);
  const double loss = log_z - scores[example.gold];

  const size_t dim = encoder.dim();
  const auto &w = head.weights();
  for (size_t c = 0; c < n; ++c) {
    const double g = std::exp(scores[c] - log_z) - (c == example.gold ? 1.0 : 0.0);
    for (const auto &trace : traces[c]) {
      grad.bias += g;
      for (size_t d = 0; d < dim; ++d) {
        grad.weights[d] += g * trace.mask[d] * trace.pooled[d];
      }
      if (trace.features.empty()) continue;
      const double share = g / static_cast<double>(trace.features.size());
      for (size_t f : trace.features) {
        double *row = &grad.embeddings[f * dim];
        for (size_t d = 0; d < dim; ++d) row[d] += share * w[d] * trace.mask[d];
      }
    }
  }
  return loss;
}

void ApplyStep(ToyEncoder &encoder, ScoreHead &head, const Gradients &grad,
               double step) {
  auto &w = head.weights();
  for (size_t d = 0; d < w.size(); ++d) w[d] -= step * grad.weights[d];
  head.bias() -= step * grad.bias;
  auto &table = encoder.embeddings();
  for (size_t i = 0; i < table.size(); ++i) table[i] -= step * grad.embeddings[i];
}

}  // namespace

TrainReport TrainToyModel(ToyEncoder &encoder, ScoreHead &head,
                          std::span<const ChoiceExample> train,
                          std::span<const ChoiceExample> validation,
                          const TrainConfig &config) {
  config.Validate();
  if (train.empty()) throw InvalidArgument("no training examples");
  if (encoder.dim() != head.dim()) {
    throw InvalidArgument("encoder and score head dimensions differ");
  }
  Rng rng(config.seed);
  Gradients grad(encoder.dim(), encoder.embeddings().size());
  std::vector<size_t> order(train.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;

  TrainReport report;
  std::vector<double> best_embeddings = encoder.embeddings();
  std::vector<double> best_weights = head.weights();
  double best_bias = head.bias();

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    for (size_t i = order.size(); i > 1; --i) {
      const auto j = static_cast<size_t>(UniformUnit(rng) * static_cast<double>(i));
      std::swap(order[i - 1], order[std::min(j, i - 1)]);
    }
    double epoch_loss = 0.0;
    for (size_t start = 0; start < order.size(); start += config.batch_size) {
      const size_t end = std::min(order.size(), start + config.batch_size);
      grad.Clear();
      for (size_t k = start; k < end; ++k) {
        epoch_loss += AccumulateExample(encoder, head, train[order[k]], rng, grad);
      }
      ApplyStep(encoder, head, grad,
                config.learning_rate / static_cast<double>(end - start));
    }
    report.train_loss.push_back(epoch_loss / static_cast<double>(train.size()));

    const double accuracy = validation.empty()
                                ? ChoiceAccuracy(encoder, head, train)
                                : ChoiceAccuracy(encoder, head, validation);
    report.validation_accuracy.push_back(accuracy);
    const bool better = validation.empty() || report.best_epoch < 0 ||
                        accuracy > report.best_validation_accuracy;
    if (better) {
      report.best_epoch = epoch;
      report.best_validation_accuracy = accuracy;
      best_embeddings = encoder.embeddings();
      best_weights = head.weights();
      best_bias = head.bias();
    }
  }
  encoder.embeddings() = best_embeddings;
  head.weights() = best_weights;
  head.bias() = best_bias;
  return report;
}

}  // namespace figstory::scoring
