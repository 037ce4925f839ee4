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

#include "figstory/scoring/lm_scorer.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "figstory/common/error.h"

namespace figstory::scoring {
namespace {

double LogSoftmaxAt(const std::vector<double> &logits, size_t index) {
  const double max = *std::max_element(logits.begin(), logits.end());
  double sum = 0.0;
  for (double z : logits) sum += std::exp(z - max);
  return logits[index] - max - std::log(sum);
}

}  // namespace

LengthNormalization ParseLengthNormalization(std::string_view name) {
  if (name == "mean") return LengthNormalization::kMean;
  if (name == "total") return LengthNormalization::kTotal;
  if (name == "length_power") return LengthNormalization::kLengthPower;
  throw InvalidArgument("unknown length normalization '" + std::string(name) +
                        "'");
}

double LmChoiceScore(const decoding::LanguageModel &lm,
                     std::string_view narrative_text,
                     std::string_view continuation,
                     const LmScoreOptions &options) {
  const auto continuation_tokens = lm.Tokenize(continuation);
  if (continuation_tokens.empty()) {
    throw InvalidArgument("continuation has no tokens");
  }
  auto context = lm.Tokenize(narrative_text);
  double total = 0.0;
  for (decoding::TokenId token : continuation_tokens) {
    const auto logits = lm.NextLogits(context);
    if (logits.size() != lm.vocab_size()) {
      throw Error("language model returned a logit vector of wrong size");
    }
    total += LogSoftmaxAt(logits, static_cast<size_t>(token));
    context.push_back(token);
  }
  const auto n = static_cast<double>(continuation_tokens.size());
  switch (options.normalization) {
    case LengthNormalization::kMean:
      return total / n;
    case LengthNormalization::kTotal:
      return total;
    case LengthNormalization::kLengthPower:
      return total / std::pow(n, options.alpha);
  }
  return total / n;
}

double LmChoiceScore(const decoding::LanguageModel &lm,
                     const corpus::Narrative &narrative,
                     std::string_view continuation,
                     const LmScoreOptions &options) {
  return LmChoiceScore(lm, narrative.Text(), continuation, options);
}

size_t ZeroShotChoose(const decoding::LanguageModel &lm,
                      const MultipleChoiceInstance &instance,
                      const LmScoreOptions &options) {
  const std::string text = instance.narrative.Text();
  const double scores[2] = {
      LmChoiceScore(lm, text, instance.candidates[0], options),
      LmChoiceScore(lm, text, instance.candidates[1], options)};
  return ChooseIndex(scores);
}

}  // namespace figstory::scoring
