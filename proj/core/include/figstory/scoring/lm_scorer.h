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

#ifndef FIGSTORY_SCORING_LM_SCORER_H_
#define FIGSTORY_SCORING_LM_SCORER_H_

#include <string_view>

#include "figstory/corpus/narrative.h"
#include "figstory/decoding/language_model.h"
#include "figstory/scoring/multiple_choice.h"

namespace figstory::scoring {

enum class LengthNormalization {
  kMean,         // total / n
  kTotal,        // total
  kLengthPower,  // total / n^alpha
};

LengthNormalization ParseLengthNormalization(std::string_view name);

struct LmScoreOptions {
  LengthNormalization normalization = LengthNormalization::kMean;
  double alpha = 1.0;
};

// Normalized log-likelihood of the continuation tokens given the narrative.
// Throws InvalidArgument if the continuation has no tokens.
double LmChoiceScore(const decoding::LanguageModel &lm,
                     std::string_view narrative_text,
                     std::string_view continuation,
                     const LmScoreOptions &options = {});

double LmChoiceScore(const decoding::LanguageModel &lm,
                     const corpus::Narrative &narrative,
                     std::string_view continuation,
                     const LmScoreOptions &options = {});

// Index of the candidate with the higher LmChoiceScore (ties to 0).
size_t ZeroShotChoose(const decoding::LanguageModel &lm,
                      const MultipleChoiceInstance &instance,
                      const LmScoreOptions &options = {});

}  // namespace figstory::scoring

#endif  // FIGSTORY_SCORING_LM_SCORER_H_
