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

#ifndef FIGSTORY_EVALUATION_RUNNER_H_
#define FIGSTORY_EVALUATION_RUNNER_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "figstory/evaluation/metrics.h"
#include "figstory/evaluation/report.h"
#include "figstory/scoring/multiple_choice.h"

namespace figstory::evaluation {

// Anything that assigns one score per candidate.
class ChoiceModel {
 public:
  virtual ~ChoiceModel() = default;
  virtual std::string name() const = 0;
  virtual std::vector<double> Scores(
      const scoring::MultipleChoiceInstance &instance) const = 0;
};

struct EvalOptions {
  bool parallel = false;
};

EvaluationReport RunDiscriminativeEval(
    const ChoiceModel &model,
    std::span<const scoring::MultipleChoiceInstance> instances,
    const EvalOptions &options = {});

struct TextPair {
  std::string instance_id;
  std::string text;
};

// Scores each reference against the generation with the same instance id.
// Missing or empty generations score 0 and add a warning. Rows carry the
// corpus means "rouge_l" and "embed_score".
EvaluationReport RunGenerativeEval(std::string_view model,
                                   std::span<const TextPair> generations,
                                   std::span<const TextPair> references,
                                   const TokenEmbedder &embedder,
                                   const EvalOptions &options = {});

}  // namespace figstory::evaluation

#endif  // FIGSTORY_EVALUATION_RUNNER_H_
