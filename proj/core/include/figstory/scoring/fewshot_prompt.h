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

#ifndef FIGSTORY_SCORING_FEWSHOT_PROMPT_H_
#define FIGSTORY_SCORING_FEWSHOT_PROMPT_H_

#include <span>
#include <string>
#include <string_view>

#include "figstory/scoring/multiple_choice.h"

namespace figstory::scoring {

inline constexpr size_t kMaxDiscriminativeExamples = 6;
inline constexpr size_t kDefaultGenerativeExamples = 4;
inline constexpr size_t kDefaultTokenBudget = 2048;

struct PromptOptions {
  // Whitespace-token budget for the whole prompt.
  size_t token_budget = kDefaultTokenBudget;
};

size_t CountPromptTokens(std::string_view prompt);

// One line per example, "Q: N (1) C1 (2) C2 A: (g)", then the test line
// ending in "A: ". At most six examples. Throws InvalidArgument on too many
// examples or when the budget is exceeded.
std::string BuildDiscriminativePrompt(
    std::span<const MultipleChoiceInstance> examples,
    const MultipleChoiceInstance &test, const PromptOptions &options = {});

struct GenerativeExample {
  std::string narrative;
  std::string continuation;
};

// "Q: N A: C" per example, then "Q: N A: " for the test narrative.
std::string BuildGenerativePrompt(std::span<const GenerativeExample> examples,
                                  std::string_view test_narrative,
                                  const PromptOptions &options = {});

}  // namespace figstory::scoring

#endif  // FIGSTORY_SCORING_FEWSHOT_PROMPT_H_
