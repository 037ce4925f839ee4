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

#include "figstory/scoring/fewshot_prompt.h"

#include "figstory/common/error.h"
#include "figstory/common/text.h"

namespace figstory::scoring {
namespace {

std::string QuestionLine(const MultipleChoiceInstance &instance) {
  return "Q: " + instance.narrative.Text() + " (1) " + instance.candidates[0] +
         " (2) " + instance.candidates[1] + " A: ";
}

void CheckBudget(const std::string &prompt, const PromptOptions &options) {
  const size_t tokens = CountPromptTokens(prompt);
  if (tokens > options.token_budget) {
    throw InvalidArgument("prompt has " + std::to_string(tokens) +
                          " tokens, over the budget of " +
                          std::to_string(options.token_budget));
  }
}

}  // namespace

size_t CountPromptTokens(std::string_view prompt) {
  return SplitWhitespace(prompt).size();
}

std::string BuildDiscriminativePrompt(
    std::span<const MultipleChoiceInstance> examples,
    const MultipleChoiceInstance &test, const PromptOptions &options) {
  if (examples.size() > kMaxDiscriminativeExamples) {
    throw InvalidArgument("at most " +
                          std::to_string(kMaxDiscriminativeExamples) +
                          " prompting examples, got " +
                          std::to_string(examples.size()));
  }
  std::string prompt;
  for (const auto &example : examples) {
    prompt += QuestionLine(example);
    prompt += "(" + std::to_string(example.gold + 1) + ")\n";
  }
  prompt += QuestionLine(test);
  CheckBudget(prompt, options);
  return prompt;
}

std::string BuildGenerativePrompt(std::span<const GenerativeExample> examples,
                                  std::string_view test_narrative,
                                  const PromptOptions &options) {
  std::string prompt;
  for (const auto &example : examples) {
    prompt += "Q: " + example.narrative + " A: " + example.continuation + "\n";
  }
  prompt += "Q: " + std::string(test_narrative) + " A: ";
  CheckBudget(prompt, options);
  return prompt;
}

}  // namespace figstory::scoring
