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

#ifndef FIGSTORY_CORPUS_NARRATIVE_H_
#define FIGSTORY_CORPUS_NARRATIVE_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "figstory/common/text.h"

namespace figstory::corpus {

enum class ExpressionKind { kIdiom, kSimile };

std::string_view ExpressionKindName(ExpressionKind kind);
ExpressionKind ParseExpressionKind(std::string_view name);

inline constexpr size_t kDefaultWindow = 4;

struct Narrative {
  // Sentences preceding the final one, in source order.
  std::vector<std::string> context_sentences;
  // The sentence carrying the figurative expression.
  std::string final_sentence;
  ExpressionKind kind = ExpressionKind::kIdiom;
  // Surface text of the expression and its byte range in final_sentence.
  std::string expression;
  CharSpan expression_span;
  // Idiom definition, or the property removed from the simile.
  std::string gloss;

  // Context sentences followed by the final sentence, space separated.
  std::string Text() const;
  // Context sentences only.
  std::string ContextText() const;
  size_t WordCount() const;
};

// Returns the `window` sentences before `index` plus the sentence at `index`,
// or nullopt when fewer than `window` sentences precede it. The expression
// fields are left for the caller. Throws InvalidArgument if `index` is out
// of range.
std::optional<Narrative> BuildNarrative(
    std::span<const std::string> doc_sentences, size_t index,
    size_t window = kDefaultWindow);

}  // namespace figstory::corpus

#endif  // FIGSTORY_CORPUS_NARRATIVE_H_
