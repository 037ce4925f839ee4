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

#include "figstory/corpus/narrative.h"

#include "figstory/common/error.h"

namespace figstory::corpus {

std::string_view ExpressionKindName(ExpressionKind kind) {
  return kind == ExpressionKind::kIdiom ? "idiom" : "simile";
}

ExpressionKind ParseExpressionKind(std::string_view name) {
  if (name == "idiom") return ExpressionKind::kIdiom;
  if (name == "simile") return ExpressionKind::kSimile;
  throw InvalidArgument("unknown expression kind '" + std::string(name) + "'");
}

std::string Narrative::ContextText() const {
  return Join(context_sentences, " ");
}

std::string Narrative::Text() const {
  if (context_sentences.empty()) return final_sentence;
  return ContextText() + " " + final_sentence;
}

size_t Narrative::WordCount() const { return CountWords(Text()); }

std::optional<Narrative> BuildNarrative(
    std::span<const std::string> doc_sentences, size_t index, size_t window) {
  if (index >= doc_sentences.size()) {
    throw InvalidArgument("sentence index " + std::to_string(index) +
                          " outside document of " +
                          std::to_string(doc_sentences.size()) + " sentences");
  }
  if (index < window) return std::nullopt;
  Narrative narrative;
  narrative.context_sentences.assign(doc_sentences.begin() + (index - window),
                                     doc_sentences.begin() + index);
  narrative.final_sentence = doc_sentences[index];
  return narrative;
}

}  // namespace figstory::corpus
