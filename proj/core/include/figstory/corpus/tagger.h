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

#ifndef FIGSTORY_CORPUS_TAGGER_H_
#define FIGSTORY_CORPUS_TAGGER_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "figstory/common/text.h"

namespace figstory::corpus {

// Coarse part-of-speech inventory; everything that is not needed by the
// simile patterns (verbs, prepositions, numbers, punctuation) is kOther.
enum class PosTag { kNoun, kAdj, kAdv, kPron, kDet, kOther };

std::string_view PosTagName(PosTag tag);

class Tagger {
 public:
  virtual ~Tagger() = default;

  // Returns exactly one tag per token.
  virtual std::vector<PosTag> Tag(std::span<const std::string> tokens) const = 0;
};

// Closed-class word lists plus suffix rules. Unknown words default to nouns,
// which is the safe choice for vehicle detection: a vehicle head that is
// really a verb usually ends in -ed/-ing or sits in the verb list.
class LexiconTagger : public Tagger {
 public:
  std::vector<PosTag> Tag(std::span<const std::string> tokens) const override;

  PosTag TagWord(std::string_view word) const;
};

bool IsPreposition(std::string_view lowercase_word);

struct TaggedSentence {
  std::string text;
  std::vector<Token> tokens;
  // Lowercased token strings, parallel to `tokens`.
  std::vector<std::string> lowered;
  std::vector<PosTag> tags;

  size_t size() const { return tokens.size(); }
};

TaggedSentence TagSentence(std::string_view text, const Tagger &tagger);

}  // namespace figstory::corpus

#endif  // FIGSTORY_CORPUS_TAGGER_H_
