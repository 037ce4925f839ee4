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

#ifndef FIGSTORY_CORPUS_SIMILE_H_
#define FIGSTORY_CORPUS_SIMILE_H_

#include <optional>
#include <string>
#include <string_view>

#include "figstory/common/text.h"
#include "figstory/corpus/tagger.h"

namespace figstory::corpus {

enum class Comparator { kLike, kAsAs };

// Commas, semicolons, colons, terminators, brackets, quotes and dashes.
bool IsClauseBoundary(std::string_view token);

std::string_view ComparatorName(Comparator comparator);

// Token spans index into the TaggedSentence the simile was detected in.
struct ExplicitSimile {
  // Nearest noun phrase before the pattern in the same clause; empty when
  // the pattern opens its clause.
  TokenSpan topic;
  TokenSpan property;
  Comparator comparator = Comparator::kLike;
  // Index of "like", or of the second "as".
  size_t comparator_index = 0;
  // From the token after the comparator to the end of the clause.
  TokenSpan vehicle;

  // First token removed by the explicit-to-implicit rewrite.
  size_t pattern_begin() const {
    return comparator == Comparator::kAsAs ? property.begin - 1
                                           : property.begin;
  }
};

// Looks for "as ADJ/ADV as V" and "ADJ/ADV[,] like V" where V is a noun
// phrase: the last token before the first preposition in V is tagged NOUN
// and V is not a lone pronoun. Returns the leftmost match.
std::optional<ExplicitSimile> DetectExplicitSimile(
    const TaggedSentence &sentence);

struct ImplicitSimile {
  std::string sentence;
  // "like ..." through the end of the vehicle, inside `sentence`.
  CharSpan expression;
  // The removed property, e.g. "calm".
  std::string property;
};

// Drops the property and rewrites the comparator to "like":
//   "as calm as V" / "calm, like V" / "calm like V"  ->  "like V".
// Throws InvalidArgument if the sentence does not carry the simile's
// property/comparator tokens (e.g. it is already implicit) or if nothing but
// punctuation precedes the pattern.
ImplicitSimile ToImplicit(const ExplicitSimile &simile,
                          const TaggedSentence &sentence);

}  // namespace figstory::corpus

#endif  // FIGSTORY_CORPUS_SIMILE_H_
