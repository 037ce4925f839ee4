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

#ifndef FIGSTORY_CORPUS_EXPRESSION_MATCHER_H_
#define FIGSTORY_CORPUS_EXPRESSION_MATCHER_H_

#include <string>
#include <unordered_map>
#include <vector>

#include "figstory/common/text.h"
#include "figstory/corpus/lexicon.h"
#include "figstory/corpus/tagger.h"

namespace figstory::corpus {

struct ExpressionMatch {
  size_t entry_index = 0;  // into IdiomLexicon::entries()
  TokenSpan span;

  bool operator==(const ExpressionMatch &other) const = default;
};

// Case-insensitive exact token-sequence matcher. Candidate entries are
// indexed by their first token, so a scan costs one hash lookup per token
// plus the comparisons for entries sharing that first token.
class ExpressionMatcher {
 public:
  // The lexicon must outlive the matcher. Throws InvalidArgument if empty.
  explicit ExpressionMatcher(const IdiomLexicon &lexicon);

  // All matches, overlapping ones included, ordered by start token and then
  // by lexicon order.
  std::vector<ExpressionMatch> Match(const TaggedSentence &sentence) const;

  const IdiomLexicon &lexicon() const { return *lexicon_; }

 private:
  const IdiomLexicon *lexicon_;
  std::unordered_map<std::string, std::vector<size_t>> by_first_token_;
};

std::vector<ExpressionMatch> MatchExpressions(const TaggedSentence &sentence,
                                              const IdiomLexicon &lexicon);

}  // namespace figstory::corpus

#endif  // FIGSTORY_CORPUS_EXPRESSION_MATCHER_H_
