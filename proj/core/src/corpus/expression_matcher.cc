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

#include "figstory/corpus/expression_matcher.h"

#include <algorithm>

#include "figstory/common/error.h"

namespace figstory::corpus {

ExpressionMatcher::ExpressionMatcher(const IdiomLexicon &lexicon)
    : lexicon_(&lexicon) {
  if (lexicon.empty()) throw InvalidArgument("idiom lexicon is empty");
  for (size_t i = 0; i < lexicon.size(); ++i) {
    by_first_token_[lexicon.entry(i).expression.front()].push_back(i);
  }
}

std::vector<ExpressionMatch> ExpressionMatcher::Match(
    const TaggedSentence &sentence) const {
  std::vector<ExpressionMatch> matches;
  const auto &words = sentence.lowered;
  for (size_t start = 0; start < words.size(); ++start) {
    auto it = by_first_token_.find(words[start]);
    if (it == by_first_token_.end()) continue;
    // Entry indices are stored in lexicon order, so matches at one start
    // position come out in lexicon order.
    for (size_t index : it->second) {
      const auto &expression = lexicon_->entry(index).expression;
      if (start + expression.size() > words.size()) continue;
      if (std::equal(expression.begin(), expression.end(),
                     words.begin() + static_cast<std::ptrdiff_t>(start))) {
        matches.push_back({index, {start, start + expression.size()}});
      }
    }
  }
  return matches;
}

std::vector<ExpressionMatch> MatchExpressions(const TaggedSentence &sentence,
                                              const IdiomLexicon &lexicon) {
  return ExpressionMatcher(lexicon).Match(sentence);
}

}  // namespace figstory::corpus
