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

#ifndef FIGSTORY_CORPUS_NARRATIVE_MINER_H_
#define FIGSTORY_CORPUS_NARRATIVE_MINER_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "figstory/corpus/dataset.h"
#include "figstory/corpus/expression_matcher.h"
#include "figstory/corpus/narrative.h"
#include "figstory/corpus/tagger.h"

namespace figstory::corpus {

struct MinerOptions {
  ExpressionKind kind = ExpressionKind::kIdiom;
  size_t window = kDefaultWindow;
};

// Turns documents into benchmark instances (without continuations or split).
// Idioms: every lexicon match in a sentence with enough preceding context.
// Similes: every sentence holding an explicit simile that converts cleanly;
// the final sentence is stored in its implicit form.
//
// Instance ids are "<kind>-<document>-<sentence index>-<match index>".
class NarrativeMiner {
 public:
  // `lexicon` may be null for the simile task; both must outlive the miner.
  NarrativeMiner(const IdiomLexicon *lexicon, const Tagger &tagger,
                 MinerOptions options);

  std::vector<DatasetInstance> MineDocument(std::string_view document_name,
                                            std::string_view text) const;

  const MinerOptions &options() const { return options_; }

 private:
  void MineIdioms(std::string_view document_name,
                  const std::vector<std::string> &sentences,
                  std::vector<DatasetInstance> &out) const;
  void MineSimiles(std::string_view document_name,
                   const std::vector<std::string> &sentences,
                   std::vector<DatasetInstance> &out) const;

  const Tagger &tagger_;
  MinerOptions options_;
  std::unique_ptr<ExpressionMatcher> matcher_;
};

}  // namespace figstory::corpus

#endif  // FIGSTORY_CORPUS_NARRATIVE_MINER_H_
