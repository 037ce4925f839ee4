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

#include "figstory/corpus/narrative_miner.h"

#include <cstdio>

#include "figstory/common/error.h"
#include "figstory/corpus/sentence_splitter.h"
#include "figstory/corpus/simile.h"

namespace figstory::corpus {
namespace {

std::string MakeId(ExpressionKind kind, std::string_view document,
                   size_t sentence, size_t match) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "-%04zu-%zu", sentence, match);
  return std::string(ExpressionKindName(kind)) + "-" + std::string(document) +
         buffer;
}

}  // namespace

NarrativeMiner::NarrativeMiner(const IdiomLexicon *lexicon,
                               const Tagger &tagger, MinerOptions options)
    : tagger_(tagger), options_(options) {
  if (options_.kind == ExpressionKind::kIdiom) {
    if (lexicon == nullptr) {
      throw InvalidArgument("idiom mining requires a lexicon");
    }
    matcher_ = std::make_unique<ExpressionMatcher>(*lexicon);
  }
}

std::vector<DatasetInstance> NarrativeMiner::MineDocument(
    std::string_view document_name, std::string_view text) const {
  const std::vector<std::string> sentences = SegmentSentences(text);
  std::vector<DatasetInstance> out;
  if (options_.kind == ExpressionKind::kIdiom) {
    MineIdioms(document_name, sentences, out);
  } else {
    MineSimiles(document_name, sentences, out);
  }
  return out;
}

void NarrativeMiner::MineIdioms(std::string_view document_name,
                                const std::vector<std::string> &sentences,
                                std::vector<DatasetInstance> &out) const {
  for (size_t index = options_.window; index < sentences.size(); ++index) {
    const TaggedSentence tagged = TagSentence(sentences[index], tagger_);
    const auto matches = matcher_->Match(tagged);
    for (size_t k = 0; k < matches.size(); ++k) {
      auto narrative = BuildNarrative(sentences, index, options_.window);
      if (!narrative) continue;
      const ExpressionMatch &match = matches[k];
      narrative->kind = ExpressionKind::kIdiom;
      narrative->expression_span = {
          tagged.tokens[match.span.begin].span.begin,
          tagged.tokens[match.span.end - 1].span.end};
      narrative->expression = narrative->final_sentence.substr(
          narrative->expression_span.begin, narrative->expression_span.size());
      narrative->gloss = matcher_->lexicon().entry(match.entry_index).definition;
      DatasetInstance instance;
      instance.id = MakeId(ExpressionKind::kIdiom, document_name, index, k);
      instance.narrative = std::move(*narrative);
      out.push_back(std::move(instance));
    }
  }
}

void NarrativeMiner::MineSimiles(std::string_view document_name,
                                 const std::vector<std::string> &sentences,
                                 std::vector<DatasetInstance> &out) const {
  for (size_t index = options_.window; index < sentences.size(); ++index) {
    const TaggedSentence tagged = TagSentence(sentences[index], tagger_);
    const auto simile = DetectExplicitSimile(tagged);
    if (!simile) continue;
    ImplicitSimile implicit;
    try {
      implicit = ToImplicit(*simile, tagged);
    } catch (const InvalidArgument &) {
      continue;
    }
    auto narrative = BuildNarrative(sentences, index, options_.window);
    if (!narrative) continue;
    narrative->kind = ExpressionKind::kSimile;
    narrative->final_sentence = implicit.sentence;
    narrative->expression_span = implicit.expression;
    narrative->expression = implicit.sentence.substr(
        implicit.expression.begin, implicit.expression.size());
    narrative->gloss = ToLower(implicit.property);
    DatasetInstance instance;
    instance.id = MakeId(ExpressionKind::kSimile, document_name, index, 0);
    instance.narrative = std::move(*narrative);
    out.push_back(std::move(instance));
  }
}

}  // namespace figstory::corpus
