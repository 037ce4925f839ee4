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

#ifndef FIGSTORY_KNOWLEDGE_INFERENCE_BUILDER_H_
#define FIGSTORY_KNOWLEDGE_INFERENCE_BUILDER_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "figstory/corpus/narrative.h"
#include "figstory/knowledge/inference.h"
#include "figstory/knowledge/knowledge_model.h"

namespace figstory::knowledge {

// The shipped English stopword list (lowercase).
bool IsStopword(std::string_view lowercase_word);

// Constituents of an idiom minus stopwords and punctuation, in order.
// Throws InvalidArgument when nothing is left.
std::vector<std::string> ContentWords(std::string_view idiom);

// The vehicle of an implicit simile: the tokens after "like" up to the end
// of the clause, leading determiners dropped. "... like a psychic
// whirlpool." -> "psychic whirlpool". Throws InvalidArgument without "like".
std::string VehiclePhrase(std::string_view implicit_simile_sentence);

struct BundleOptions {
  size_t size = kDefaultBundleSize;
  // Issue backend requests concurrently; assembly order is unchanged.
  bool parallel = false;
};

// Literal knowledge about the expression itself.
//  - Similes: the vehicle's top-K HasProperty tails.
//  - Idioms: top-2 tails per (content word, concept relation). Candidates are
//    taken rank-1 before rank-2; within a rank, round r visits the relations
//    in listing order and pairs relation i with content word (i + r) mod W.
//    The first K candidates form the bundle.
InferenceBundle LiteralInferences(const std::string &instance_id,
                                  std::string_view expression,
                                  corpus::ExpressionKind kind,
                                  const KnowledgeModel &model,
                                  const BundleOptions &options = {});

// Narrator-centric knowledge about the context sentences (the final,
// expression-bearing sentence is never sent): ceil(K / 6) tails per event
// relation, relation-major.
InferenceBundle ContextInferences(const std::string &instance_id,
                                  const corpus::Narrative &narrative,
                                  const KnowledgeModel &model,
                                  const BundleOptions &options = {});

}  // namespace figstory::knowledge

#endif  // FIGSTORY_KNOWLEDGE_INFERENCE_BUILDER_H_
