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

#ifndef FIGSTORY_KNOWLEDGE_INFERENCE_H_
#define FIGSTORY_KNOWLEDGE_INFERENCE_H_

#include <string>
#include <string_view>
#include <vector>

#include "figstory/knowledge/relation.h"

namespace figstory::knowledge {

inline constexpr size_t kDefaultBundleSize = 12;

enum class InferenceSource { kLiteral, kContext };

std::string_view InferenceSourceName(InferenceSource source);
InferenceSource ParseInferenceSource(std::string_view name);

struct Inference {
  std::string subject;
  Relation relation = Relation::kHasProperty;
  std::string tail;
  std::string verbalized;
  // 1-based beam position reported by the knowledge model.
  int rank = 1;
};

struct InferenceBundle {
  std::string instance_id;
  InferenceSource source = InferenceSource::kLiteral;
  std::vector<Inference> inferences;
  // Set when a backend returned fewer tails than requested and the last
  // tail was repeated to fill the bundle.
  bool padded = false;

  size_t size() const { return inferences.size(); }
};

}  // namespace figstory::knowledge

#endif  // FIGSTORY_KNOWLEDGE_INFERENCE_H_
