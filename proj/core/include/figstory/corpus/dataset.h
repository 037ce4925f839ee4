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

#ifndef FIGSTORY_CORPUS_DATASET_H_
#define FIGSTORY_CORPUS_DATASET_H_

#include <string>
#include <string_view>
#include <vector>

#include "figstory/corpus/narrative.h"

namespace figstory::corpus {

enum class Label { kPlausible, kImplausible };
enum class Split { kTrain, kValidation, kTest };

std::string_view LabelName(Label label);
Label ParseLabel(std::string_view name);
std::string_view SplitName(Split split);
Split ParseSplit(std::string_view name);

struct Continuation {
  std::string text;
  Label label = Label::kPlausible;
};

struct DatasetInstance {
  std::string id;
  Narrative narrative;
  std::vector<Continuation> continuations;
  Split split = Split::kTrain;
};

}  // namespace figstory::corpus

#endif  // FIGSTORY_CORPUS_DATASET_H_
