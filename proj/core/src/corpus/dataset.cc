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

#include "figstory/corpus/dataset.h"

#include "figstory/common/error.h"

namespace figstory::corpus {

std::string_view LabelName(Label label) {
  return label == Label::kPlausible ? "plausible" : "implausible";
}

Label ParseLabel(std::string_view name) {
  if (name == "plausible") return Label::kPlausible;
  if (name == "implausible") return Label::kImplausible;
  throw InvalidArgument("unknown label '" + std::string(name) + "'");
}

std::string_view SplitName(Split split) {
  switch (split) {
    case Split::kTrain:
      return "train";
    case Split::kValidation:
      return "validation";
    case Split::kTest:
      return "test";
  }
  return "train";
}

Split ParseSplit(std::string_view name) {
  if (name == "train") return Split::kTrain;
  if (name == "validation") return Split::kValidation;
  if (name == "test") return Split::kTest;
  throw InvalidArgument("unknown split '" + std::string(name) + "'");
}

}  // namespace figstory::corpus
