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

#include "figstory/knowledge/relation.h"

#include "figstory/common/error.h"

namespace figstory::knowledge {
namespace {

struct RelationEntry {
  Relation relation;
  std::string_view name;
};

constexpr std::array<RelationEntry, 12> kRelationNames = {{
    {Relation::kUsedFor, "UsedFor"},
    {Relation::kDesires, "Desires"},
    {Relation::kHasProperty, "HasProperty"},
    {Relation::kMadeUpOf, "MadeUpOf"},
    {Relation::kAtLocation, "AtLocation"},
    {Relation::kCapableOf, "CapableOf"},
    {Relation::kXIntent, "xIntent"},
    {Relation::kXNeed, "xNeed"},
    {Relation::kXAttr, "xAttr"},
    {Relation::kXWant, "xWant"},
    {Relation::kXEffect, "xEffect"},
    {Relation::kXReact, "xReact"},
}};

}  // namespace

bool IsConceptRelation(Relation relation) {
  return static_cast<int>(relation) <= static_cast<int>(Relation::kCapableOf);
}

std::string_view RelationName(Relation relation) {
  return kRelationNames[static_cast<size_t>(relation)].name;
}

Relation ParseRelation(std::string_view name) {
  for (const auto &entry : kRelationNames) {
    if (entry.name == name) return entry.relation;
  }
  throw InvalidArgument("unknown relation '" + std::string(name) + "'");
}

}  // namespace figstory::knowledge
