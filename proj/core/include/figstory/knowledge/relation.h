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

#ifndef FIGSTORY_KNOWLEDGE_RELATION_H_
#define FIGSTORY_KNOWLEDGE_RELATION_H_

#include <array>
#include <string>
#include <string_view>

namespace figstory::knowledge {

enum class Relation {
  // Concept relations, queried for expression constituents.
  kUsedFor,
  kDesires,
  kHasProperty,
  kMadeUpOf,
  kAtLocation,
  kCapableOf,
  // Event relations about the narrator, queried for the narrative context.
  kXIntent,
  kXNeed,
  kXAttr,
  kXWant,
  kXEffect,
  kXReact,
};

// Listing order matters: bundles are assembled in this order.
inline constexpr std::array<Relation, 6> kConceptRelations = {
    Relation::kUsedFor,    Relation::kDesires,    Relation::kHasProperty,
    Relation::kMadeUpOf,   Relation::kAtLocation, Relation::kCapableOf};
inline constexpr std::array<Relation, 6> kEventRelations = {
    Relation::kXIntent, Relation::kXNeed,   Relation::kXAttr,
    Relation::kXWant,   Relation::kXEffect, Relation::kXReact};

bool IsConceptRelation(Relation relation);

// "UsedFor", "xReact", ...
std::string_view RelationName(Relation relation);

// Throws InvalidArgument for names outside the twelve relations.
Relation ParseRelation(std::string_view name);

}  // namespace figstory::knowledge

#endif  // FIGSTORY_KNOWLEDGE_RELATION_H_
