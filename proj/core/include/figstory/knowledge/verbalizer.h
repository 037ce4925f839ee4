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

#ifndef FIGSTORY_KNOWLEDGE_VERBALIZER_H_
#define FIGSTORY_KNOWLEDGE_VERBALIZER_H_

#include <string>
#include <string_view>

#include "figstory/knowledge/relation.h"

namespace figstory::knowledge {

// Template with "{s}" (subject) and "{t}" (tail) placeholders. Event
// relations are phrased about PersonX and ignore the subject.
std::string_view RelationTemplate(Relation relation);

// Renders a triple as one sentence, e.g.
//   ("grabs", CapableOf, "hold on to") -> "grabs is capable of hold on to".
// Throws InvalidArgument on an empty tail.
std::string Verbalize(std::string_view subject, Relation relation,
                      std::string_view tail);

// Same, with the relation given by name; unknown names throw.
std::string Verbalize(std::string_view subject, std::string_view relation,
                      std::string_view tail);

}  // namespace figstory::knowledge

#endif  // FIGSTORY_KNOWLEDGE_VERBALIZER_H_
