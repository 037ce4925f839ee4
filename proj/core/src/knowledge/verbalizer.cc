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

#include "figstory/knowledge/verbalizer.h"

#include "figstory/common/error.h"

namespace figstory::knowledge {

std::string_view RelationTemplate(Relation relation) {
  switch (relation) {
    case Relation::kUsedFor:
      return "{s} is used for {t}";
    case Relation::kDesires:
      return "{s} desires {t}";
    case Relation::kHasProperty:
      return "{s} has the property of {t}";
    case Relation::kMadeUpOf:
      return "{s} is made up of {t}";
    case Relation::kAtLocation:
      return "{s} is located at {t}";
    case Relation::kCapableOf:
      return "{s} is capable of {t}";
    case Relation::kXIntent:
      return "PersonX intends {t}";
    case Relation::kXNeed:
      return "PersonX needs {t}";
    case Relation::kXAttr:
      return "PersonX is {t}";
    case Relation::kXWant:
      return "PersonX wants {t}";
    case Relation::kXEffect:
      return "PersonX then {t}";
    case Relation::kXReact:
      return "PersonX feels {t}";
  }
  throw InvalidArgument("relation without a template");
}

std::string Verbalize(std::string_view subject, Relation relation,
                      std::string_view tail) {
  if (tail.empty()) throw InvalidArgument("cannot verbalize an empty tail");
  const std::string_view pattern = RelationTemplate(relation);
  std::string out;
  out.reserve(pattern.size() + subject.size() + tail.size());
  for (size_t i = 0; i < pattern.size(); ++i) {
    if (pattern.compare(i, 3, "{s}") == 0) {
      out.append(subject);
      i += 2;
    } else if (pattern.compare(i, 3, "{t}") == 0) {
      out.append(tail);
      i += 2;
    } else {
      out.push_back(pattern[i]);
    }
  }
  return out;
}

std::string Verbalize(std::string_view subject, std::string_view relation,
                      std::string_view tail) {
  return Verbalize(subject, ParseRelation(relation), tail);
}

}  // namespace figstory::knowledge
