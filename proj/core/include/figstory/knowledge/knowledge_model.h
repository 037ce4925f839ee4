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

#ifndef FIGSTORY_KNOWLEDGE_KNOWLEDGE_MODEL_H_
#define FIGSTORY_KNOWLEDGE_KNOWLEDGE_MODEL_H_

#include <chrono>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "figstory/common/error.h"
#include "figstory/knowledge/relation.h"

namespace figstory::knowledge {

// A knowledge model failed to answer a (subject, relation) query.
class KnowledgeBackendError : public Error {
 public:
  KnowledgeBackendError(std::string subject, Relation relation,
                        const std::string &reason);

  const std::string &subject() const { return subject_; }
  Relation relation() const { return relation_; }

 private:
  std::string subject_;
  Relation relation_;
};

// Generates tail phrases for (subject, relation) in beam-rank order.
// Implementations must be safe to call concurrently.
class KnowledgeModel {
 public:
  virtual ~KnowledgeModel() = default;

  // At most `k` tails. Throws KnowledgeBackendError on failure.
  virtual std::vector<std::string> Generate(const std::string &subject,
                                            Relation relation,
                                            int k) const = 0;
};

// Answers from a JSON object {"subject|relation": [tails...]}. A key of the
// form "*|relation" answers any subject without an exact entry.
class FixtureKnowledgeModel : public KnowledgeModel {
 public:
  static FixtureKnowledgeModel FromJsonString(std::string_view json);
  static FixtureKnowledgeModel FromJsonFile(const std::filesystem::path &path);

  void Set(const std::string &subject, Relation relation,
           std::vector<std::string> tails);

  std::vector<std::string> Generate(const std::string &subject,
                                    Relation relation, int k) const override;

 private:
  std::map<std::string, std::vector<std::string>> table_;
};

struct HttpOptions {
  std::chrono::milliseconds timeout{30000};
  // Extra attempts after the first failure.
  int retries = 2;
};

// POSTs {"subject", "relation", "k"} to <endpoint>/generate and expects
// {"tails": [...]} back. Endpoint is "http://host:port" with an optional
// path prefix.
class HttpKnowledgeModel : public KnowledgeModel {
 public:
  explicit HttpKnowledgeModel(std::string endpoint, HttpOptions options = {});

  std::vector<std::string> Generate(const std::string &subject,
                                    Relation relation, int k) const override;

 private:
  std::string host_;
  std::string path_;
  HttpOptions options_;
};

}  // namespace figstory::knowledge

#endif  // FIGSTORY_KNOWLEDGE_KNOWLEDGE_MODEL_H_
