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

#ifndef FIGSTORY_EVALUATION_REPORT_H_
#define FIGSTORY_EVALUATION_REPORT_H_

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace figstory::evaluation {

using MetricValues = std::vector<std::pair<std::string, double>>;

struct ModelRow {
  std::string model;
  MetricValues metrics;
};

struct InstanceRecord {
  std::string model;
  std::string instance_id;
  MetricValues metrics;
  std::optional<size_t> chosen;
  std::optional<size_t> gold;
  std::string warning;
};

struct EvaluationReport {
  std::vector<ModelRow> rows;
  std::vector<InstanceRecord> records;
  std::vector<std::string> warnings;

  void Append(const EvaluationReport &other);

  // Header "model" followed by the union of metric names in first-seen
  // order; values printed with 4 decimals, blank when a model lacks one.
  void WriteTsv(std::ostream &out) const;
  // One JSON object per instance record.
  void WriteJsonl(std::ostream &out) const;
};

}  // namespace figstory::evaluation

#endif  // FIGSTORY_EVALUATION_REPORT_H_
