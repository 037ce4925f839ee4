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

#include "figstory/evaluation/report.h"

#include <cstdio>

#include "json.hpp"

namespace figstory::evaluation {

using nlohmann::ordered_json;

void EvaluationReport::Append(const EvaluationReport &other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
  records.insert(records.end(), other.records.begin(), other.records.end());
  warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
}

void EvaluationReport::WriteTsv(std::ostream &out) const {
  std::vector<std::string> columns;
  for (const auto &row : rows) {
    for (const auto &[name, value] : row.metrics) {
      bool seen = false;
      for (const auto &c : columns) seen = seen || c == name;
      if (!seen) columns.push_back(name);
    }
  }
  out << "model";
  for (const auto &c : columns) out << '\t' << c;
  out << '\n';
  for (const auto &row : rows) {
    out << row.model;
    for (const auto &c : columns) {
      out << '\t';
      for (const auto &[name, value] : row.metrics) {
        if (name != c) continue;
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.4f", value);
        out << buf;
        break;
      }
    }
    out << '\n';
  }
}

void EvaluationReport::WriteJsonl(std::ostream &out) const {
  for (const auto &record : records) {
    ordered_json j;
    j["model"] = record.model;
    j["instance_id"] = record.instance_id;
    ordered_json metrics = ordered_json::object();
    for (const auto &[name, value] : record.metrics) metrics[name] = value;
    j["metrics"] = metrics;
    if (record.chosen) j["chosen"] = *record.chosen;
    if (record.gold) j["gold"] = *record.gold;
    if (!record.warning.empty()) j["warning"] = record.warning;
    out << j.dump() << '\n';
  }
}

}  // namespace figstory::evaluation
