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

#ifndef FIGSTORY_HARNESS_RECORDS_H_
#define FIGSTORY_HARNESS_RECORDS_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "figstory/common/error.h"
#include "figstory/corpus/dataset.h"
#include "figstory/knowledge/inference.h"
#include "json.hpp"

namespace figstory::harness {

using Json = nlohmann::ordered_json;

struct LineProblem {
  size_t line = 0;
  std::string message;
};

// An input JSONL file with one or more malformed lines.
class SchemaError : public FormatError {
 public:
  SchemaError(std::filesystem::path path, std::vector<LineProblem> problems);
  const std::vector<LineProblem> &problems() const { return problems_; }

 private:
  std::vector<LineProblem> problems_;
};

struct Prediction {
  std::string instance_id;
  std::vector<double> scores;
  size_t chosen = 0;
  size_t gold = 0;
};

struct Generation {
  std::string instance_id;
  std::string model;
  std::string continuation_text;
  std::vector<int32_t> tokens;
  uint64_t seed = 0;
};

struct KnowledgeErrorRecord {
  std::string instance_id;
  std::string source;
  std::string subject;
  std::string relation;
  std::string error;
};

Json ToJson(const corpus::DatasetInstance &instance);
Json ToJson(const knowledge::InferenceBundle &bundle);
Json ToJson(const Prediction &prediction);
Json ToJson(const Generation &generation);
Json ToJson(const KnowledgeErrorRecord &record);

// Each validator returns the problems found in one parsed line; an empty
// result means the line can be converted.
std::vector<std::string> ValidateDatasetInstance(const Json &j);
std::vector<std::string> ValidateBundle(const Json &j);
std::vector<std::string> ValidatePrediction(const Json &j);
std::vector<std::string> ValidateGeneration(const Json &j);

corpus::DatasetInstance DatasetInstanceFromJson(const Json &j);
knowledge::InferenceBundle BundleFromJson(const Json &j);
Prediction PredictionFromJson(const Json &j);
Generation GenerationFromJson(const Json &j);

// Parses every non-blank line, validates it, and throws SchemaError listing
// all offending line numbers before converting anything.
std::vector<Json> ReadJsonl(
    const std::filesystem::path &path,
    const std::function<std::vector<std::string>(const Json &)> &validate);

std::vector<corpus::DatasetInstance> ReadDataset(
    const std::filesystem::path &path);
std::vector<knowledge::InferenceBundle> ReadBundles(
    const std::filesystem::path &path);
std::vector<Prediction> ReadPredictions(const std::filesystem::path &path);
std::vector<Generation> ReadGenerations(const std::filesystem::path &path);

// Writes one compact JSON object per line.
void WriteJsonl(const std::filesystem::path &path, const std::vector<Json> &rows);
void WriteJson(const std::filesystem::path &path, const Json &value);

}  // namespace figstory::harness

#endif  // FIGSTORY_HARNESS_RECORDS_H_
