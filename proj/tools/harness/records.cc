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

#include "harness/records.h"

#include <fstream>

#include "figstory/corpus/narrative.h"
#include "figstory/knowledge/relation.h"

namespace figstory::harness {
namespace {

std::string DescribeProblems(const std::filesystem::path &path,
                             const std::vector<LineProblem> &problems) {
  std::string msg = path.string() + ": " + std::to_string(problems.size()) +
                    " schema problem(s)";
  for (const auto &p : problems) {
    msg += "\n  line " + std::to_string(p.line) + ": " + p.message;
  }
  return msg;
}

class Checker {
 public:
  explicit Checker(const Json &j) : j_(j) {
    if (!j.is_object()) problems_.push_back("not a JSON object");
  }

  bool Require(const char *key, Json::value_t type) {
    if (!j_.is_object()) return false;
    auto it = j_.find(key);
    if (it == j_.end()) {
      problems_.push_back(std::string("missing field '") + key + "'");
      return false;
    }
    if (!Matches(*it, type)) {
      problems_.push_back(std::string("field '") + key + "' has wrong type");
      return false;
    }
    return true;
  }

  void Fail(std::string message) { problems_.push_back(std::move(message)); }
  std::vector<std::string> Take() { return std::move(problems_); }

  static bool Matches(const Json &v, Json::value_t type) {
    switch (type) {
      case Json::value_t::number_float:
        return v.is_number();
      case Json::value_t::number_unsigned:
        return v.is_number_unsigned() ||
               (v.is_number_integer() && v.get<int64_t>() >= 0);
      case Json::value_t::number_integer:
        return v.is_number_integer();
      default:
        return v.type() == type;
    }
  }

 private:
  const Json &j_;
  std::vector<std::string> problems_;
};

using V = Json::value_t;

template <typename Parse>
void CheckEnum(Checker &c, const Json &j, const char *key, Parse parse) {
  if (!c.Require(key, V::string)) return;
  try {
    parse(j.at(key).get<std::string>());
  } catch (const Error &) {
    c.Fail(std::string("field '") + key + "' has unknown value '" +
           j.at(key).get<std::string>() + "'");
  }
}

}  // namespace

SchemaError::SchemaError(std::filesystem::path path,
                         std::vector<LineProblem> problems)
    : FormatError(DescribeProblems(path, problems)),
      problems_(std::move(problems)) {}

Json ToJson(const corpus::DatasetInstance &instance) {
  const auto &n = instance.narrative;
  Json j;
  j["id"] = instance.id;
  j["kind"] = corpus::ExpressionKindName(n.kind);
  j["context_sentences"] = n.context_sentences;
  j["final_sentence"] = n.final_sentence;
  j["expression"] = n.expression;
  j["expression_char_span"] = {n.expression_span.begin, n.expression_span.end};
  j["gloss"] = n.gloss;
  Json conts = Json::array();
  for (const auto &c : instance.continuations) {
    conts.push_back({{"text", c.text}, {"label", corpus::LabelName(c.label)}});
  }
  j["continuations"] = conts;
  j["split"] = corpus::SplitName(instance.split);
  return j;
}

Json ToJson(const knowledge::InferenceBundle &bundle) {
  Json j;
  j["instance_id"] = bundle.instance_id;
  j["source"] = knowledge::InferenceSourceName(bundle.source);
  j["padded"] = bundle.padded;
  Json infs = Json::array();
  for (const auto &inf : bundle.inferences) {
    infs.push_back({{"subject", inf.subject},
                    {"relation", knowledge::RelationName(inf.relation)},
                    {"tail", inf.tail},
                    {"verbalized", inf.verbalized},
                    {"rank", inf.rank}});
  }
  j["inferences"] = infs;
  return j;
}

Json ToJson(const Prediction &p) {
  Json j;
  j["instance_id"] = p.instance_id;
  j["scores"] = p.scores;
  j["chosen"] = p.chosen;
  j["gold"] = p.gold;
  return j;
}

Json ToJson(const Generation &g) {
  Json j;
  j["instance_id"] = g.instance_id;
  j["model"] = g.model;
  j["continuation_text"] = g.continuation_text;
  j["tokens"] = g.tokens;
  j["seed"] = g.seed;
  return j;
}

Json ToJson(const KnowledgeErrorRecord &r) {
  Json j;
  j["instance_id"] = r.instance_id;
  j["source"] = r.source;
  j["subject"] = r.subject;
  j["relation"] = r.relation;
  j["error"] = r.error;
  return j;
}

std::vector<std::string> ValidateDatasetInstance(const Json &j) {
  Checker c(j);
  if (!j.is_object()) return c.Take();
  c.Require("id", V::string);
  CheckEnum(c, j, "kind", corpus::ParseExpressionKind);
  if (c.Require("context_sentences", V::array)) {
    for (const auto &s : j["context_sentences"]) {
      if (!s.is_string()) c.Fail("context_sentences must hold strings");
    }
  }
  c.Require("final_sentence", V::string);
  c.Require("expression", V::string);
  if (c.Require("expression_char_span", V::array)) {
    const auto &span = j["expression_char_span"];
    if (span.size() != 2 || !Checker::Matches(span[0], V::number_unsigned) ||
        !Checker::Matches(span[1], V::number_unsigned)) {
      c.Fail("expression_char_span must be two non-negative integers");
    } else if (j.contains("final_sentence") && j["final_sentence"].is_string()) {
      const auto b = span[0].get<size_t>();
      const auto e = span[1].get<size_t>();
      if (b > e || e > j["final_sentence"].get<std::string>().size()) {
        c.Fail("expression_char_span lies outside final_sentence");
      }
    }
  }
  c.Require("gloss", V::string);
  if (c.Require("continuations", V::array)) {
    for (const auto &cont : j["continuations"]) {
      if (!cont.is_object() || !cont.contains("text") ||
          !cont["text"].is_string() || !cont.contains("label") ||
          !cont["label"].is_string()) {
        c.Fail("continuations entries need string 'text' and 'label'");
        continue;
      }
      try {
        corpus::ParseLabel(cont["label"].get<std::string>());
      } catch (const Error &) {
        c.Fail("unknown continuation label '" +
               cont["label"].get<std::string>() + "'");
      }
    }
  }
  CheckEnum(c, j, "split", corpus::ParseSplit);
  return c.Take();
}

std::vector<std::string> ValidateBundle(const Json &j) {
  Checker c(j);
  if (!j.is_object()) return c.Take();
  c.Require("instance_id", V::string);
  CheckEnum(c, j, "source", knowledge::ParseInferenceSource);
  if (j.contains("padded") && !j["padded"].is_boolean()) {
    c.Fail("field 'padded' has wrong type");
  }
  if (c.Require("inferences", V::array)) {
    if (j["inferences"].empty()) c.Fail("bundle has no inferences");
    for (const auto &inf : j["inferences"]) {
      Checker ic(inf);
      if (inf.is_object()) {
        ic.Require("subject", V::string);
        CheckEnum(ic, inf, "relation", knowledge::ParseRelation);
        ic.Require("tail", V::string);
        ic.Require("verbalized", V::string);
        if (ic.Require("rank", V::number_integer) && inf["rank"].get<int>() < 1) {
          ic.Fail("rank must be >= 1");
        }
      }
      for (auto &p : ic.Take()) c.Fail("inference: " + p);
    }
  }
  return c.Take();
}

std::vector<std::string> ValidatePrediction(const Json &j) {
  Checker c(j);
  if (!j.is_object()) return c.Take();
  c.Require("instance_id", V::string);
  size_t n = 0;
  if (c.Require("scores", V::array)) {
    n = j["scores"].size();
    if (n < 2) c.Fail("scores must hold at least two values");
    for (const auto &s : j["scores"]) {
      if (!s.is_number()) c.Fail("scores must be numbers");
    }
  }
  for (const char *key : {"chosen", "gold"}) {
    if (c.Require(key, V::number_unsigned) && j[key].get<size_t>() >= n) {
      c.Fail(std::string("field '") + key + "' out of range");
    }
  }
  return c.Take();
}

std::vector<std::string> ValidateGeneration(const Json &j) {
  Checker c(j);
  if (!j.is_object()) return c.Take();
  c.Require("instance_id", V::string);
  c.Require("model", V::string);
  c.Require("continuation_text", V::string);
  if (c.Require("tokens", V::array)) {
    for (const auto &t : j["tokens"]) {
      if (!t.is_number_integer()) c.Fail("tokens must be integers");
    }
  }
  c.Require("seed", V::number_unsigned);
  return c.Take();
}

corpus::DatasetInstance DatasetInstanceFromJson(const Json &j) {
  corpus::DatasetInstance d;
  d.id = j["id"].get<std::string>();
  auto &n = d.narrative;
  n.kind = corpus::ParseExpressionKind(j["kind"].get<std::string>());
  n.context_sentences = j["context_sentences"].get<std::vector<std::string>>();
  n.final_sentence = j["final_sentence"].get<std::string>();
  n.expression = j["expression"].get<std::string>();
  n.expression_span = {j["expression_char_span"][0].get<size_t>(),
                       j["expression_char_span"][1].get<size_t>()};
  n.gloss = j["gloss"].get<std::string>();
  for (const auto &cont : j["continuations"]) {
    d.continuations.push_back(
        {cont["text"].get<std::string>(),
         corpus::ParseLabel(cont["label"].get<std::string>())});
  }
  d.split = corpus::ParseSplit(j["split"].get<std::string>());
  return d;
}

knowledge::InferenceBundle BundleFromJson(const Json &j) {
  knowledge::InferenceBundle b;
  b.instance_id = j["instance_id"].get<std::string>();
  b.source = knowledge::ParseInferenceSource(j["source"].get<std::string>());
  b.padded = j.value("padded", false);
  for (const auto &inf : j["inferences"]) {
    b.inferences.push_back(
        {inf["subject"].get<std::string>(),
         knowledge::ParseRelation(inf["relation"].get<std::string>()),
         inf["tail"].get<std::string>(), inf["verbalized"].get<std::string>(),
         inf["rank"].get<int>()});
  }
  return b;
}

Prediction PredictionFromJson(const Json &j) {
  return {j["instance_id"].get<std::string>(),
          j["scores"].get<std::vector<double>>(), j["chosen"].get<size_t>(),
          j["gold"].get<size_t>()};
}

Generation GenerationFromJson(const Json &j) {
  return {j["instance_id"].get<std::string>(), j["model"].get<std::string>(),
          j["continuation_text"].get<std::string>(),
          j["tokens"].get<std::vector<int32_t>>(), j["seed"].get<uint64_t>()};
}

std::vector<Json> ReadJsonl(
    const std::filesystem::path &path,
    const std::function<std::vector<std::string>(const Json &)> &validate) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  std::vector<Json> rows;
  std::vector<LineProblem> problems;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error &e) {
      problems.push_back({line_no, std::string("invalid JSON: ") + e.what()});
      continue;
    }
    auto found = validate(j);
    for (auto &message : found) problems.push_back({line_no, std::move(message)});
    if (found.empty()) rows.push_back(std::move(j));
  }
  if (!problems.empty()) throw SchemaError(path, std::move(problems));
  return rows;
}

std::vector<corpus::DatasetInstance> ReadDataset(
    const std::filesystem::path &path) {
  std::vector<corpus::DatasetInstance> out;
  for (const auto &j : ReadJsonl(path, ValidateDatasetInstance)) {
    out.push_back(DatasetInstanceFromJson(j));
  }
  return out;
}

std::vector<knowledge::InferenceBundle> ReadBundles(
    const std::filesystem::path &path) {
  std::vector<knowledge::InferenceBundle> out;
  for (const auto &j : ReadJsonl(path, ValidateBundle)) {
    out.push_back(BundleFromJson(j));
  }
  return out;
}

std::vector<Prediction> ReadPredictions(const std::filesystem::path &path) {
  std::vector<Prediction> out;
  for (const auto &j : ReadJsonl(path, ValidatePrediction)) {
    out.push_back(PredictionFromJson(j));
  }
  return out;
}

std::vector<Generation> ReadGenerations(const std::filesystem::path &path) {
  std::vector<Generation> out;
  for (const auto &j : ReadJsonl(path, ValidateGeneration)) {
    out.push_back(GenerationFromJson(j));
  }
  return out;
}

void WriteJsonl(const std::filesystem::path &path,
                const std::vector<Json> &rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  for (const auto &row : rows) out << row.dump() << '\n';
}

void WriteJson(const std::filesystem::path &path, const Json &value) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << value.dump(2) << '\n';
}

}  // namespace figstory::harness
