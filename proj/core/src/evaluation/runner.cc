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

#include "figstory/evaluation/runner.h"

#include <algorithm>
#include <functional>
#include <future>
#include <thread>
#include <unordered_map>

#include "figstory/common/error.h"

namespace figstory::evaluation {
namespace {

// Runs fn(i) for every i; results land at fixed indices so aggregation
// order does not depend on scheduling.
void ForEachIndex(size_t n, bool parallel,
                  const std::function<void(size_t)> &fn) {
  if (!parallel || n < 2) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const size_t workers =
      std::min<size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> futures;
  for (size_t w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&, w] {
      for (size_t i = w; i < n; i += workers) fn(i);
    }));
  }
  for (auto &f : futures) f.get();
}

}  // namespace

EvaluationReport RunDiscriminativeEval(
    const ChoiceModel &model,
    std::span<const scoring::MultipleChoiceInstance> instances,
    const EvalOptions &options) {
  if (instances.empty()) throw InvalidArgument("no instances to evaluate");
  std::vector<size_t> chosen(instances.size());
  std::vector<size_t> golds(instances.size());
  std::vector<std::vector<double>> scores(instances.size());
  ForEachIndex(instances.size(), options.parallel, [&](size_t i) {
    scores[i] = model.Scores(instances[i]);
    if (scores[i].size() != instances[i].candidates.size()) {
      throw Error("model " + model.name() + " returned " +
                  std::to_string(scores[i].size()) + " scores for " +
                  instances[i].id);
    }
    chosen[i] = scoring::ChooseIndex(scores[i]);
    golds[i] = instances[i].gold;
  });

  EvaluationReport report;
  const std::string name = model.name();
  for (size_t i = 0; i < instances.size(); ++i) {
    InstanceRecord record;
    record.model = name;
    record.instance_id = instances[i].id;
    record.metrics = {{"score_0", scores[i][0]}, {"score_1", scores[i][1]},
                      {"correct", chosen[i] == golds[i] ? 1.0 : 0.0}};
    record.chosen = chosen[i];
    record.gold = golds[i];
    report.records.push_back(std::move(record));
  }
  report.rows.push_back({name, {{"accuracy", Accuracy(chosen, golds)}}});
  return report;
}

EvaluationReport RunGenerativeEval(std::string_view model,
                                   std::span<const TextPair> generations,
                                   std::span<const TextPair> references,
                                   const TokenEmbedder &embedder,
                                   const EvalOptions &options) {
  if (references.empty()) throw InvalidArgument("no references to evaluate");
  std::unordered_map<std::string, const std::string *> by_id;
  for (const auto &g : generations) by_id.emplace(g.instance_id, &g.text);

  std::vector<double> rouge(references.size(), 0.0);
  std::vector<double> embed(references.size(), 0.0);
  std::vector<std::string> warning(references.size());
  ForEachIndex(references.size(), options.parallel, [&](size_t i) {
    const auto &ref = references[i];
    auto it = by_id.find(ref.instance_id);
    if (it == by_id.end()) {
      warning[i] = "missing generation for " + ref.instance_id;
      return;
    }
    const auto cand_tokens = MetricTokens(*it->second);
    if (cand_tokens.empty()) {
      warning[i] = "empty generation for " + ref.instance_id;
      return;
    }
    const auto ref_tokens = MetricTokens(ref.text);
    if (ref_tokens.empty()) {
      warning[i] = "empty reference for " + ref.instance_id;
      return;
    }
    rouge[i] = RougeL(cand_tokens, ref_tokens).f1;
    embed[i] = EmbedScore(cand_tokens, ref_tokens, embedder).f1;
  });

  EvaluationReport report;
  double rouge_sum = 0.0, embed_sum = 0.0;
  for (size_t i = 0; i < references.size(); ++i) {
    rouge_sum += rouge[i];
    embed_sum += embed[i];
    InstanceRecord record;
    record.model = std::string(model);
    record.instance_id = references[i].instance_id;
    record.metrics = {{"rouge_l", rouge[i]}, {"embed_score", embed[i]}};
    record.warning = warning[i];
    if (!warning[i].empty()) report.warnings.push_back(warning[i]);
    report.records.push_back(std::move(record));
  }
  const auto n = static_cast<double>(references.size());
  report.rows.push_back(
      {std::string(model),
       {{"rouge_l", rouge_sum / n}, {"embed_score", embed_sum / n}}});
  return report;
}

}  // namespace figstory::evaluation
