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

#include "figstory/corpus/dataset_split.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "figstory/common/error.h"
#include "figstory/common/text.h"

namespace figstory::corpus {

SplitRatios SplitRatios::Default() {
  constexpr double kTotal = 3204 + 355 + 1542;
  return {3204 / kTotal, 355 / kTotal, 1542 / kTotal};
}

std::vector<Split> AssignSplits(std::span<const std::string> expressions,
                                const SplitRatios &ratios, uint64_t /*seed*/,
                                const SplitOptions &options) {
  const auto targets_ratio = ratios.as_array();
  double sum = 0.0;
  for (double r : targets_ratio) {
    if (r < 0.0) throw InvalidArgument("split ratios must be non-negative");
    sum += r;
  }
  if (std::abs(sum - 1.0) > 1e-6) {
    throw InvalidArgument("split ratios must sum to 1 (got " +
                          std::to_string(sum) + ")");
  }

  // std::map keeps groups in lexicographic order for the tie-break.
  std::map<std::string, std::vector<size_t>> groups;
  for (size_t i = 0; i < expressions.size(); ++i) {
    groups[ToLower(expressions[i])].push_back(i);
  }
  const auto nonzero = static_cast<size_t>(
      std::count_if(targets_ratio.begin(), targets_ratio.end(),
                    [](double r) { return r > 0.0; }));
  if (options.require_all_splits && groups.size() < nonzero) {
    throw InvalidArgument("need at least " + std::to_string(nonzero) +
                          " distinct expressions for an expression-disjoint "
                          "split, got " +
                          std::to_string(groups.size()));
  }

  std::vector<const std::pair<const std::string, std::vector<size_t>> *> order;
  order.reserve(groups.size());
  for (const auto &group : groups) order.push_back(&group);
  std::stable_sort(order.begin(), order.end(), [](auto *a, auto *b) {
    return a->second.size() > b->second.size();
  });

  const double total = static_cast<double>(expressions.size());
  std::array<double, 3> filled = {0.0, 0.0, 0.0};
  std::vector<Split> assignment(expressions.size(), Split::kTrain);
  for (const auto *group : order) {
    size_t best = 0;
    double best_deficit = -1e300;
    for (size_t s = 0; s < 3; ++s) {
      if (targets_ratio[s] <= 0.0) continue;
      const double deficit = targets_ratio[s] * total - filled[s];
      if (deficit > best_deficit) {
        best_deficit = deficit;
        best = s;
      }
    }
    filled[best] += static_cast<double>(group->second.size());
    for (size_t i : group->second) assignment[i] = static_cast<Split>(best);
  }
  return assignment;
}

void SplitDataset(std::vector<DatasetInstance> &instances,
                  const SplitRatios &ratios, uint64_t seed,
                  const SplitOptions &options) {
  std::vector<std::string> expressions;
  expressions.reserve(instances.size());
  for (const auto &instance : instances) {
    expressions.push_back(instance.narrative.expression);
  }
  const auto assignment = AssignSplits(expressions, ratios, seed, options);
  for (size_t i = 0; i < instances.size(); ++i) {
    instances[i].split = assignment[i];
  }
}

}  // namespace figstory::corpus
