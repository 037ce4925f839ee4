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

#ifndef FIGSTORY_CORPUS_DATASET_SPLIT_H_
#define FIGSTORY_CORPUS_DATASET_SPLIT_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "figstory/corpus/dataset.h"

namespace figstory::corpus {

struct SplitRatios {
  double train = 0.0;
  double validation = 0.0;
  double test = 0.0;

  std::array<double, 3> as_array() const { return {train, validation, test}; }

  // Proportions of the published idiom split: 3204 / 355 / 1542 of 5101.
  static SplitRatios Default();
};

struct SplitOptions {
  // When set, fewer distinct expressions than the number of splits with a
  // nonzero ratio is an error instead of leaving a split empty.
  bool require_all_splits = true;
};

// Expression-disjoint split. Instances are grouped by (lowercased)
// expression; groups are visited largest first, ties in lexicographic
// order, and each group goes wholly to the split currently furthest below
// its target size (ties to the earlier split). The result depends only on
// the inputs; `seed` is accepted for interface symmetry with the other
// stochastic stages and recorded by callers.
std::vector<Split> AssignSplits(std::span<const std::string> expressions,
                                const SplitRatios &ratios, uint64_t seed,
                                const SplitOptions &options = {});

// Sets DatasetInstance::split in place using the narrative expressions.
void SplitDataset(std::vector<DatasetInstance> &instances,
                  const SplitRatios &ratios, uint64_t seed,
                  const SplitOptions &options = {});

}  // namespace figstory::corpus

#endif  // FIGSTORY_CORPUS_DATASET_SPLIT_H_
