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

#ifndef FIGSTORY_SCORING_MULTIPLE_CHOICE_H_
#define FIGSTORY_SCORING_MULTIPLE_CHOICE_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "figstory/corpus/dataset.h"
#include "figstory/knowledge/inference.h"
#include "figstory/scoring/encoder.h"
#include "figstory/scoring/score_head.h"

namespace figstory::scoring {

struct MultipleChoiceInstance {
  std::string id;
  corpus::Narrative narrative;
  std::array<std::string, 2> candidates;
  // Index of the plausible candidate.
  size_t gold = 0;
};

// Pairs the i-th plausible continuation with the i-th implausible one. The
// gold position of each pair is a pure function of (seed, instance id, i).
// Pair ids are the instance id, suffixed "#i" when there is more than one.
std::vector<MultipleChoiceInstance> PairContinuations(
    const corpus::DatasetInstance &instance, uint64_t seed);

// Argmax; equal scores resolve to the lowest index.
size_t ChooseIndex(std::span<const double> scores);

// [N, C], or [Inf, N, C] when a verbalized inference is given.
SegmentList BuildMcInput(const corpus::Narrative &narrative,
                         std::string_view continuation,
                         std::optional<std::string_view> inference = {});

// head(encoder([N, C])).
double SupervisedScore(const Encoder &encoder, const ScoreHead &head,
                       const corpus::Narrative &narrative,
                       std::string_view continuation);

// Sum over the bundle of head(encoder([Inf_j, N, C])); no averaging.
// Throws InvalidArgument on an empty bundle.
double KnowledgeChoiceScore(const Encoder &encoder, const ScoreHead &head,
                            const corpus::Narrative &narrative,
                            std::string_view continuation,
                            const knowledge::InferenceBundle &bundle);

// head(encoder([C])): the narrative is never shown.
double ContinuationOnlyScore(const Encoder &encoder, const ScoreHead &head,
                             std::string_view continuation);

}  // namespace figstory::scoring

#endif  // FIGSTORY_SCORING_MULTIPLE_CHOICE_H_
