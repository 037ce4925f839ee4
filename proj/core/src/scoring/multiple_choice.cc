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

#include "figstory/scoring/multiple_choice.h"

#include <algorithm>

#include "figstory/common/error.h"
#include "figstory/common/random.h"

namespace figstory::scoring {

std::vector<MultipleChoiceInstance> PairContinuations(
    const corpus::DatasetInstance &instance, uint64_t seed) {
  std::vector<const std::string *> plausible;
  std::vector<const std::string *> implausible;
  for (const auto &c : instance.continuations) {
    (c.label == corpus::Label::kPlausible ? plausible : implausible)
        .push_back(&c.text);
  }
  const size_t pairs = std::min(plausible.size(), implausible.size());
  std::vector<MultipleChoiceInstance> out;
  out.reserve(pairs);
  for (size_t i = 0; i < pairs; ++i) {
    MultipleChoiceInstance mc;
    mc.id = pairs == 1 ? instance.id : instance.id + "#" + std::to_string(i);
    mc.narrative = instance.narrative;
    const uint64_t draw = SplitMix64(seed ^ Fingerprint(instance.id) ^
                                     SplitMix64(static_cast<uint64_t>(i)));
    mc.gold = draw & 1U;
    mc.candidates[mc.gold] = *plausible[i];
    mc.candidates[1 - mc.gold] = *implausible[i];
    out.push_back(std::move(mc));
  }
  return out;
}

size_t ChooseIndex(std::span<const double> scores) {
  if (scores.empty()) throw InvalidArgument("no scores to choose from");
  size_t best = 0;
  for (size_t i = 1; i < scores.size(); ++i) {
    if (scores[i] > scores[best]) best = i;
  }
  return best;
}

SegmentList BuildMcInput(const corpus::Narrative &narrative,
                         std::string_view continuation,
                         std::optional<std::string_view> inference) {
  SegmentList segments;
  if (inference) segments.emplace_back(*inference);
  segments.push_back(narrative.Text());
  segments.emplace_back(continuation);
  return segments;
}

double SupervisedScore(const Encoder &encoder, const ScoreHead &head,
                       const corpus::Narrative &narrative,
                       std::string_view continuation) {
  return head.Score(encoder.Encode(BuildMcInput(narrative, continuation)));
}

double KnowledgeChoiceScore(const Encoder &encoder, const ScoreHead &head,
                            const corpus::Narrative &narrative,
                            std::string_view continuation,
                            const knowledge::InferenceBundle &bundle) {
  if (bundle.inferences.empty()) {
    throw InvalidArgument("knowledge scoring needs a non-empty bundle");
  }
  double total = 0.0;
  for (const auto &inference : bundle.inferences) {
    total += head.Score(encoder.Encode(
        BuildMcInput(narrative, continuation, inference.verbalized)));
  }
  return total;
}

double ContinuationOnlyScore(const Encoder &encoder, const ScoreHead &head,
                             std::string_view continuation) {
  const SegmentList segments = {std::string(continuation)};
  return head.Score(encoder.Encode(segments));
}

}  // namespace figstory::scoring
