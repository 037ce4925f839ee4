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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "figstory/common/error.h"
#include "figstory/common/random.h"
#include "figstory/decoding/generator.h"
#include "figstory/decoding/sampling.h"
#include "figstory/decoding/toy_language_model.h"

namespace figstory::decoding {
namespace {

using Probs = std::vector<double>;

void ExpectProbs(const Probs &got, const Probs &want, double tol = 1e-12) {
  ASSERT_EQ(got.size(), want.size());
  for (size_t i = 0; i < got.size(); ++i) {
    EXPECT_NEAR(got[i], want[i], tol) << "index " << i;
  }
}

TEST(SamplingTest, SoftmaxAndTemperature) {
  const double logits[] = {std::log(3.0), 0.0};
  ExpectProbs(Softmax(logits), {0.75, 0.25});
  const auto halved = ApplyTemperature(logits, 2.0);
  ExpectProbs(Softmax(halved), {std::sqrt(3.0) / (std::sqrt(3.0) + 1.0),
                                1.0 / (std::sqrt(3.0) + 1.0)});
  EXPECT_THROW(ApplyTemperature(logits, 0.0), InvalidArgument);
}

TEST(SamplingTest, TemperatureHandExample) {
  const double logits[] = {2.0, 0.0};
  const auto scaled = ApplyTemperature(logits, 0.5);
  ExpectProbs(scaled, {4.0, 0.0});
  const double e4 = std::exp(4.0);
  ExpectProbs(Softmax(scaled), {e4 / (e4 + 1.0), 1.0 / (e4 + 1.0)});
  ExpectProbs(ApplyTemperature(logits, 1.0), {2.0, 0.0});
}

TEST(SamplingTest, TemperaturePreservesArgmax) {
  Rng rng(6);
  for (int t = 0; t < 100; ++t) {
    std::vector<double> z(7);
    for (double &v : z) v = UniformUnit(rng) * 6 - 3;
    const double temp = 0.05 + UniformUnit(rng) * 4;
    const auto scaled = ApplyTemperature(z, temp);
    EXPECT_EQ(std::max_element(z.begin(), z.end()) - z.begin(),
              std::max_element(scaled.begin(), scaled.end()) - scaled.begin());
  }
}

TEST(SamplingTest, TopKHandExample) {
  const double logits[] = {3.0, 2.0, 1.0, 0.0};
  const double z = std::exp(3.0) + std::exp(2.0);
  ExpectProbs(TopKFilter(logits, 2), {std::exp(3.0) / z, std::exp(2.0) / z, 0, 0});
  ExpectProbs(TopKFilter(logits, 1), {1.0, 0.0, 0.0, 0.0});
  ExpectProbs(TopKFilter(logits, 4), Softmax(logits));
}

TEST(SamplingTest, TiesPreferLowerTokenId) {
  const double logits[] = {0.0, 1.0, 1.0, 1.0};
  ExpectProbs(TopKFilter(logits, 2), {0.0, 0.5, 0.5, 0.0});
  const double flat[] = {0.0, 0.0, 0.0, 0.0};
  ExpectProbs(NucleusFilter(flat, 0.5), {0.5, 0.5, 0.0, 0.0});
}

// Support size and normalization on random logits, against an independent
// computation of the minimal nucleus.
TEST(SamplingTest, SupportAndNormalizationProperties) {
  Rng rng(10);
  for (int t = 0; t < 300; ++t) {
    const size_t n = 2 + rng() % 30;
    std::vector<double> z(n);
    for (double &v : z) v = UniformUnit(rng) * 8 - 4;
    const size_t k = 1 + rng() % n;
    const auto top = TopKFilter(z, k);
    EXPECT_EQ(static_cast<size_t>(std::count_if(top.begin(), top.end(),
                                                [](double q) { return q > 0; })),
              k);
    EXPECT_NEAR(std::accumulate(top.begin(), top.end(), 0.0), 1.0, 1e-9);

    const double p = 0.05 + UniformUnit(rng) * 0.95;
    const auto nuc = NucleusFilter(z, p);
    EXPECT_NEAR(std::accumulate(nuc.begin(), nuc.end(), 0.0), 1.0, 1e-9);
    auto full = Softmax(z);
    std::sort(full.begin(), full.end(), std::greater<>());
    size_t minimal = 0;
    double mass = 0.0;
    while (mass < p - 1e-12) mass += full[minimal++];
    EXPECT_EQ(static_cast<size_t>(std::count_if(nuc.begin(), nuc.end(),
                                                [](double q) { return q > 0; })),
              minimal);
  }
}

TEST(SamplingTest, TopKKeepsHighestAndRenormalizes) {
  const double logits[] = {std::log(1.0), std::log(4.0), std::log(2.0),
                           std::log(3.0)};
  ExpectProbs(TopKFilter(logits, 2), {0.0, 4.0 / 7.0, 0.0, 3.0 / 7.0});
  ExpectProbs(TopKFilter(logits, 4), {0.1, 0.4, 0.2, 0.3});
  EXPECT_THROW(TopKFilter(logits, 0), InvalidArgument);
  EXPECT_THROW(TopKFilter(logits, 5), InvalidArgument);
}

TEST(SamplingTest, NucleusSmallestPrefix) {
  const double logits[] = {std::log(0.6), std::log(0.3), std::log(0.1)};
  ExpectProbs(NucleusFilter(logits, 0.8), {2.0 / 3.0, 1.0 / 3.0, 0.0});
  // Exact boundary: 0.6 + 0.3 reaches 0.9.
  ExpectProbs(NucleusFilter(logits, 0.9), {2.0 / 3.0, 1.0 / 3.0, 0.0});
  ExpectProbs(NucleusFilter(logits, 0.5), {1.0, 0.0, 0.0});
  ExpectProbs(NucleusFilter(logits, 1.0), {0.6, 0.3, 0.1});
  EXPECT_THROW(NucleusFilter(logits, 0.0), InvalidArgument);
  EXPECT_THROW(NucleusFilter(logits, 1.5), InvalidArgument);
}

TEST(SamplingTest, TemperatureIsAppliedBeforeFiltering) {
  DecodingConfig config;
  config.strategy = Strategy::kNucleus;
  config.temperature = 0.5;
  config.p = 0.75;
  // At T=0.5 the probabilities become 9/10 and 1/10.
  const double logits[] = {std::log(3.0), 0.0};
  ExpectProbs(FilteredDistribution(logits, config), {1.0, 0.0});
  config.temperature = 1.0;
  ExpectProbs(FilteredDistribution(logits, config), {1.0, 0.0});
  config.p = 0.8;
  ExpectProbs(FilteredDistribution(logits, config), {0.75, 0.25});
}

TEST(SamplingTest, TopKClampsToVocabulary) {
  DecodingConfig config;
  config.k = 50;
  config.temperature = 1.0;
  const double logits[] = {0.0, 0.0};
  ExpectProbs(FilteredDistribution(logits, config), {0.5, 0.5});
}

TEST(SamplingTest, ConfigValidation) {
  DecodingConfig c;
  EXPECT_NO_THROW(c.Validate());
  c.k = 0;
  EXPECT_THROW(c.Validate(), InvalidArgument);
  c = {};
  c.p = 0.0;
  EXPECT_THROW(c.Validate(), InvalidArgument);
  c = {};
  c.temperature = -1.0;
  EXPECT_THROW(c.Validate(), InvalidArgument);
}

TEST(SamplingTest, SampleFrequencies) {
  Rng rng(42);
  const Probs probs = {0.2, 0.0, 0.5, 0.3};
  std::vector<int> counts(4, 0);
  const int n = 20000;
  for (int i = 0; i < n; ++i) ++counts[SampleToken(probs, rng)];
  EXPECT_EQ(counts[1], 0);
  for (size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(counts[i] / static_cast<double>(n), probs[i], 0.015);
  }
}

// Vocabulary: <eos> <sep1> <sep2> a b x y z .
ToyLanguageModel TraceModel() {
  ToyLanguageModel lm({"<eos>", "<sep1>", "<sep2>", "a", "b", "x", "y", "z",
                       "."},
                      0);
  lm.SetRow("a <sep1> x <sep2>", {0, 0, 0, 0, 0, 0, 2.0, 1.5, 0});
  lm.SetRow("b <sep1> x <sep2>", {0, 0, 0, 0, 0, 0, 0.0, 1.0, 0});
  lm.SetRow("a <sep1> x <sep2> z", {0, 0, 0, 0, 0, 0, 1.0, 0, 0.5});
  lm.SetRow("b <sep1> x <sep2> z", {0, 0, 0, 0, 0, 0, 0, 0, 2.0});
  lm.SetRow("a <sep1> x <sep2> y", {3.0, 0, 0, 0, 0, 0, 0, 0, 0});
  lm.SetRow("x <sep2> z .", {3.0, 0, 0, 0, 0, 0, 0, 0, 0});
  return lm;
}

DecodingConfig Greedy() {
  DecodingConfig config;
  config.k = 1;
  config.temperature = 1.0;
  return config;
}

TEST(GeneratorTest, BuildPrompt) {
  const auto lm = TraceModel();
  EXPECT_EQ(BuildGenerationPrompt(lm, "a", "x"),
            (TokenSequence{lm.Id("a"), lm.Id("<sep1>"), lm.Id("x"),
                           lm.Id("<sep2>")}));
  EXPECT_THROW(BuildGenerationPrompt(lm, "", "x"), InvalidArgument);
  ToyLanguageModel plain({"a"}, std::nullopt);
  EXPECT_THROW(BuildGenerationPrompt(plain, "a", "a"), InvalidArgument);
}

TEST(GeneratorTest, GreedyHandTrace) {
  const auto lm = TraceModel();
  Rng rng(1);
  const auto p1 = BuildGenerationPrompt(lm, "a", "x");
  // Row for p1 peaks at y; the row after y puts its mass on <eos>.
  EXPECT_EQ(Generate(lm, p1, Greedy(), rng), (TokenSequence{lm.Id("y")}));
  const auto p2 = BuildGenerationPrompt(lm, "b", "x");
  // z, then the p2 row picks "."; the shared suffix row ends with <eos>.
  EXPECT_EQ(Generate(lm, p2, Greedy(), rng),
            (TokenSequence{lm.Id("z"), lm.Id(".")}));
}

TEST(GeneratorTest, EnsembleHandTrace) {
  const auto lm = TraceModel();
  Rng rng(1);
  const std::vector<TokenSequence> prompts = {
      BuildGenerationPrompt(lm, "a", "x"), BuildGenerationPrompt(lm, "b", "x")};
  // Step 1 sums to y=2.0, z=2.5. Step 2 sums to y=1.0, .=2.5. Step 3 both
  // prompts back off to "x <sep2> z ." which peaks at <eos>.
  EXPECT_EQ(EnsembleGenerate(lm, prompts, Greedy(), rng),
            (TokenSequence{lm.Id("z"), lm.Id(".")}));
  auto parallel = Greedy();
  parallel.parallel_prompts = true;
  EXPECT_EQ(EnsembleGenerate(lm, prompts, parallel, rng),
            (TokenSequence{lm.Id("z"), lm.Id(".")}));
}

TEST(GeneratorTest, PromptDetokenizesToTemplate) {
  const auto lm = TraceModel();
  EXPECT_EQ(lm.Detokenize(BuildGenerationPrompt(lm, "x", "y")),
            "x <sep1> y <sep2>");
}

TEST(GeneratorTest, ImmediateEosGivesEmptyContinuation) {
  ToyLanguageModel lm({"<eos>", "a"}, 0);
  lm.SetRow("", {9.0, 0.0});
  Rng rng(0);
  const TokenSequence prompt = {1};
  EXPECT_TRUE(Generate(lm, prompt, Greedy(), rng).empty());
}

TEST(GeneratorTest, IdenticalPromptsGreedyMatchSinglePrompt) {
  const auto lm =
      ToyLanguageModel::FromJsonFile(FIGSTORY_TEST_DATA_DIR "/e2e/toy_lm.json");
  const auto prompt = BuildGenerationPrompt(lm, "PersonX is calm", "he kept the");
  const std::vector<TokenSequence> many(5, prompt);
  Rng a(1), b(1);
  EXPECT_EQ(EnsembleGenerate(lm, many, Greedy(), a),
            Generate(lm, prompt, Greedy(), b));
}

TEST(GeneratorTest, SeededDeterminism) {
  const auto lm =
      ToyLanguageModel::FromJsonFile(FIGSTORY_TEST_DATA_DIR "/e2e/toy_lm.json");
  const std::vector<TokenSequence> prompts = {
      BuildGenerationPrompt(lm, "PersonX is calm", "she smiled ."),
      BuildGenerationPrompt(lm, "PersonX wants money", "she smiled .")};
  DecodingConfig config;
  config.strategy = Strategy::kNucleus;
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Rng a(seed), b(seed);
    EXPECT_EQ(EnsembleGenerate(lm, prompts, config, a),
              EnsembleGenerate(lm, prompts, config, b));
  }
}

TEST(GeneratorTest, MaxTokensCaps) {
  ToyLanguageModel lm({"<eos>", "a"}, 0);
  lm.SetRow("", {0.0, 5.0});
  auto config = Greedy();
  config.max_tokens = 7;
  Rng rng(0);
  const TokenSequence prompt = {1};
  EXPECT_EQ(Generate(lm, prompt, config, rng).size(), 7u);
}

TEST(GeneratorTest, SentenceTerminatorStopsWithoutEos) {
  ToyLanguageModel lm({"a", "."}, std::nullopt);
  lm.SetRow("a", {0.0, 5.0});
  Rng rng(0);
  const TokenSequence prompt = {0};
  EXPECT_EQ(Generate(lm, prompt, Greedy(), rng), (TokenSequence{1}));
}

TEST(GeneratorTest, EnsembleRejectsBadPrompts) {
  const auto lm = TraceModel();
  Rng rng(0);
  EXPECT_THROW(EnsembleGenerate(lm, {}, Greedy(), rng), InvalidArgument);
  const std::vector<TokenSequence> no_sep = {{lm.Id("a")}};
  EXPECT_THROW(EnsembleGenerate(lm, no_sep, Greedy(), rng), InvalidArgument);
}

TEST(GeneratorTest, SingletonEnsembleMatchesGenerate) {
  const auto lm =
      ToyLanguageModel::FromJsonFile(FIGSTORY_TEST_DATA_DIR "/e2e/toy_lm.json");
  const auto prompt = BuildGenerationPrompt(lm, "PersonX is calm", "she smiled .");
  const std::vector<TokenSequence> one = {prompt};
  DecodingConfig config;
  for (uint64_t seed = 0; seed < 30; ++seed) {
    Rng a(seed), b(seed);
    EXPECT_EQ(EnsembleGenerate(lm, one, config, a),
              Generate(lm, prompt, config, b));
  }
}

TEST(ToyLanguageModelTest, BackoffAndFormatErrors) {
  const auto lm = TraceModel();
  // Unseen prefix with no matching suffix falls back to uniform.
  const TokenSequence unseen = {lm.Id("a"), lm.Id("a")};
  EXPECT_EQ(lm.NextLogits(unseen), std::vector<double>(9, 0.0));
  EXPECT_THROW(lm.Tokenize("q"), InvalidArgument);
  EXPECT_EQ(lm.Detokenize(lm.Tokenize("a b")), "a b");
  EXPECT_THROW(ToyLanguageModel::FromJsonString(R"({"vocab": []})"),
               FormatError);
  EXPECT_THROW(ToyLanguageModel::FromJsonString(
                   R"({"vocab": ["a"], "table": {"a": [1, 2]}})"),
               FormatError);
}

}  // namespace
}  // namespace figstory::decoding
