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

#include <benchmark/benchmark.h>

#include <cmath>
#include <string>
#include <vector>

#include "figstory/common/random.h"
#include "figstory/corpus/expression_matcher.h"
#include "figstory/corpus/lexicon.h"
#include "figstory/corpus/tagger.h"
#include "figstory/decoding/generator.h"
#include "figstory/decoding/sampling.h"
#include "figstory/decoding/toy_language_model.h"
#include "figstory/evaluation/metrics.h"

namespace figstory {
namespace {

std::vector<double> RandomLogits(size_t n, Rng &rng) {
  std::vector<double> logits(n);
  for (double &z : logits) z = 4.0 * UniformUnit(rng) - 2.0;
  return logits;
}

void BM_TopKSample(benchmark::State &state) {
  Rng rng(1);
  const auto logits = RandomLogits(static_cast<size_t>(state.range(0)), rng);
  decoding::DecodingConfig config;
  for (auto _ : state) {
    const auto probs = decoding::FilteredDistribution(logits, config);
    benchmark::DoNotOptimize(decoding::SampleToken(probs, rng));
  }
}
BENCHMARK(BM_TopKSample)->Arg(1024)->Arg(50257);

void BM_NucleusSample(benchmark::State &state) {
  Rng rng(2);
  const auto logits = RandomLogits(static_cast<size_t>(state.range(0)), rng);
  decoding::DecodingConfig config;
  config.strategy = decoding::Strategy::kNucleus;
  for (auto _ : state) {
    const auto probs = decoding::FilteredDistribution(logits, config);
    benchmark::DoNotOptimize(decoding::SampleToken(probs, rng));
  }
}
BENCHMARK(BM_NucleusSample)->Arg(1024)->Arg(50257);

void BM_ExpressionMatcher(benchmark::State &state) {
  corpus::IdiomLexicon lexicon;
  const char *words[] = {"break", "the", "ice", "spill", "beans", "hit", "sack",
                         "cake", "piece", "of", "run", "gauntlet", "on", "thin"};
  Rng rng(3);
  for (int i = 0; i < state.range(0); ++i) {
    std::string phrase;
    const size_t len = 2 + rng() % 3;
    for (size_t w = 0; w < len; ++w) {
      phrase += (w ? " " : "") + std::string(words[rng() % 14]);
    }
    lexicon.Add(phrase + " x" + std::to_string(i), "gloss");
  }
  const corpus::ExpressionMatcher matcher(lexicon);
  const corpus::LexiconTagger tagger;
  const auto sentence = corpus::TagSentence(
      "At the party she told a story to break the ice and then spill the beans "
      "about the piece of cake she had to run the gauntlet for.",
      tagger);
  for (auto _ : state) benchmark::DoNotOptimize(matcher.Match(sentence));
}
BENCHMARK(BM_ExpressionMatcher)->Arg(100)->Arg(5000);

void BM_RougeL(benchmark::State &state) {
  Rng rng(4);
  std::vector<std::string> a, b;
  for (int i = 0; i < state.range(0); ++i) {
    a.push_back(std::to_string(rng() % 50));
    b.push_back(std::to_string(rng() % 50));
  }
  for (auto _ : state) benchmark::DoNotOptimize(evaluation::RougeL(a, b));
}
BENCHMARK(BM_RougeL)->Arg(20)->Arg(200);

void BM_EnsembleStep(benchmark::State &state) {
  const size_t vocab = 4096;
  std::vector<std::string> words;
  for (size_t i = 0; i < vocab; ++i) words.push_back("w" + std::to_string(i));
  words[0] = "<eos>";
  words[1] = "<sep1>";
  words[2] = "<sep2>";
  decoding::ToyLanguageModel lm(words, std::nullopt);
  std::vector<decoding::TokenSequence> prompts;
  for (int k = 0; k < state.range(0); ++k) {
    prompts.push_back({static_cast<decoding::TokenId>(3 + k), 1, 4, 2});
  }
  decoding::DecodingConfig config;
  config.max_tokens = 1;
  config.parallel_prompts = state.range(1) != 0;
  Rng rng(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decoding::EnsembleGenerate(lm, prompts, config, rng));
  }
}
BENCHMARK(BM_EnsembleStep)->Args({1, 0})->Args({12, 0})->Args({12, 1});

}  // namespace
}  // namespace figstory

BENCHMARK_MAIN();
