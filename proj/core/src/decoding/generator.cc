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

#include "figstory/decoding/generator.h"

#include <future>

#include "figstory/common/error.h"

namespace figstory::decoding {
namespace {

void CheckLogits(const LanguageModel &lm, const std::vector<double> &logits) {
  if (logits.size() != lm.vocab_size()) {
    throw Error("language model returned " + std::to_string(logits.size()) +
                " logits for a vocabulary of " +
                std::to_string(lm.vocab_size()));
  }
}

// Draws the next token from `logits`; returns false when decoding stops.
bool Step(const LanguageModel &lm, const std::vector<double> &logits,
          const DecodingConfig &config, Rng &rng, TokenSequence &out) {
  const auto probs = FilteredDistribution(logits, config);
  const TokenId token = SampleToken(probs, rng);
  const auto eos = lm.eos_id();
  if (eos && token == *eos) return false;
  out.push_back(token);
  return eos.has_value() || !lm.IsSentenceTerminator(token);
}

}  // namespace

TokenSequence BuildGenerationPrompt(const LanguageModel &lm,
                                    std::string_view verbalized_inference,
                                    std::string_view narrative) {
  if (verbalized_inference.empty()) {
    throw InvalidArgument("empty inference text");
  }
  const auto sep1 = lm.SpecialToken(kSep1);
  const auto sep2 = lm.SpecialToken(kSep2);
  if (!sep1 || !sep2) {
    throw InvalidArgument("language model does not register <sep1>/<sep2>");
  }
  TokenSequence prompt = lm.Tokenize(verbalized_inference);
  prompt.push_back(*sep1);
  const auto narrative_tokens = lm.Tokenize(narrative);
  prompt.insert(prompt.end(), narrative_tokens.begin(), narrative_tokens.end());
  prompt.push_back(*sep2);
  return prompt;
}

TokenSequence Generate(const LanguageModel &lm,
                       std::span<const TokenId> prompt,
                       const DecodingConfig &config, Rng &rng) {
  config.Validate();
  if (prompt.empty()) throw InvalidArgument("empty prompt");
  TokenSequence context(prompt.begin(), prompt.end());
  TokenSequence out;
  while (out.size() < config.max_tokens) {
    const auto logits = lm.NextLogits(context);
    CheckLogits(lm, logits);
    const size_t before = out.size();
    const bool more = Step(lm, logits, config, rng, out);
    if (out.size() > before) context.push_back(out.back());
    if (!more) break;
  }
  return out;
}

TokenSequence EnsembleGenerate(const LanguageModel &lm,
                               std::span<const TokenSequence> prompts,
                               const DecodingConfig &config, Rng &rng) {
  config.Validate();
  if (prompts.empty()) throw InvalidArgument("empty prompt set");
  const auto sep2 = lm.SpecialToken(kSep2);
  for (const auto &prompt : prompts) {
    if (prompt.empty()) throw InvalidArgument("empty prompt in ensemble");
    if (sep2 && prompt.back() != *sep2) {
      throw InvalidArgument("ensemble prompt does not end with <sep2>");
    }
  }

  std::vector<TokenSequence> contexts(prompts.begin(), prompts.end());
  TokenSequence out;
  std::vector<std::vector<double>> per_prompt(contexts.size());
  while (out.size() < config.max_tokens) {
    if (config.parallel_prompts && contexts.size() > 1) {
      std::vector<std::future<std::vector<double>>> pending;
      pending.reserve(contexts.size());
      for (const auto &context : contexts) {
        pending.push_back(std::async(std::launch::async, [&lm, &context] {
          return lm.NextLogits(context);
        }));
      }
      for (size_t j = 0; j < pending.size(); ++j) per_prompt[j] = pending[j].get();
    } else {
      for (size_t j = 0; j < contexts.size(); ++j) {
        per_prompt[j] = lm.NextLogits(contexts[j]);
      }
    }
    // Fixed index order keeps the floating-point sum reproducible.
    std::vector<double> summed(lm.vocab_size(), 0.0);
    for (const auto &logits : per_prompt) {
      CheckLogits(lm, logits);
      for (size_t v = 0; v < summed.size(); ++v) summed[v] += logits[v];
    }
    const size_t before = out.size();
    const bool more = Step(lm, summed, config, rng, out);
    if (out.size() > before) {
      for (auto &context : contexts) context.push_back(out.back());
    }
    if (!more) break;
  }
  return out;
}

}  // namespace figstory::decoding
