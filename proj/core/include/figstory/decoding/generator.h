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

#ifndef FIGSTORY_DECODING_GENERATOR_H_
#define FIGSTORY_DECODING_GENERATOR_H_

#include <span>
#include <string_view>
#include <vector>

#include "figstory/common/random.h"
#include "figstory/decoding/language_model.h"
#include "figstory/decoding/sampling.h"

namespace figstory::decoding {

using TokenSequence = std::vector<TokenId>;

// tokens(inference) + <sep1> + tokens(narrative) + <sep2>. Throws
// InvalidArgument on an empty inference or if the model lacks either
// separator.
TokenSequence BuildGenerationPrompt(const LanguageModel &lm,
                                    std::string_view verbalized_inference,
                                    std::string_view narrative);

// Samples a continuation of `prompt` (not included in the result). Stops
// after max_tokens, at eos (not emitted), or, for models without eos, after
// emitting a sentence terminator.
TokenSequence Generate(const LanguageModel &lm, std::span<const TokenId> prompt,
                       const DecodingConfig &config, Rng &rng);

// Ensemble-logit decoding: at every step the next-token logits of all
// prompts (each extended by the shared generated suffix) are summed in
// index order, and the next token is drawn from that sum exactly as in
// Generate. When the model registers <sep2>, every prompt must end with it.
TokenSequence EnsembleGenerate(const LanguageModel &lm,
                               std::span<const TokenSequence> prompts,
                               const DecodingConfig &config, Rng &rng);

}  // namespace figstory::decoding

#endif  // FIGSTORY_DECODING_GENERATOR_H_
