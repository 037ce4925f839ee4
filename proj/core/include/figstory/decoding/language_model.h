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

#ifndef FIGSTORY_DECODING_LANGUAGE_MODEL_H_
#define FIGSTORY_DECODING_LANGUAGE_MODEL_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace figstory::decoding {

using TokenId = int32_t;

inline constexpr std::string_view kSep1 = "<sep1>";
inline constexpr std::string_view kSep2 = "<sep2>";

// Next-token logits over a fixed vocabulary. NextLogits must be
// deterministic for a given prefix, return finite values, and be safe to
// call concurrently.
class LanguageModel {
 public:
  virtual ~LanguageModel() = default;

  virtual size_t vocab_size() const = 0;
  virtual std::vector<double> NextLogits(
      std::span<const TokenId> prefix) const = 0;

  // End-of-sequence token, if the model has one.
  virtual std::optional<TokenId> eos_id() const = 0;

  virtual std::vector<TokenId> Tokenize(std::string_view text) const = 0;
  virtual std::string Detokenize(std::span<const TokenId> tokens) const = 0;

  // Id of a registered special token such as kSep1, or nullopt.
  virtual std::optional<TokenId> SpecialToken(std::string_view name) const = 0;

  // Tokens that close a sentence (".", "!", "?"). Used as the stop signal
  // when the model has no eos token.
  virtual bool IsSentenceTerminator(TokenId token) const = 0;
};

}  // namespace figstory::decoding

#endif  // FIGSTORY_DECODING_LANGUAGE_MODEL_H_
