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

#ifndef FIGSTORY_DECODING_TOY_LANGUAGE_MODEL_H_
#define FIGSTORY_DECODING_TOY_LANGUAGE_MODEL_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "figstory/decoding/language_model.h"

namespace figstory::decoding {

// An explicit conditional logit table over a small whitespace-tokenized
// vocabulary, loaded from
//   {"vocab": [...], "eos": id|null, "unk": "<unk>"?,
//    "table": {"tok tok ...": [logits...], ...}}
// Table keys are prefixes written as space-joined tokens. Lookup tries the
// whole prefix, then ever shorter suffixes down to the empty key ""; with
// no hit the distribution is uniform (all-zero logits).
class ToyLanguageModel : public LanguageModel {
 public:
  static ToyLanguageModel FromJsonString(std::string_view json);
  static ToyLanguageModel FromJsonFile(const std::filesystem::path &path);

  ToyLanguageModel(std::vector<std::string> vocab, std::optional<TokenId> eos,
                   std::optional<std::string> unk = std::nullopt);

  // Throws InvalidArgument when a token is unknown or the row has the
  // wrong length.
  void SetRow(std::string_view prefix, std::vector<double> logits);

  size_t vocab_size() const override { return vocab_.size(); }
  std::vector<double> NextLogits(
      std::span<const TokenId> prefix) const override;
  std::optional<TokenId> eos_id() const override { return eos_; }
  std::vector<TokenId> Tokenize(std::string_view text) const override;
  std::string Detokenize(std::span<const TokenId> tokens) const override;
  std::optional<TokenId> SpecialToken(std::string_view name) const override;
  bool IsSentenceTerminator(TokenId token) const override;

  const std::vector<std::string> &vocab() const { return vocab_; }
  TokenId Id(std::string_view token) const;

 private:
  std::vector<std::string> vocab_;
  std::unordered_map<std::string, TokenId> index_;
  std::optional<TokenId> eos_;
  std::optional<TokenId> unk_;
  std::map<std::vector<TokenId>, std::vector<double>> table_;
};

}  // namespace figstory::decoding

#endif  // FIGSTORY_DECODING_TOY_LANGUAGE_MODEL_H_
