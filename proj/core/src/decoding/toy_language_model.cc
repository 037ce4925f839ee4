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

#include "figstory/decoding/toy_language_model.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "figstory/common/error.h"
#include "figstory/common/text.h"
#include "json.hpp"

namespace figstory::decoding {

using nlohmann::json;

ToyLanguageModel::ToyLanguageModel(std::vector<std::string> vocab,
                                   std::optional<TokenId> eos,
                                   std::optional<std::string> unk)
    : vocab_(std::move(vocab)), eos_(eos) {
  if (vocab_.empty()) throw InvalidArgument("toy LM vocabulary is empty");
  for (size_t i = 0; i < vocab_.size(); ++i) {
    if (!index_.emplace(vocab_[i], static_cast<TokenId>(i)).second) {
      throw InvalidArgument("duplicate vocabulary entry '" + vocab_[i] + "'");
    }
  }
  if (eos_ && (*eos_ < 0 || static_cast<size_t>(*eos_) >= vocab_.size())) {
    throw InvalidArgument("eos id out of range");
  }
  if (unk) unk_ = Id(*unk);
}

TokenId ToyLanguageModel::Id(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) {
    throw InvalidArgument("token '" + std::string(token) +
                          "' not in toy vocabulary");
  }
  return it->second;
}

void ToyLanguageModel::SetRow(std::string_view prefix,
                              std::vector<double> logits) {
  if (logits.size() != vocab_.size()) {
    throw InvalidArgument("logit row for '" + std::string(prefix) + "' has " +
                          std::to_string(logits.size()) + " entries, expected " +
                          std::to_string(vocab_.size()));
  }
  for (double v : logits) {
    if (!std::isfinite(v)) {
      throw InvalidArgument("non-finite logit in row '" + std::string(prefix) +
                            "'");
    }
  }
  std::vector<TokenId> key;
  for (const auto &token : SplitWhitespace(prefix)) key.push_back(Id(token));
  table_[std::move(key)] = std::move(logits);
}

ToyLanguageModel ToyLanguageModel::FromJsonString(std::string_view text) {
  try {
    const json root = json::parse(text);
    auto vocab = root.at("vocab").get<std::vector<std::string>>();
    std::optional<TokenId> eos;
    if (root.contains("eos") && !root.at("eos").is_null()) {
      eos = root.at("eos").get<TokenId>();
    }
    std::optional<std::string> unk;
    if (root.contains("unk") && !root.at("unk").is_null()) {
      unk = root.at("unk").get<std::string>();
    }
    ToyLanguageModel model(std::move(vocab), eos, unk);
    if (root.contains("table")) {
      for (const auto &[key, row] : root.at("table").items()) {
        model.SetRow(key, row.get<std::vector<double>>());
      }
    }
    return model;
  } catch (const json::exception &e) {
    throw FormatError(std::string("toy LM fixture: ") + e.what());
  } catch (const InvalidArgument &e) {
    throw FormatError(std::string("toy LM fixture: ") + e.what());
  }
}

ToyLanguageModel ToyLanguageModel::FromJsonFile(
    const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open toy LM fixture " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return FromJsonString(buffer.str());
}

std::vector<double> ToyLanguageModel::NextLogits(
    std::span<const TokenId> prefix) const {
  for (size_t start = 0; start <= prefix.size(); ++start) {
    const std::vector<TokenId> key(prefix.begin() + static_cast<std::ptrdiff_t>(start),
                                   prefix.end());
    auto it = table_.find(key);
    if (it != table_.end()) return it->second;
  }
  return std::vector<double>(vocab_.size(), 0.0);
}

std::vector<TokenId> ToyLanguageModel::Tokenize(std::string_view text) const {
  std::vector<TokenId> ids;
  for (const auto &token : SplitWhitespace(text)) {
    auto it = index_.find(token);
    if (it != index_.end()) {
      ids.push_back(it->second);
    } else if (unk_) {
      ids.push_back(*unk_);
    } else {
      throw InvalidArgument("token '" + token + "' not in toy vocabulary");
    }
  }
  return ids;
}

std::string ToyLanguageModel::Detokenize(
    std::span<const TokenId> tokens) const {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out.append(vocab_.at(static_cast<size_t>(tokens[i])));
  }
  return out;
}

std::optional<TokenId> ToyLanguageModel::SpecialToken(
    std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool ToyLanguageModel::IsSentenceTerminator(TokenId token) const {
  const std::string &text = vocab_.at(static_cast<size_t>(token));
  return text == "." || text == "!" || text == "?";
}

}  // namespace figstory::decoding
