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

#ifndef FIGSTORY_COMMON_TEXT_H_
#define FIGSTORY_COMMON_TEXT_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace figstory {

// Half-open byte range [begin, end) into a string.
struct CharSpan {
  size_t begin = 0;
  size_t end = 0;

  size_t size() const { return end - begin; }
  bool operator==(const CharSpan &other) const = default;
};

// Half-open token range [begin, end) into a token sequence.
struct TokenSpan {
  size_t begin = 0;
  size_t end = 0;

  size_t size() const { return end - begin; }
  bool empty() const { return begin == end; }
  bool operator==(const TokenSpan &other) const = default;
};

struct Token {
  std::string text;
  CharSpan span;
};

// Splits text into word and punctuation tokens. Words are runs of letters,
// digits and non-ASCII code points, with internal hyphens and apostrophes
// kept ("street-bought", "isn't"). Every other non-space character is a
// token of its own. Common UTF-8 quotes and dashes count as punctuation.
std::vector<Token> TokenizeWords(std::string_view text);

// Token strings only.
std::vector<std::string> TokenStrings(std::string_view text);

// True when the token has no letter or digit.
bool IsPunctuation(std::string_view token);

std::string ToLower(std::string_view text);
std::string Trim(std::string_view text);

// Collapses every run of whitespace to a single space and trims the ends.
std::string NormalizeSpace(std::string_view text);

std::vector<std::string> SplitWhitespace(std::string_view text);
std::vector<std::string> Split(std::string_view text, char delimiter);
std::string Join(std::span<const std::string> parts, std::string_view sep);

// Number of whitespace-separated tokens containing a letter or digit.
size_t CountWords(std::string_view text);

bool EqualsIgnoreCase(std::string_view a, std::string_view b);

}  // namespace figstory

#endif  // FIGSTORY_COMMON_TEXT_H_
