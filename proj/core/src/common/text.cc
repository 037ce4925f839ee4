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

#include "figstory/common/text.h"

#include <algorithm>
#include <cctype>

namespace figstory {
namespace {

bool IsAsciiAlnum(unsigned char c) { return c < 0x80 && std::isalnum(c); }

// Length of the punctuation character starting at `pos`, or 0 when the byte
// starts a word character. Recognizes the UTF-8 quotes, dashes and ellipsis.
size_t PunctuationLength(std::string_view text, size_t pos) {
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 0x80) {
    if (std::isalnum(c) || std::isspace(c)) return 0;
    return 1;
  }
  if (c == 0xE2 && pos + 2 < text.size() &&
      static_cast<unsigned char>(text[pos + 1]) == 0x80) {
    switch (static_cast<unsigned char>(text[pos + 2])) {
      case 0x93:  // en dash
      case 0x94:  // em dash
      case 0x98:  // left single quote
      case 0x99:  // right single quote
      case 0x9C:  // left double quote
      case 0x9D:  // right double quote
      case 0xA6:  // ellipsis
        return 3;
      default:
        break;
    }
  }
  return 0;
}

bool IsRightSingleQuote(std::string_view text, size_t pos) {
  return pos + 2 < text.size() && text.compare(pos, 3, "\xE2\x80\x99") == 0;
}

bool StartsWord(std::string_view text, size_t pos) {
  if (pos >= text.size()) return false;
  const auto c = static_cast<unsigned char>(text[pos]);
  if (std::isspace(c)) return false;
  return PunctuationLength(text, pos) == 0;
}

}  // namespace

std::vector<Token> TokenizeWords(std::string_view text) {
  std::vector<Token> tokens;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 0x80 && std::isspace(c)) {
      ++i;
      continue;
    }
    // Internal apostrophes written as U+2019 are part of the word.
    const size_t punct = PunctuationLength(text, i);
    if (punct > 0) {
      tokens.push_back({std::string(text.substr(i, punct)), {i, i + punct}});
      i += punct;
      continue;
    }
    const size_t start = i;
    while (i < n) {
      if (StartsWord(text, i)) {
        ++i;
        continue;
      }
      if ((text[i] == '-' || text[i] == '\'') && i > start &&
          StartsWord(text, i + 1)) {
        ++i;
        continue;
      }
      if (IsRightSingleQuote(text, i) && i > start && StartsWord(text, i + 3)) {
        i += 3;
        continue;
      }
      break;
    }
    tokens.push_back({std::string(text.substr(start, i - start)), {start, i}});
  }
  return tokens;
}

std::vector<std::string> TokenStrings(std::string_view text) {
  std::vector<std::string> out;
  for (auto &token : TokenizeWords(text)) out.push_back(std::move(token.text));
  return out;
}

bool IsPunctuation(std::string_view token) {
  return std::none_of(token.begin(), token.end(), [](char c) {
    return IsAsciiAlnum(static_cast<unsigned char>(c));
  }) && PunctuationLength(token, 0) > 0;
}

std::string ToLower(std::string_view text) {
  std::string out(text);
  for (char &c : out) {
    if (static_cast<unsigned char>(c) < 0x80) {
      c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  return out;
}

std::string Trim(std::string_view text) {
  size_t b = 0;
  size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return std::string(text.substr(b, e - b));
}

std::string NormalizeSpace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

std::vector<std::string> SplitWhitespace(std::string_view text) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    size_t start = i;
    while (i < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    if (i > start) out.emplace_back(text.substr(start, i - start));
  }
  return out;
}

std::vector<std::string> Split(std::string_view text, char delimiter) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = text.find(delimiter, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(text.substr(start));
      break;
    }
    out.emplace_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::string Join(std::span<const std::string> parts, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out.append(sep);
    out.append(parts[i]);
  }
  return out;
}

size_t CountWords(std::string_view text) {
  size_t count = 0;
  for (const auto &word : SplitWhitespace(text)) {
    if (std::any_of(word.begin(), word.end(), [](char c) {
          return IsAsciiAlnum(static_cast<unsigned char>(c)) ||
                 static_cast<unsigned char>(c) >= 0x80;
        })) {
      ++count;
    }
  }
  return count;
}

bool EqualsIgnoreCase(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

}  // namespace figstory
