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

#include "figstory/corpus/sentence_splitter.h"

#include <algorithm>
#include <array>
#include <cctype>

#include "figstory/common/text.h"

namespace figstory::corpus {
namespace {

constexpr std::array<std::string_view, 32> kAbbreviations = {
    "mr",   "mrs",  "ms",   "dr",   "prof", "sr",  "jr",   "st",
    "mt",   "vs",   "etc",  "e.g",  "i.e",  "inc", "ltd",  "co",
    "corp", "gen",  "col",  "capt", "lt",   "sgt", "rev",  "hon",
    "fig",  "dept", "est",  "u.s",  "a.m",  "p.m", "approx", "cf"};

bool IsTerminator(char c) { return c == '.' || c == '!' || c == '?'; }

// Closing quote or bracket length at `pos` (0 if none).
size_t ClosingLength(std::string_view text, size_t pos) {
  const char c = text[pos];
  if (c == '"' || c == '\'' || c == ')' || c == ']') return 1;
  if (pos + 2 < text.size() &&
      (text.compare(pos, 3, "\xE2\x80\x9D") == 0 ||
       text.compare(pos, 3, "\xE2\x80\x99") == 0)) {
    return 3;
  }
  return 0;
}

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)); }

}  // namespace

bool IsAbbreviation(std::string_view lowercase_word) {
  return std::find(kAbbreviations.begin(), kAbbreviations.end(),
                   lowercase_word) != kAbbreviations.end();
}

std::vector<std::string> SegmentSentences(std::string_view text) {
  std::vector<std::string> sentences;
  size_t start = 0;
  auto emit = [&](size_t end) {
    std::string sentence = NormalizeSpace(text.substr(start, end - start));
    if (!sentence.empty()) sentences.push_back(std::move(sentence));
    start = end;
  };

  const size_t n = text.size();
  size_t i = 0;
  while (i < n) {
    const char c = text[i];
    if (c == '\n') {
      size_t j = i + 1;
      while (j < n && text[j] != '\n' && IsSpace(text[j])) ++j;
      if (j < n && text[j] == '\n') {
        emit(i);
        i = j + 1;
        continue;
      }
      ++i;
      continue;
    }
    if (!IsTerminator(c)) {
      ++i;
      continue;
    }

    size_t j = i;
    while (j < n && IsTerminator(text[j])) ++j;
    const size_t run = j - i;
    while (j < n) {
      const size_t closing = ClosingLength(text, j);
      if (closing == 0) break;
      j += closing;
    }
    bool boundary = j == n || IsSpace(text[j]);
    if (boundary && run == 1 && c == '.') {
      size_t k = i;
      while (k > start && (std::isalnum(static_cast<unsigned char>(text[k - 1])) ||
                           text[k - 1] == '.')) {
        --k;
      }
      if (IsAbbreviation(ToLower(text.substr(k, i - k)))) boundary = false;
    }
    if (boundary) emit(j);
    i = j;
  }
  emit(n);
  return sentences;
}

}  // namespace figstory::corpus
