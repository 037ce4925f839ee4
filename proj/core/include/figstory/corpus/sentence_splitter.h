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

#ifndef FIGSTORY_CORPUS_SENTENCE_SPLITTER_H_
#define FIGSTORY_CORPUS_SENTENCE_SPLITTER_H_

#include <string>
#include <string_view>
#include <vector>

namespace figstory::corpus {

// Splits a raw document into sentences. A sentence ends at a run of '.', '!'
// or '?' (plus any closing quotes or brackets) followed by whitespace or the
// end of the text, unless the word before a single '.' is a known
// abbreviation. A blank line also ends a sentence. Whitespace inside each
// sentence is collapsed to single spaces; no other character is changed.
std::vector<std::string> SegmentSentences(std::string_view text);

// True for abbreviations such as "dr" or "e.g" (lowercase, without the
// final period) that do not end a sentence.
bool IsAbbreviation(std::string_view lowercase_word);

}  // namespace figstory::corpus

#endif  // FIGSTORY_CORPUS_SENTENCE_SPLITTER_H_
