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

#ifndef FIGSTORY_CORPUS_LEXICON_H_
#define FIGSTORY_CORPUS_LEXICON_H_

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

namespace figstory::corpus {

struct IdiomLexiconEntry {
  // Lowercased surface form, e.g. "been there, done that".
  std::string phrase;
  // Lowercased tokens of `phrase`.
  std::vector<std::string> expression;
  std::string definition;
};

// An ordered idiom list. Entries have at least two tokens and are unique by
// token sequence.
class IdiomLexicon {
 public:
  IdiomLexicon() = default;

  // Reads `expression<TAB>definition` rows. Blank lines and lines starting
  // with '#' are skipped. Throws FormatError naming the offending line.
  static IdiomLexicon FromTsv(std::istream &in);
  static IdiomLexicon FromTsvFile(const std::filesystem::path &path);

  // Throws InvalidArgument on a one-token or duplicate expression.
  void Add(std::string_view phrase, std::string_view definition);

  const std::vector<IdiomLexiconEntry> &entries() const { return entries_; }
  const IdiomLexiconEntry &entry(size_t i) const { return entries_.at(i); }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<IdiomLexiconEntry> entries_;
};

}  // namespace figstory::corpus

#endif  // FIGSTORY_CORPUS_LEXICON_H_
