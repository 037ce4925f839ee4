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

#include "figstory/corpus/lexicon.h"

#include <algorithm>
#include <fstream>

#include "figstory/common/error.h"
#include "figstory/common/text.h"

namespace figstory::corpus {

void IdiomLexicon::Add(std::string_view phrase, std::string_view definition) {
  IdiomLexiconEntry entry;
  entry.phrase = ToLower(NormalizeSpace(phrase));
  entry.expression = TokenStrings(entry.phrase);
  entry.definition = Trim(definition);
  if (entry.expression.size() < 2) {
    throw InvalidArgument("idiom must have at least two tokens: '" +
                          entry.phrase + "'");
  }
  const bool duplicate =
      std::any_of(entries_.begin(), entries_.end(), [&](const auto &other) {
        return other.expression == entry.expression;
      });
  if (duplicate) {
    throw InvalidArgument("duplicate idiom: '" + entry.phrase + "'");
  }
  entries_.push_back(std::move(entry));
}

IdiomLexicon IdiomLexicon::FromTsv(std::istream &in) {
  IdiomLexicon lexicon;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty() || line[0] == '#') continue;
    const size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw FormatError("lexicon line " + std::to_string(line_number) +
                        ": expected expression<TAB>definition");
    }
    try {
      lexicon.Add(line.substr(0, tab), line.substr(tab + 1));
    } catch (const InvalidArgument &e) {
      throw FormatError("lexicon line " + std::to_string(line_number) + ": " +
                        e.what());
    }
  }
  return lexicon;
}

IdiomLexicon IdiomLexicon::FromTsvFile(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open lexicon " + path.string());
  return FromTsv(in);
}

}  // namespace figstory::corpus
