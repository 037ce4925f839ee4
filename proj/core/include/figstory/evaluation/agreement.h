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

#ifndef FIGSTORY_EVALUATION_AGREEMENT_H_
#define FIGSTORY_EVALUATION_AGREEMENT_H_

#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace figstory::evaluation {

inline constexpr std::string_view kDefaultTieLabel = "implausible";

// Most frequent label. When several labels share the top count the result
// is `tie_label`. Throws InvalidArgument on an empty input.
std::string MajorityVote(std::span<const std::string> labels,
                         std::string_view tie_label = kDefaultTieLabel);

// Annotation categories for implausible generations.
enum class ErrorCategory {
  kInconsistentWithExpression,
  kInconsistentWithNarrative,
  kSpellingOrGrammar,
};

std::string_view ErrorCategoryName(ErrorCategory category);
ErrorCategory ParseErrorCategory(std::string_view name);

// Items x raters grid of nominal labels. Cells may be empty.
class JudgmentMatrix {
 public:
  JudgmentMatrix() = default;

  // Reads "item_id,rater_id,label" rows after a header line. Throws
  // FormatError with the line number on malformed rows or a repeated
  // (item, rater) pair, and InvalidArgument if the result has fewer than
  // two raters or no items.
  static JudgmentMatrix FromCsv(std::istream &in);
  static JudgmentMatrix FromCsvFile(const std::string &path);

  // Adds items and raters on first use. Overwrites an existing cell.
  void Set(std::string_view item, std::string_view rater,
           std::string_view label);

  const std::vector<std::string> &items() const { return items_; }
  const std::vector<std::string> &raters() const { return raters_; }
  const std::optional<std::string> &at(size_t item, size_t rater) const {
    return cells_[item][rater];
  }

  // Labels present for one item, in rater order.
  std::vector<std::string> ItemLabels(size_t item) const;

 private:
  size_t ItemIndex(std::string_view item);
  size_t RaterIndex(std::string_view rater);

  std::vector<std::string> items_;
  std::vector<std::string> raters_;
  std::vector<std::vector<std::optional<std::string>>> cells_;
};

// Nominal Krippendorff's alpha from the coincidence matrix. Items with
// fewer than two ratings are not pairable and are skipped. Returns 1.0 when
// expected disagreement is zero. Throws InvalidArgument when fewer than two
// items are pairable.
double KrippendorffAlpha(const JudgmentMatrix &matrix);

}  // namespace figstory::evaluation

#endif  // FIGSTORY_EVALUATION_AGREEMENT_H_
