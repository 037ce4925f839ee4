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

#include "figstory/evaluation/agreement.h"

#include <fstream>
#include <map>

#include "figstory/common/error.h"
#include "figstory/common/text.h"

namespace figstory::evaluation {

std::string MajorityVote(std::span<const std::string> labels,
                         std::string_view tie_label) {
  if (labels.empty()) throw InvalidArgument("majority vote over no labels");
  std::map<std::string, size_t> counts;
  for (const auto &label : labels) ++counts[label];
  size_t best = 0;
  size_t holders = 0;
  const std::string *winner = nullptr;
  for (const auto &[label, count] : counts) {
    if (count > best) {
      best = count;
      holders = 1;
      winner = &label;
    } else if (count == best) {
      ++holders;
    }
  }
  return holders > 1 ? std::string(tie_label) : *winner;
}

std::string_view ErrorCategoryName(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kInconsistentWithExpression:
      return "inconsistent_with_expression";
    case ErrorCategory::kInconsistentWithNarrative:
      return "inconsistent_with_narrative";
    case ErrorCategory::kSpellingOrGrammar:
      return "spelling_or_grammar";
  }
  return "";
}

ErrorCategory ParseErrorCategory(std::string_view name) {
  for (auto c : {ErrorCategory::kInconsistentWithExpression,
                 ErrorCategory::kInconsistentWithNarrative,
                 ErrorCategory::kSpellingOrGrammar}) {
    if (name == ErrorCategoryName(c)) return c;
  }
  throw InvalidArgument("unknown error category '" + std::string(name) + "'");
}

size_t JudgmentMatrix::ItemIndex(std::string_view item) {
  for (size_t i = 0; i < items_.size(); ++i) {
    if (items_[i] == item) return i;
  }
  items_.emplace_back(item);
  cells_.emplace_back(raters_.size());
  return items_.size() - 1;
}

size_t JudgmentMatrix::RaterIndex(std::string_view rater) {
  for (size_t r = 0; r < raters_.size(); ++r) {
    if (raters_[r] == rater) return r;
  }
  raters_.emplace_back(rater);
  for (auto &row : cells_) row.emplace_back();
  return raters_.size() - 1;
}

void JudgmentMatrix::Set(std::string_view item, std::string_view rater,
                         std::string_view label) {
  const size_t i = ItemIndex(item);
  const size_t r = RaterIndex(rater);
  cells_[i][r] = std::string(label);
}

std::vector<std::string> JudgmentMatrix::ItemLabels(size_t item) const {
  std::vector<std::string> labels;
  for (const auto &cell : cells_.at(item)) {
    if (cell) labels.push_back(*cell);
  }
  return labels;
}

JudgmentMatrix JudgmentMatrix::FromCsv(std::istream &in) {
  JudgmentMatrix matrix;
  std::string line;
  size_t line_no = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    const auto fields = Split(line, ',');
    if (fields.size() != 3) {
      throw FormatError("judgments line " + std::to_string(line_no) +
                        ": expected 3 fields, got " +
                        std::to_string(fields.size()));
    }
    const std::string item = Trim(fields[0]);
    const std::string rater = Trim(fields[1]);
    const std::string label = Trim(fields[2]);
    if (item.empty() || rater.empty() || label.empty()) {
      throw FormatError("judgments line " + std::to_string(line_no) +
                        ": empty field");
    }
    const size_t i = matrix.ItemIndex(item);
    const size_t r = matrix.RaterIndex(rater);
    if (matrix.cells_[i][r]) {
      throw FormatError("judgments line " + std::to_string(line_no) +
                        ": rater '" + rater + "' already judged item '" +
                        item + "'");
    }
    matrix.cells_[i][r] = label;
  }
  if (matrix.items_.empty()) throw InvalidArgument("judgments: no items");
  if (matrix.raters_.size() < 2) {
    throw InvalidArgument("judgments: at least two raters required");
  }
  return matrix;
}

JudgmentMatrix JudgmentMatrix::FromCsvFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open judgments file " + path);
  return FromCsv(in);
}

double KrippendorffAlpha(const JudgmentMatrix &matrix) {
  // Coincidence counts o[c][k], accumulated over pairable items.
  std::map<std::string, std::map<std::string, double>> o;
  size_t pairable = 0;
  for (size_t i = 0; i < matrix.items().size(); ++i) {
    const auto labels = matrix.ItemLabels(i);
    const size_t m = labels.size();
    if (m < 2) continue;
    ++pairable;
    const double w = 1.0 / static_cast<double>(m - 1);
    for (size_t a = 0; a < m; ++a) {
      for (size_t b = 0; b < m; ++b) {
        if (a != b) o[labels[a]][labels[b]] += w;
      }
    }
  }
  if (pairable < 2) {
    throw InvalidArgument("alpha needs at least two items with two ratings");
  }
  std::map<std::string, double> marginal;
  double n = 0.0;
  double observed = 0.0;
  for (const auto &[c, row] : o) {
    for (const auto &[k, count] : row) {
      marginal[c] += count;
      n += count;
      if (c != k) observed += count;
    }
  }
  double expected = 0.0;
  for (const auto &[c, nc] : marginal) {
    for (const auto &[k, nk] : marginal) {
      if (c != k) expected += nc * nk;
    }
  }
  expected /= n - 1.0;
  if (expected == 0.0) return 1.0;
  return 1.0 - observed / expected;
}

}  // namespace figstory::evaluation
