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

#include "figstory/corpus/simile.h"

#include <algorithm>
#include <array>
#include <cctype>

#include "figstory/common/error.h"

namespace figstory::corpus {
namespace {

constexpr std::array<std::string_view, 17> kClauseBoundaries = {
    ",", ";", ":", ".", "!", "?", "(", ")", "\"",
    "\xE2\x80\x94", "\xE2\x80\x93", "\xE2\x80\xA6", "\xE2\x80\x9C",
    "\xE2\x80\x9D", "\xE2\x80\x98", "[", "]"};

// Degree words and fixed "as X as" connectives that are not properties.
constexpr std::array<std::string_view, 30> kNonProperties = {
    "well",     "soon",       "long",      "much",       "many",
    "far",      "little",     "few",       "often",      "just",
    "such",     "same",       "certainly", "really",     "actually",
    "probably", "definitely", "truly",     "honestly",   "especially",
    "particularly", "mostly", "exactly",   "nearly",     "simply",
    "merely",   "only",       "rather",    "quite",      "very"};

bool IsProperty(const TaggedSentence &s, size_t i) {
  if (s.tags[i] != PosTag::kAdj && s.tags[i] != PosTag::kAdv) return false;
  return std::find(kNonProperties.begin(), kNonProperties.end(),
                   s.lowered[i]) == kNonProperties.end();
}

size_t ClauseEnd(const TaggedSentence &s, size_t from) {
  size_t i = from;
  while (i < s.size() && !IsClauseBoundary(s.tokens[i].text)) ++i;
  return i;
}

// Last token before the first preposition (the NP head); vehicles that open
// with a preposition or hold only a pronoun fail.
bool IsNounPhrase(const TaggedSentence &s, TokenSpan vehicle) {
  if (vehicle.empty()) return false;
  size_t head_end = vehicle.begin;
  while (head_end < vehicle.end && !IsPreposition(s.lowered[head_end])) {
    ++head_end;
  }
  if (head_end == vehicle.begin) return false;
  if (vehicle.size() == 1 && s.tags[vehicle.begin] == PosTag::kPron) {
    return false;
  }
  return s.tags[head_end - 1] == PosTag::kNoun;
}

TokenSpan FindTopic(const TaggedSentence &s, size_t pattern_begin) {
  size_t i = pattern_begin;
  while (i > 0) {
    --i;
    if (IsClauseBoundary(s.tokens[i].text)) break;
    const PosTag tag = s.tags[i];
    if (tag == PosTag::kPron) return {i, i + 1};
    if (tag == PosTag::kNoun) {
      size_t begin = i;
      while (begin > 0) {
        const PosTag prev = s.tags[begin - 1];
        if (prev != PosTag::kDet && prev != PosTag::kAdj &&
            prev != PosTag::kNoun) {
          break;
        }
        if (IsClauseBoundary(s.tokens[begin - 1].text)) break;
        --begin;
      }
      return {begin, i + 1};
    }
  }
  return {pattern_begin, pattern_begin};
}

std::string CollapseSpaceRuns(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool in_space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!in_space) out.push_back(' ');
      in_space = true;
    } else {
      out.push_back(c);
      in_space = false;
    }
  }
  return out;
}

}  // namespace

bool IsClauseBoundary(std::string_view token) {
  return std::find(kClauseBoundaries.begin(), kClauseBoundaries.end(),
                   token) != kClauseBoundaries.end();
}

std::string_view ComparatorName(Comparator comparator) {
  return comparator == Comparator::kLike ? "like" : "as...as";
}

std::optional<ExplicitSimile> DetectExplicitSimile(
    const TaggedSentence &sentence) {
  const TaggedSentence &s = sentence;
  const size_t n = s.size();
  for (size_t i = 0; i < n; ++i) {
    ExplicitSimile simile;
    if (s.lowered[i] == "as" && i + 2 < n && IsProperty(s, i + 1) &&
        s.lowered[i + 2] == "as") {
      simile.comparator = Comparator::kAsAs;
      simile.property = {i + 1, i + 2};
      simile.comparator_index = i + 2;
    } else if (s.lowered[i] == "like" && i >= 1 && IsProperty(s, i - 1)) {
      simile.comparator = Comparator::kLike;
      simile.property = {i - 1, i};
      simile.comparator_index = i;
    } else if (s.lowered[i] == "like" && i >= 2 && s.tokens[i - 1].text == "," &&
               IsProperty(s, i - 2)) {
      simile.comparator = Comparator::kLike;
      simile.property = {i - 2, i - 1};
      simile.comparator_index = i;
    } else {
      continue;
    }
    const size_t vehicle_begin = simile.comparator_index + 1;
    simile.vehicle = {vehicle_begin, ClauseEnd(s, vehicle_begin)};
    if (!IsNounPhrase(s, simile.vehicle)) continue;
    simile.topic = FindTopic(s, simile.pattern_begin());
    return simile;
  }
  return std::nullopt;
}

ImplicitSimile ToImplicit(const ExplicitSimile &simile,
                          const TaggedSentence &sentence) {
  const TaggedSentence &s = sentence;
  const size_t n = s.size();
  const TokenSpan prop = simile.property;
  bool well_formed = prop.size() == 1 && prop.end <= n &&
                     simile.comparator_index < n &&
                     simile.vehicle.begin == simile.comparator_index + 1 &&
                     !simile.vehicle.empty() && simile.vehicle.end <= n &&
                     (s.tags[prop.begin] == PosTag::kAdj ||
                      s.tags[prop.begin] == PosTag::kAdv);
  if (well_formed && simile.comparator == Comparator::kAsAs) {
    well_formed = prop.begin >= 1 && s.lowered[prop.begin - 1] == "as" &&
                  simile.comparator_index == prop.end &&
                  s.lowered[prop.end] == "as";
  } else if (well_formed) {
    const size_t c = simile.comparator_index;
    well_formed = s.lowered[c] == "like" &&
                  (c == prop.end ||
                   (c == prop.end + 1 && s.tokens[prop.end].text == ","));
  }
  if (!well_formed) {
    throw InvalidArgument(
        "sentence has no explicit property/comparator to remove: '" + s.text +
        "'");
  }

  const size_t begin_token = simile.pattern_begin();
  const bool has_lead = std::any_of(
      s.tokens.begin(), s.tokens.begin() + static_cast<std::ptrdiff_t>(begin_token),
      [](const Token &t) { return !IsPunctuation(t.text); });
  if (!has_lead) {
    throw InvalidArgument(
        "removing the property would leave the comparator sentence-initial: '" +
        s.text + "'");
  }

  const size_t removal_begin = s.tokens[begin_token].span.begin;
  const size_t removal_end = s.tokens[simile.comparator_index].span.end;
  const size_t vehicle_end = s.tokens[simile.vehicle.end - 1].span.end;

  std::string prefix = NormalizeSpace(s.text.substr(0, removal_begin));
  prefix.push_back(' ');
  const std::string rest = s.text.substr(removal_end);
  const std::string vehicle_part =
      CollapseSpaceRuns(s.text.substr(removal_end, vehicle_end - removal_end));

  ImplicitSimile out;
  out.sentence = Trim(prefix + "like" + CollapseSpaceRuns(rest));
  out.expression.begin = prefix.size();
  out.expression.end = prefix.size() + 4 + vehicle_part.size();
  out.property = s.tokens[prop.begin].text;
  return out;
}

}  // namespace figstory::corpus
