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

#ifndef FIGSTORY_SCORING_ENCODER_H_
#define FIGSTORY_SCORING_ENCODER_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace figstory::scoring {

inline constexpr std::string_view kDefaultSeparator = "</s>";

using SegmentList = std::vector<std::string>;

// Maps an ordered list of text segments to a pooled start-token vector of
// fixed dimension. Encode must be deterministic (evaluation mode) and safe
// for concurrent read-only use.
class Encoder {
 public:
  virtual ~Encoder() = default;

  virtual size_t dim() const = 0;
  virtual std::string_view separator() const { return kDefaultSeparator; }
  virtual std::vector<double> Encode(
      std::span<const std::string> segments) const = 0;
};

// "a </s> b </s> c" for separator "</s>".
std::string JoinSegments(std::span<const std::string> segments,
                         std::string_view separator);

// Deterministic pseudo-random vectors keyed on the joined input text. Has
// no notion of meaning; used to exercise scoring plumbing end to end.
class HashEncoder : public Encoder {
 public:
  explicit HashEncoder(size_t dim) : dim_(dim) {}

  size_t dim() const override { return dim_; }
  std::vector<double> Encode(
      std::span<const std::string> segments) const override;

 private:
  size_t dim_;
};

}  // namespace figstory::scoring

#endif  // FIGSTORY_SCORING_ENCODER_H_
