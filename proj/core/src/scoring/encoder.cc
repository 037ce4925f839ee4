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

#include "figstory/scoring/encoder.h"

#include "figstory/common/random.h"

namespace figstory::scoring {

std::string JoinSegments(std::span<const std::string> segments,
                         std::string_view separator) {
  std::string out;
  for (size_t i = 0; i < segments.size(); ++i) {
    if (i > 0) {
      out.push_back(' ');
      out.append(separator);
      out.push_back(' ');
    }
    out.append(segments[i]);
  }
  return out;
}

std::vector<double> HashEncoder::Encode(
    std::span<const std::string> segments) const {
  Rng rng(Fingerprint(JoinSegments(segments, separator())));
  std::vector<double> out(dim_);
  for (double &v : out) v = 2.0 * UniformUnit(rng) - 1.0;
  return out;
}

}  // namespace figstory::scoring
