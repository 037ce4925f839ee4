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

#ifndef FIGSTORY_COMMON_RANDOM_H_
#define FIGSTORY_COMMON_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace figstory {

// All stochastic code draws from this engine; its output sequence is fixed by
// the standard, so seeded runs reproduce across platforms.
using Rng = std::mt19937_64;

// 64-bit FNV-1a.
uint64_t Fingerprint(std::string_view data);

uint64_t SplitMix64(uint64_t x);

// Derives an independent stage seed from the root seed and a stage label.
uint64_t DeriveSeed(uint64_t root_seed, std::string_view stage);

// Uniform double in [0, 1) with 53 random bits.
double UniformUnit(Rng &rng);

}  // namespace figstory

#endif  // FIGSTORY_COMMON_RANDOM_H_
