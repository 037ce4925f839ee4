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

#ifndef FIGSTORY_HARNESS_COMMANDS_H_
#define FIGSTORY_HARNESS_COMMANDS_H_

#include <cstdint>
#include <string_view>

#include "harness/config.h"

namespace figstory::harness {

// Process exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPartial = 3;
inline constexpr int kExitSchema = 4;

enum class Mode {
  kZeroShot,
  kFewShot,
  kSupervised,
  kKnowledgeLiteral,
  kKnowledgeContext,
  kContinuationOnly,
};

std::string_view ModeName(Mode mode);
Mode ParseMode(std::string_view name);

// Root seed from run.seed. Throws InvalidArgument naming `command` when it
// is unset.
uint64_t RequireSeed(const Config &config, std::string_view command);

// Each command reads everything from `config` and writes into
// paths.output_dir. They return an exit code and throw on errors that the
// caller maps with ExitCodeFor.
int BuildDataset(const Config &config);
int GenKnowledge(const Config &config);
int Score(const Config &config);
int GenerateContinuations(const Config &config);
int Evaluate(const Config &config);

int ExitCodeFor(const std::exception &error);

}  // namespace figstory::harness

#endif  // FIGSTORY_HARNESS_COMMANDS_H_
