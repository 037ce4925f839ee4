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

#ifndef FIGSTORY_COMMON_ERROR_H_
#define FIGSTORY_COMMON_ERROR_H_

#include <stdexcept>
#include <string>

namespace figstory {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &message) : std::runtime_error(message) {}
};

// Input data does not satisfy an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed file or record (bad TSV row, JSON missing a field, ...).
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace figstory

#endif  // FIGSTORY_COMMON_ERROR_H_
