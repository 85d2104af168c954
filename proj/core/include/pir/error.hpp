// Copyright 2026 The pirlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pir {

enum class ErrorCode {
  kNotPrime,
  kFieldMismatch,
  kZeroInverse,
  kSingular,
  kShapeMismatch,
  kBlockOutOfRange,
  kKeyNotFound,
  kBudgetExceeded,
  kNonUniformConditional,
  kInvalidCollusion,
  kSubsetBudgetExceeded,
  kInvalidScheme,
  kParse,
  kInvalidArgument,
  kCorrectnessUnavailable,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Malformed scheme file. `line()` is 1-based; 0 means end of input.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace pir
