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

#include "pir/error.hpp"

namespace pir {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kZeroInverse: return "ZeroInverse";
    case ErrorCode::kSingular: return "Singular";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kBlockOutOfRange: return "BlockOutOfRange";
    case ErrorCode::kKeyNotFound: return "KeyNotFound";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kNonUniformConditional: return "NonUniformConditional";
    case ErrorCode::kInvalidCollusion: return "InvalidCollusion";
    case ErrorCode::kSubsetBudgetExceeded: return "SubsetBudgetExceeded";
    case ErrorCode::kInvalidScheme: return "InvalidScheme";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kCorrectnessUnavailable: return "CorrectnessUnavailable";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + what),
      code_(code) {}

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error(ErrorCode::kParse,
            (line == 0 ? std::string("end of input")
                       : "line " + std::to_string(line)) +
                ": " + what),
      line_(line) {}

}  // namespace pir
