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

#include <iosfwd>
#include <span>
#include <string>

namespace pir::cli {

// Exit codes. Usage errors follow sysexits(3).
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitNotPrime = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitBadScheme = 4;
inline constexpr int kExitNoDecoder = 5;
inline constexpr int kExitUsage = 64;

/// Runs `pirlab` with args[0] as the program name. Output goes to `out`,
/// diagnostics to `err`.
int Run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pir::cli
