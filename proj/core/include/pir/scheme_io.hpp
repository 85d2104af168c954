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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "pir/scheme.hpp"

namespace pir {

/// Line-oriented text encoding of a SchemeTable:
///
///   pir-scheme v1
///   field <p>
///   servers <S>
///   messages <M>
///   sublength <Lw>
///   rows <rho_1> ... <rho_S>
///   keys <K>
///   realization <m> <f>
///   <sum rho_j lines of M*Lw integers in [0, p)>
///   ...
///
/// Realizations appear m-major then f-major. Serialization is canonical
/// (single spaces, '\n' endings, trailing newline), so identical tables give
/// identical bytes.
std::string SerializeScheme(const SchemeTable& table);

/// Throws ParseError carrying the 1-based offending line, or
/// Error(kInvalidScheme) when the decoded table violates its invariants.
SchemeTable ParseScheme(std::string_view text);
SchemeTable ReadSchemeFile(const std::filesystem::path& path);
void WriteSchemeFile(const std::filesystem::path& path,
                     const SchemeTable& table);

}  // namespace pir
