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
#include <cstdint>
#include <vector>

#include "pir/field.hpp"
#include "pir/matrix.hpp"
#include "pir/scheme.hpp"

namespace pir {

/// Cap on p^(M-1) * S! keys for the reference construction.
inline constexpr std::uint64_t kReferenceKeyBudget = 1'000'000;

/// One key of the reference scheme over F_S (S prime).
///
/// `interference` holds Z_k for every k != m, in increasing k; `nodes` is a
/// permutation of F_S giving the evaluation point z_j of server j.
struct ReferenceKey {
  std::vector<std::uint32_t> interference;  // M - 1 entries
  std::vector<std::uint32_t> nodes;         // S entries, pairwise distinct
};

struct ReferenceScheme {
  SchemeTable table;
  std::vector<ReferenceKey> keys;  // keys[f] generated table column f
};

/// (v, v^2, ..., v^(S-1)).
std::vector<std::uint32_t> PowerBlock(const FieldSpec& field, std::uint32_t v,
                                      std::size_t length);

/// p^(M-1) * S!, or nullopt-equivalent UINT64_MAX on overflow.
std::uint64_t ReferenceKeyCount(std::size_t servers, std::size_t messages);

/// Builds the capacity-achieving scheme with p = S, Lw = S - 1 and one answer
/// symbol per server. Server j's query row for index m concatenates, over
/// k in [1:M], PowerBlock(Z_k) for k != m and PowerBlock(z_j) at k = m.
///
/// Keys are ordered with the Z tuple most significant (lexicographic, Z for
/// the lowest k first) and the node permutation least significant
/// (lexicographic). Throws Error(kNotPrime), Error(kInvalidScheme) for M < 2,
/// or Error(kBudgetExceeded) above kReferenceKeyBudget keys.
ReferenceScheme BuildReferenceScheme(std::size_t servers, std::size_t messages);

/// D_m = P * V(z_1..z_S)^-1, where P drops the first coordinate (the
/// interference sum). The nodes are read from block m of the realization, so
/// this works on any table with the reference layout. Throws Error(kSingular)
/// if the nodes repeat.
FpMatrix ReferenceDecoder(const SchemeTable& table, std::size_t m,
                          std::size_t f);

}  // namespace pir
