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
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "pir/rational.hpp"
#include "pir/scheme.hpp"

namespace pir {

/// Default cap on |keys| * p^(M*Lw) message/key combinations enumerated by a
/// single entropy computation.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

/// kDefaultEnumerationBudget, or the integer in $PIR_BUDGET when set.
/// Throws Error(kInvalidArgument) for a malformed value.
std::uint64_t EnumerationBudgetFromEnvironment();

/// p^(M*Lw), or nullopt on 64-bit overflow.
std::optional<std::uint64_t> MessageSpaceSize(const SchemeParams& params);

/// |keys| * p^(M*Lw), or nullopt on 64-bit overflow.
std::optional<std::uint64_t> EnumerationCost(const SchemeTable& table);

/// Throws Error(kBudgetExceeded) when EnumerationCost exceeds `budget`.
void RequireWithinBudget(const SchemeTable& table, std::uint64_t budget);

/// Condition on the server's own query only: H(X_j | Q_j).
struct GivenServerQuery {};
/// Condition on the full stacked query and the listed message blocks:
/// H(X_j | Q_{1:S}, W_known).
struct GivenQueryAndMessages {
  std::vector<std::size_t> known_messages;  // 1-based, subset of [1:M]
};
using Conditioning = std::variant<GivenServerQuery, GivenQueryAndMessages>;

/// H(X_servers | Q_{1:S} = psi(m, f), W_known) for one realization, in units
/// of log p. Computed by enumerating every message vector with the key fixed:
/// each conditional cell (one assignment of W_known) is histogrammed, checked
/// to be uniform on p^r outcomes, and contributes r. Throws
/// Error(kNonUniformConditional) if a cell is not uniform, and
/// Error(kBudgetExceeded) if p^(M*Lw) > budget.
Rational RealizationEntropy(const SchemeTable& table, std::size_t m,
                            std::size_t f, std::span<const std::size_t> servers,
                            std::span<const std::size_t> known_messages,
                            std::uint64_t budget = kDefaultEnumerationBudget);

/// Conditional entropy of server j's answer for index m with keys and message
/// symbols uniform, in units of log p. Exhaustive over keys and messages.
Rational ConditionalEntropy(const SchemeTable& table, std::size_t m,
                            std::size_t server, const Conditioning& given,
                            std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace pir
