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

#include "pir/entropy.hpp"
#include "pir/rational.hpp"
#include "pir/scheme.hpp"

namespace pir {

/// (1 - T/S) / (1 - (T/S)^M). T = 1 is the non-colluding capacity.
/// Throws Error(kInvalidCollusion) unless 1 <= T < S, and
/// Error(kInvalidArgument) when the exact value does not fit in 64 bits.
Rational CapacityFormula(std::size_t servers, std::size_t messages,
                         std::size_t collusion = 1);

struct RateResult {
  Rational rate;                        // min over m of Lw / download(m)
  std::vector<Rational> per_m_download; // sum_j H(X_j | Q_j), units log p
  Rational capacity;                    // CapacityFormula(S, M, 1)
  bool achieves = false;                // rate == capacity, exactly
};

/// Rate of the scheme from enumerated entropies. Throws
/// Error(kBudgetExceeded), Error(kNonUniformConditional), or
/// Error(kInvalidScheme) if some index has zero download.
RateResult RateExact(const SchemeTable& table,
                     std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace pir
