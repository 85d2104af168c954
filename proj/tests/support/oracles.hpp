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

// Brute-force reference computations used to cross-examine the library.
// Nothing here calls into the elimination or entropy code under test.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pir/matrix.hpp"
#include "pir/rational.hpp"
#include "pir/scheme.hpp"

namespace pir::testing {

/// Rank as log_p of the size of the row span, found by enumerating all
/// p^rows coefficient vectors.
std::size_t SpanRank(const FpMatrix& a);

/// Entropy of (q * w) restricted to the listed rows, conditioned on the
/// columns in `known_columns`, in units of log p. Every message vector is
/// enumerated; each conditional cell must be uniform (checked with counts)
/// and its contribution is log_p of its support size.
Rational EnumeratedEntropy(const FpMatrix& q,
                           const std::vector<std::size_t>& rows,
                           const std::vector<std::size_t>& known_columns);

/// Columns of the listed 1-based message blocks.
std::vector<std::size_t> BlockColumns(std::size_t sub_length,
                                      const std::vector<std::size_t>& blocks);

/// Capacity verdict for standard PIR reached through entropies only:
///   for all i != j: H(X_j | Q, W_m, X_i) = 0, and
///   for all I-bar in [1:M]\{m}: H(X_{1:S} | Q, W_I-bar) = sum_j H(X_j | Q, W_I-bar),
/// for every realization.
bool EntropyCapacityVerdict(const SchemeTable& table);

/// Privacy verdict for T-collusion reached through posteriors: for every
/// T-set and every realized observation the posterior over m, computed by
/// scanning the whole table, is exactly 1/M.
bool PosteriorUniform(const SchemeTable& table, std::size_t collusion);

/// Download H(X_j | Q_j) summed over servers for index m, computed as the
/// key-averaged log_p of distinct answers given the realized q_j.
Rational EnumeratedDownload(const SchemeTable& table, std::size_t m);

}  // namespace pir::testing
