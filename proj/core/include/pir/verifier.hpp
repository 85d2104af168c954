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
#include <variant>
#include <vector>

#include "pir/entropy.hpp"
#include "pir/matrix.hpp"
#include "pir/rational.hpp"
#include "pir/scheme.hpp"

namespace pir {

// ---------------------------------------------------------------------------
// Correctness: for every (m, f) some D_m satisfies D_m * Q = [O | E | O].
// ---------------------------------------------------------------------------

struct CorrectnessFailure {
  std::size_t m;
  std::size_t f;
  std::size_t row;  // first selector row outside the row space of Q
};

struct CorrectnessResult {
  bool pass = false;
  /// Decoders for every checked realization, indexed (m-1)*K + f. Complete
  /// only when pass is true.
  std::vector<FpMatrix> decoders;
  std::optional<CorrectnessFailure> failure;
};

/// Canonical decoding matrix for one realization.
std::variant<FpMatrix, NoSolution> DecodingMatrix(const SchemeTable& table,
                                                  std::size_t m, std::size_t f);

CorrectnessResult CheckCorrectness(const SchemeTable& table);

// ---------------------------------------------------------------------------
// Privacy: for every colluding set and every realized observation, the number
// of keys producing it is the same for every m.
// ---------------------------------------------------------------------------

struct PrivacyWitness {
  std::vector<std::size_t> servers;     // colluding set, 1-based, ascending
  FpMatrix observed;                    // their stacked query rows
  std::vector<std::size_t> key_counts;  // |{f : psi(m, f)_T = observed}|, per m
};

struct PrivacyResult {
  bool pass = false;
  std::size_t collusion = 1;
  std::optional<PrivacyWitness> witness;
};

/// Per-m key counts for an observation of the servers in `servers`.
std::vector<std::size_t> KeyCounts(const SchemeTable& table,
                                   std::span<const std::size_t> servers,
                                   const FpMatrix& observed);

/// Posterior over m (uniform prior, uniform keys) given the observation.
/// Throws Error(kInvalidArgument) when the observation is never realized.
std::vector<Rational> Posterior(const SchemeTable& table,
                                std::span<const std::size_t> servers,
                                const FpMatrix& observed);

PrivacyResult CheckPrivacyStandard(const SchemeTable& table);

/// Every T-subset of servers. Throws Error(kInvalidCollusion) unless
/// 1 <= T <= S.
PrivacyResult CheckPrivacyColluding(const SchemeTable& table,
                                    std::size_t collusion);

bool Reproduces(const SchemeTable& table, const PrivacyWitness& witness);
bool Reproduces(const SchemeTable& table, const CorrectnessFailure& failure);

// ---------------------------------------------------------------------------
// Capacity rank conditions, checked per realization:
//   interference rank: rank Q[m-bar] equals rank Q_j[m-bar] for each server
//     (standard), or the sum over each T-set of servers (colluding);
//   joint rank: for every subset I-bar of [1:M]\{m} with complement I,
//     rank Q[I] = sum_j rank Q_j[I].
// ---------------------------------------------------------------------------

enum class CapacityCondition { kInterferenceRank, kJointRank };

struct CapacityWitness {
  CapacityCondition condition;
  std::size_t m;
  std::size_t f;
  std::vector<std::size_t> servers;  // server j, or the colluding set
  std::vector<std::size_t> blocks;   // message blocks the ranks are taken over
  std::size_t stacked_rank;          // rank of all S servers' rows
  std::size_t compared_rank;         // per-server rank, or the sum
};

struct CapacityResult {
  bool pass = false;
  std::size_t collusion = 1;
  std::optional<CapacityWitness> witness;
};

/// Subset enumeration is exponential in M; M above this is rejected with
/// Error(kSubsetBudgetExceeded).
inline constexpr std::size_t kMaxSubsetMessages = 20;

CapacityResult CheckCapacityStandard(const SchemeTable& table);

/// Throws Error(kInvalidCollusion) unless 1 <= T < S.
CapacityResult CheckCapacityColluding(const SchemeTable& table,
                                      std::size_t collusion);

bool Reproduces(const SchemeTable& table, const CapacityWitness& witness);

// ---------------------------------------------------------------------------
// Rank/entropy agreement: for every (m, f, j, I-bar), the enumerated
// H(X_j | Q_{1:S}, W_{I-bar}) equals rank Q_j[I] in units of log p.
// ---------------------------------------------------------------------------

struct CrosscheckWitness {
  std::size_t m;
  std::size_t f;
  std::size_t server;
  std::vector<std::size_t> known_messages;  // I-bar
  Rational entropy;
  std::size_t rank;
};

struct CrosscheckResult {
  bool pass = false;
  std::size_t cells = 0;
  std::optional<CrosscheckWitness> witness;
};

CrosscheckResult RankEntropyCrosscheck(
    const SchemeTable& table, std::uint64_t budget = kDefaultEnumerationBudget);

/// Subsets of [1:M] \ {m} in increasing bitmask order, starting with the
/// empty set. Throws Error(kSubsetBudgetExceeded) for M > kMaxSubsetMessages.
std::vector<std::vector<std::size_t>> SubsetsExcluding(std::size_t messages,
                                                       std::size_t m);

/// Complement of `subset` in [1:M].
std::vector<std::size_t> Complement(std::size_t messages,
                                    std::span<const std::size_t> subset);

/// All k-subsets of [1:n], lexicographic.
std::vector<std::vector<std::size_t>> Combinations(std::size_t n, std::size_t k);

}  // namespace pir
