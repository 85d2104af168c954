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
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pir/matrix.hpp"
#include "pir/rational.hpp"
#include "pir/scheme.hpp"

namespace pir {

/// SplitMix64 (Steele, Lea, Flood). State advances by 0x9e3779b97f4a7c15 per
/// draw; output is the standard 30/27/31 xor-shift-multiply finalizer.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, n) by rejection on the low residue class. n > 0.
  std::uint64_t uniform(std::uint64_t n);

 private:
  std::uint64_t state_;
};

struct QuerySent {
  std::size_t server;
  FpMatrix query;
};
struct ResponseReceived {
  std::size_t server;
  FpMatrix symbols;
};
struct Decoded {
  FpMatrix block;
  bool matches;
};
using TraceEvent = std::variant<QuerySent, ResponseReceived, Decoded>;

/// One seeded user/server exchange: S QuerySent, S ResponseReceived, one
/// Decoded, in that order.
struct SimulationTrace {
  std::uint64_t seed;
  std::size_t index;
  std::size_t key;
  MessageVector messages;
  std::vector<TraceEvent> events;
};

/// Draws the key (uniform over K) and then each of the M*Lw message symbols
/// (uniform over F_p) from SplitMix64(seed), answers every server, and
/// decodes with the canonical decoding matrix. Throws
/// Error(kInvalidArgument) for m outside [1:M] and
/// Error(kCorrectnessUnavailable) when no decoding matrix exists.
SimulationTrace SimulateRetrieval(const SchemeTable& table, std::size_t m,
                                  std::uint64_t seed);

std::string RenderTrace(const SimulationTrace& trace);

/// What a colluding set of servers can infer from the queries they saw.
struct AdversaryView {
  std::uint64_t seed;
  std::vector<std::size_t> colluding;
  std::size_t true_index;
  std::size_t key;
  FpMatrix observed;
  std::vector<Rational> posterior;  // over m in [1:M]; sums to 1
};

/// Draws m (uniform over [1:M]) and the key from SplitMix64(seed), then
/// computes the exact posterior over m by key counting. `colluding` must be
/// nonempty, within [1:S], without repeats (Error(kInvalidArgument)).
AdversaryView SimulateAdversary(const SchemeTable& table,
                                std::span<const std::size_t> colluding,
                                std::uint64_t seed);

std::string RenderAdversary(const AdversaryView& view);

}  // namespace pir
