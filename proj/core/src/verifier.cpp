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

#include "pir/verifier.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "pir/error.hpp"

namespace pir {
namespace {

std::vector<std::uint32_t> Key(const FpMatrix& m) {
  return {m.values().begin(), m.values().end()};
}

std::size_t RowsOf(const SchemeParams& params,
                   std::span<const std::size_t> servers) {
  std::size_t rows = 0;
  for (auto j : servers) rows += params.rows_per_server.at(j - 1);
  return rows;
}

bool AllEqual(const std::vector<std::size_t>& counts) {
  return std::adjacent_find(counts.begin(), counts.end(),
                            std::not_equal_to<>()) == counts.end();
}

std::size_t BlockRank(const FpMatrix& q, std::span<const std::size_t> blocks,
                      std::size_t sub_length) {
  return Rank(SelectBlocks(q, blocks, sub_length));
}

// Per-server ranks of the selected blocks for one realization.
std::vector<std::size_t> ServerRanks(const SchemeTable& table, std::size_t m,
                                     std::size_t f,
                                     std::span<const std::size_t> blocks) {
  std::vector<std::size_t> ranks;
  for (std::size_t j = 1; j <= table.servers(); ++j) {
    ranks.push_back(
        BlockRank(table.server_query(m, f, j), blocks, table.sub_length()));
  }
  return ranks;
}

// Shared by the standard and colluding checks: the joint-rank condition for
// one realization. Returns the first violation.
std::optional<CapacityWitness> JointRankViolation(const SchemeTable& table,
                                                  std::size_t m, std::size_t f) {
  const FpMatrix& q = table.query(m, f);
  for (const auto& known : SubsetsExcluding(table.messages(), m)) {
    const auto blocks = Complement(table.messages(), known);
    const std::size_t stacked = BlockRank(q, blocks, table.sub_length());
    const auto ranks = ServerRanks(table, m, f, blocks);
    const std::size_t sum =
        std::accumulate(ranks.begin(), ranks.end(), std::size_t{0});
    if (stacked != sum) {
      std::vector<std::size_t> all(table.servers());
      std::iota(all.begin(), all.end(), std::size_t{1});
      return CapacityWitness{CapacityCondition::kJointRank, m, f, all, blocks,
                             stacked, sum};
    }
  }
  return std::nullopt;
}

void RequireSubsetBudget(const SchemeTable& table) {
  if (table.messages() > kMaxSubsetMessages) {
    throw Error(ErrorCode::kSubsetBudgetExceeded,
                "M = " + std::to_string(table.messages()) + " exceeds " +
                    std::to_string(kMaxSubsetMessages));
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> SubsetsExcluding(std::size_t messages,
                                                       std::size_t m) {
  if (messages > kMaxSubsetMessages) {
    throw Error(ErrorCode::kSubsetBudgetExceeded,
                "M = " + std::to_string(messages) + " exceeds " +
                    std::to_string(kMaxSubsetMessages));
  }
  std::vector<std::size_t> others;
  for (std::size_t k = 1; k <= messages; ++k) {
    if (k != m) others.push_back(k);
  }
  std::vector<std::vector<std::size_t>> out;
  const std::size_t count = std::size_t{1} << others.size();
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < others.size(); ++i) {
      if (mask & (std::size_t{1} << i)) subset.push_back(others[i]);
    }
    out.push_back(std::move(subset));
  }
  return out;
}

std::vector<std::size_t> Complement(std::size_t messages,
                                    std::span<const std::size_t> subset) {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k <= messages; ++k) {
    if (std::find(subset.begin(), subset.end(), k) == subset.end()) {
      out.push_back(k);
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> Combinations(std::size_t n,
                                                   std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), std::size_t{1});
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t t = i; t < k; ++t) c[t] = c[t - 1] + 1;
  }
  return out;
}

std::variant<FpMatrix, NoSolution> DecodingMatrix(const SchemeTable& table,
                                                  std::size_t m,
                                                  std::size_t f) {
  return SolveLeftFactor(table.query(m, f), BlockSelector(table.params(), m));
}

CorrectnessResult CheckCorrectness(const SchemeTable& table) {
  CorrectnessResult out;
  for (std::size_t m = 1; m <= table.messages(); ++m) {
    for (std::size_t f = 0; f < table.key_count(); ++f) {
      auto solved = DecodingMatrix(table, m, f);
      if (auto* none = std::get_if<NoSolution>(&solved)) {
        out.failure = CorrectnessFailure{m, f, none->row};
        return out;
      }
      out.decoders.push_back(std::get<FpMatrix>(std::move(solved)));
    }
  }
  out.pass = true;
  return out;
}

bool Reproduces(const SchemeTable& table, const CorrectnessFailure& failure) {
  const auto solved = DecodingMatrix(table, failure.m, failure.f);
  const auto* none = std::get_if<NoSolution>(&solved);
  return none != nullptr && none->row == failure.row;
}

std::vector<std::size_t> KeyCounts(const SchemeTable& table,
                                   std::span<const std::size_t> servers,
                                   const FpMatrix& observed) {
  std::vector<std::size_t> counts(table.messages(), 0);
  for (std::size_t m = 1; m <= table.messages(); ++m) {
    for (std::size_t f = 0; f < table.key_count(); ++f) {
      if (table.servers_query(m, f, servers) == observed) ++counts[m - 1];
    }
  }
  return counts;
}

std::vector<Rational> Posterior(const SchemeTable& table,
                                std::span<const std::size_t> servers,
                                const FpMatrix& observed) {
  const auto counts = KeyCounts(table, servers, observed);
  const auto total = static_cast<std::int64_t>(
      std::accumulate(counts.begin(), counts.end(), std::size_t{0}));
  if (total == 0) {
    throw Error(ErrorCode::kInvalidArgument, "observation is never realized");
  }
  // Proportional to the per-m key counts.
  std::vector<Rational> out;
  for (auto c : counts) out.emplace_back(static_cast<std::int64_t>(c), total);
  return out;
}

PrivacyResult CheckPrivacyStandard(const SchemeTable& table) {
  return CheckPrivacyColluding(table, 1);
}

PrivacyResult CheckPrivacyColluding(const SchemeTable& table,
                                    std::size_t collusion) {
  if (collusion < 1 || collusion > table.servers()) {
    throw Error(ErrorCode::kInvalidCollusion,
                "need 1 <= T <= S, got T=" + std::to_string(collusion));
  }
  PrivacyResult out;
  out.collusion = collusion;
  for (const auto& servers : Combinations(table.servers(), collusion)) {
    std::map<std::vector<std::uint32_t>, std::vector<std::size_t>> counts;
    for (std::size_t m = 1; m <= table.messages(); ++m) {
      for (std::size_t f = 0; f < table.key_count(); ++f) {
        auto& c = counts[Key(table.servers_query(m, f, servers))];
        if (c.empty()) c.assign(table.messages(), 0);
        ++c[m - 1];
      }
    }
    for (const auto& [observed, c] : counts) {
      if (!AllEqual(c)) {
        out.witness = PrivacyWitness{
            servers,
            FpMatrix(table.field(), RowsOf(table.params(), servers),
                     table.params().width(), observed),
            c};
        return out;
      }
    }
  }
  out.pass = true;
  return out;
}

bool Reproduces(const SchemeTable& table, const PrivacyWitness& witness) {
  const auto counts = KeyCounts(table, witness.servers, witness.observed);
  return counts == witness.key_counts && !AllEqual(counts);
}

CapacityResult CheckCapacityStandard(const SchemeTable& table) {
  RequireSubsetBudget(table);
  CapacityResult out;
  for (std::size_t m = 1; m <= table.messages(); ++m) {
    const std::size_t self[] = {m};
    const auto others = Complement(table.messages(), self);
    for (std::size_t f = 0; f < table.key_count(); ++f) {
      const std::size_t stacked =
          BlockRank(table.query(m, f), others, table.sub_length());
      const auto ranks = ServerRanks(table, m, f, others);
      for (std::size_t j = 1; j <= ranks.size(); ++j) {
        if (ranks[j - 1] != stacked) {
          out.witness = CapacityWitness{CapacityCondition::kInterferenceRank,
                                        m, f, {j}, others, stacked,
                                        ranks[j - 1]};
          return out;
        }
      }
      if (auto violation = JointRankViolation(table, m, f)) {
        out.witness = std::move(violation);
        return out;
      }
    }
  }
  out.pass = true;
  return out;
}

CapacityResult CheckCapacityColluding(const SchemeTable& table,
                                      std::size_t collusion) {
  if (collusion < 1 || collusion >= table.servers()) {
    throw Error(ErrorCode::kInvalidCollusion,
                "need 1 <= T < S, got T=" + std::to_string(collusion));
  }
  RequireSubsetBudget(table);
  CapacityResult out;
  out.collusion = collusion;
  const auto colluding_sets = Combinations(table.servers(), collusion);
  for (std::size_t m = 1; m <= table.messages(); ++m) {
    const std::size_t self[] = {m};
    const auto others = Complement(table.messages(), self);
    for (std::size_t f = 0; f < table.key_count(); ++f) {
      if (auto violation = JointRankViolation(table, m, f)) {
        out.witness = std::move(violation);
        return out;
      }
      const std::size_t stacked =
          BlockRank(table.query(m, f), others, table.sub_length());
      const auto ranks = ServerRanks(table, m, f, others);
      for (const auto& servers : colluding_sets) {
        std::size_t sum = 0;
        for (auto j : servers) sum += ranks[j - 1];
        if (sum != stacked) {
          out.witness = CapacityWitness{CapacityCondition::kInterferenceRank,
                                        m, f, servers, others, stacked, sum};
          return out;
        }
      }
    }
  }
  out.pass = true;
  return out;
}

bool Reproduces(const SchemeTable& table, const CapacityWitness& witness) {
  const std::size_t stacked = BlockRank(table.query(witness.m, witness.f),
                                        witness.blocks, table.sub_length());
  const auto ranks = ServerRanks(table, witness.m, witness.f, witness.blocks);
  std::size_t compared = 0;
  for (auto j : witness.servers) compared += ranks.at(j - 1);
  return stacked == witness.stacked_rank &&
         compared == witness.compared_rank && stacked != compared;
}

CrosscheckResult RankEntropyCrosscheck(const SchemeTable& table,
                                       std::uint64_t budget) {
  RequireWithinBudget(table, budget);
  CrosscheckResult out;
  for (std::size_t m = 1; m <= table.messages(); ++m) {
    const auto subsets = SubsetsExcluding(table.messages(), m);
    for (std::size_t f = 0; f < table.key_count(); ++f) {
      for (const auto& known : subsets) {
        const auto blocks = Complement(table.messages(), known);
        for (std::size_t j = 1; j <= table.servers(); ++j) {
          const std::size_t server[] = {j};
          const Rational h =
              RealizationEntropy(table, m, f, server, known, budget);
          const std::size_t rank =
              BlockRank(table.server_query(m, f, j), blocks, table.sub_length());
          ++out.cells;
          if (h != Rational(static_cast<std::int64_t>(rank))) {
            out.witness = CrosscheckWitness{m, f, j, known, h, rank};
            return out;
          }
        }
      }
    }
  }
  out.pass = true;
  return out;
}

}  // namespace pir
