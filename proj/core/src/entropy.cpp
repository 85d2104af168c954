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

#include "pir/entropy.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>

#include <boost/container_hash/hash.hpp>

#include "pir/error.hpp"

namespace pir {
namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    return boost::hash_range(v.begin(), v.end());
  }
};

// Outcome counts for one conditional cell.
class Histogram {
 public:
  void add(const std::vector<std::uint32_t>& outcome) { ++counts_[outcome]; }

  // Entropy in units of log p. The distribution must be uniform on a support
  // of size p^r; returns r.
  std::int64_t uniform_entropy(std::uint32_t p) const {
    if (counts_.empty()) {
      throw Error(ErrorCode::kNonUniformConditional, "empty conditional cell");
    }
    const std::uint64_t expected = counts_.begin()->second;
    for (const auto& [outcome, count] : counts_) {
      if (count != expected) {
        throw Error(ErrorCode::kNonUniformConditional,
                    "outcome counts " + std::to_string(expected) + " and " +
                        std::to_string(count) + " differ");
      }
    }
    std::uint64_t support = counts_.size();
    std::int64_t r = 0;
    while (support > 1) {
      if (support % p != 0) {
        throw Error(ErrorCode::kNonUniformConditional,
                    "support size " + std::to_string(counts_.size()) +
                        " is not a power of " + std::to_string(p));
      }
      support /= p;
      ++r;
    }
    return r;
  }

 private:
  std::unordered_map<std::vector<std::uint32_t>, std::uint64_t, VectorHash>
      counts_;
};

// Little-endian odometer over `digits` positions of a base-p counter.
// Returns false after the last assignment wraps to all zeros.
bool Advance(std::vector<std::uint32_t>& w, std::span<const std::size_t> digits,
             std::uint32_t p) {
  for (auto i : digits) {
    if (++w[i] < p) return true;
    w[i] = 0;
  }
  return false;
}

void Evaluate(const FpMatrix& q, const std::vector<std::uint32_t>& w,
              std::vector<std::uint32_t>& out) {
  const std::uint64_t p = q.field().modulus();
  out.resize(q.rows());
  for (std::size_t r = 0; r < q.rows(); ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < q.cols(); ++c) {
      acc = (acc + std::uint64_t{q.value(r, c)} * w[c]) % p;
    }
    out[r] = static_cast<std::uint32_t>(acc);
  }
}

std::vector<std::size_t> ColumnsOf(const SchemeParams& params,
                                   std::span<const std::size_t> messages) {
  std::vector<std::size_t> cols;
  for (auto k : messages) {
    if (k < 1 || k > params.messages) {
      throw Error(ErrorCode::kBlockOutOfRange,
                  "message " + std::to_string(k) + " out of range");
    }
    for (std::size_t i = 0; i < params.sub_length; ++i) {
      cols.push_back((k - 1) * params.sub_length + i);
    }
  }
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  return cols;
}

void RequireMessageSpace(const SchemeParams& params, std::uint64_t budget) {
  const auto size = MessageSpaceSize(params);
  if (!size || *size > budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "message space p^(M*Lw) exceeds budget " +
                    std::to_string(budget));
  }
}

}  // namespace

std::uint64_t EnumerationBudgetFromEnvironment() {
  const char* raw = std::getenv("PIR_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultEnumerationBudget;
  std::string_view text(raw);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "PIR_BUDGET must be a non-negative integer, got '" +
                    std::string(text) + "'");
  }
  return v;
}

std::optional<std::uint64_t> MessageSpaceSize(const SchemeParams& params) {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < params.width(); ++i) {
    if (size > UINT64_MAX / params.field.modulus()) return std::nullopt;
    size *= params.field.modulus();
  }
  return size;
}

std::optional<std::uint64_t> EnumerationCost(const SchemeTable& table) {
  const auto space = MessageSpaceSize(table.params());
  if (!space || *space > UINT64_MAX / table.key_count()) return std::nullopt;
  return *space * table.key_count();
}

void RequireWithinBudget(const SchemeTable& table, std::uint64_t budget) {
  const auto cost = EnumerationCost(table);
  if (!cost || *cost > budget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "|keys| * p^(M*Lw) = " +
                    (cost ? std::to_string(*cost) : std::string("overflow")) +
                    " exceeds budget " + std::to_string(budget));
  }
}

Rational RealizationEntropy(const SchemeTable& table, std::size_t m,
                            std::size_t f, std::span<const std::size_t> servers,
                            std::span<const std::size_t> known_messages,
                            std::uint64_t budget) {
  const SchemeParams& params = table.params();
  RequireMessageSpace(params, budget);
  const FpMatrix q = table.servers_query(m, f, servers);
  const std::uint32_t p = params.field.modulus();

  const std::vector<std::size_t> known = ColumnsOf(params, known_messages);
  std::vector<std::size_t> unknown;
  for (std::size_t c = 0; c < params.width(); ++c) {
    if (!std::binary_search(known.begin(), known.end(), c)) unknown.push_back(c);
  }

  std::vector<std::uint32_t> w(params.width(), 0);
  std::vector<std::uint32_t> x;
  std::int64_t total = 0;
  std::int64_t cells = 0;
  do {
    Histogram cell;
    do {
      Evaluate(q, w, x);
      cell.add(x);
    } while (Advance(w, unknown, p));
    total += cell.uniform_entropy(p);
    ++cells;
  } while (Advance(w, known, p));
  return Rational(total, cells);
}

Rational ConditionalEntropy(const SchemeTable& table, std::size_t m,
                            std::size_t server, const Conditioning& given,
                            std::uint64_t budget) {
  RequireWithinBudget(table, budget);
  const std::size_t keys = table.key_count();

  if (const auto* g = std::get_if<GivenQueryAndMessages>(&given)) {
    const std::size_t servers[] = {server};
    Rational sum = 0;
    for (std::size_t f = 0; f < keys; ++f) {
      sum += RealizationEntropy(table, m, f, servers, g->known_messages, budget);
    }
    return sum / static_cast<std::int64_t>(keys);
  }

  // Given only Q_j: the cell for a realized q_j mixes every key producing it.
  std::map<std::vector<std::uint32_t>, std::vector<std::size_t>> groups;
  for (std::size_t f = 0; f < keys; ++f) {
    const FpMatrix qj = table.server_query(m, f, server);
    groups[{qj.values().begin(), qj.values().end()}].push_back(f);
  }
  const SchemeParams& params = table.params();
  const std::uint32_t p = params.field.modulus();
  std::vector<std::size_t> all(params.width());
  for (std::size_t c = 0; c < all.size(); ++c) all[c] = c;

  Rational sum = 0;
  std::vector<std::uint32_t> x;
  for (const auto& [value, members] : groups) {
    Histogram cell;
    for (auto f : members) {
      const FpMatrix qj = table.server_query(m, f, server);
      std::vector<std::uint32_t> w(params.width(), 0);
      do {
        Evaluate(qj, w, x);
        cell.add(x);
      } while (Advance(w, all, p));
    }
    sum += Rational(cell.uniform_entropy(p) *
                        static_cast<std::int64_t>(members.size()),
                    static_cast<std::int64_t>(keys));
  }
  return sum;
}

}  // namespace pir
