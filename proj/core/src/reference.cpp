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

#include "pir/reference.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pir/error.hpp"

namespace pir {

std::vector<std::uint32_t> PowerBlock(const FieldSpec& field, std::uint32_t v,
                                      std::size_t length) {
  std::vector<std::uint32_t> out(length);
  std::uint32_t power = field.reduce(v);
  for (std::size_t i = 0; i < length; ++i) {
    out[i] = power;
    power = field.mul(power, v);
  }
  return out;
}

std::uint64_t ReferenceKeyCount(std::size_t servers, std::size_t messages) {
  std::uint64_t count = 1;
  for (std::size_t i = 1; i < messages; ++i) {
    if (__builtin_mul_overflow(count, std::uint64_t{servers}, &count)) {
      return UINT64_MAX;
    }
  }
  for (std::uint64_t i = 2; i <= servers; ++i) {
    if (__builtin_mul_overflow(count, i, &count)) return UINT64_MAX;
  }
  return count;
}

ReferenceScheme BuildReferenceScheme(std::size_t servers,
                                     std::size_t messages) {
  const FieldSpec field = ValidateField(servers);
  if (messages < 2) {
    throw Error(ErrorCode::kInvalidScheme, "need M >= 2");
  }
  const std::uint64_t key_count = ReferenceKeyCount(servers, messages);
  if (key_count > kReferenceKeyBudget) {
    throw Error(ErrorCode::kBudgetExceeded,
                "reference scheme with S=" + std::to_string(servers) +
                    ", M=" + std::to_string(messages) + " needs " +
                    (key_count == UINT64_MAX ? std::string("too many")
                                             : std::to_string(key_count)) +
                    " keys (limit " + std::to_string(kReferenceKeyBudget) + ")");
  }

  const std::size_t lw = servers - 1;
  const std::uint32_t p = field.modulus();

  std::vector<std::vector<std::uint32_t>> permutations;
  {
    std::vector<std::uint32_t> perm(servers);
    std::iota(perm.begin(), perm.end(), 0u);
    do {
      permutations.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  std::vector<ReferenceKey> keys;
  keys.reserve(key_count);
  std::vector<std::uint32_t> z(messages - 1, 0);
  while (true) {
    for (const auto& perm : permutations) keys.push_back({z, perm});
    // Lexicographic increment; the last entry varies fastest.
    std::size_t i = z.size();
    while (i > 0 && ++z[i - 1] == p) z[--i] = 0;
    if (i == 0) break;
  }

  SchemeParams params = SchemeParams::Uniform(field, servers, messages, lw);
  std::vector<FpMatrix> queries;
  queries.reserve(messages * keys.size());
  for (std::size_t m = 1; m <= messages; ++m) {
    for (const auto& key : keys) {
      std::vector<std::uint32_t> values;
      values.reserve(servers * params.width());
      for (std::size_t j = 0; j < servers; ++j) {
        std::size_t next_z = 0;
        for (std::size_t k = 1; k <= messages; ++k) {
          const std::uint32_t v =
              k == m ? key.nodes[j] : key.interference[next_z++];
          const auto block = PowerBlock(field, v, lw);
          values.insert(values.end(), block.begin(), block.end());
        }
      }
      queries.emplace_back(field, servers, params.width(), std::move(values));
    }
  }
  SchemeTable table(std::move(params), keys.size(), std::move(queries));
  return {std::move(table), std::move(keys)};
}

FpMatrix ReferenceDecoder(const SchemeTable& table, std::size_t m,
                          std::size_t f) {
  const FpMatrix& q = table.query(m, f);
  const std::size_t s = table.servers();
  if (q.rows() != s || table.sub_length() + 1 != s) {
    throw Error(ErrorCode::kShapeMismatch,
                "table does not have the reference layout");
  }
  std::vector<FieldElement> nodes;
  nodes.reserve(s);
  const std::size_t column = (m - 1) * table.sub_length();
  for (std::size_t j = 0; j < s; ++j) nodes.push_back(q.at(j, column));

  const FpMatrix v_inv = Invert(Vandermonde(nodes, s));
  return v_inv.row_slice(1, s - 1);  // P * V^-1: drop the beta row
}

}  // namespace pir
