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

#include "support/tables.hpp"

#include <set>
#include <stdexcept>

namespace pir::testing {

SchemeTable MakeTable(std::uint64_t p, std::size_t servers,
                      std::size_t messages, std::size_t sub_length,
                      std::size_t keys, std::vector<FpMatrix> queries) {
  return SchemeTable(
      SchemeParams::Uniform(FieldSpec(p), servers, messages, sub_length), keys,
      std::move(queries));
}

SchemeTable PlaintextTable() {
  const FieldSpec f2(2);
  return MakeTable(2, 2, 2, 1, 1,
                   {FpMatrix(f2, {{1, 0}, {1, 0}}), FpMatrix(f2, {{0, 1}, {0, 1}})});
}

SchemeTable DownloadEverythingTable(std::size_t servers, std::size_t messages) {
  const FieldSpec f2(2);
  const std::size_t width = messages;
  FpMatrix stacked = FpMatrix::Identity(f2, width);
  for (std::size_t j = 1; j < servers; ++j) {
    stacked = VStack(stacked, FpMatrix::Identity(f2, width));
  }
  SchemeParams params{f2, servers, messages, 1,
                      std::vector<std::size_t>(servers, width)};
  return SchemeTable(params, 1, std::vector<FpMatrix>(messages, stacked));
}

SchemeTable IdentityTable() {
  const FieldSpec f2(2);
  const FpMatrix id = FpMatrix::Identity(f2, 2);
  return MakeTable(2, 2, 2, 1, 1, {id, id});
}

SchemeTable ConstantTable(std::size_t servers) {
  const FieldSpec f2(2);
  FpMatrix q(f2, servers, 2, std::vector<std::uint32_t>(servers * 2, 1));
  return MakeTable(2, servers, 2, 1, 1, {q, q});
}

SchemeTable Mutate(const SchemeTable& table, std::size_t m, std::size_t f,
                   std::size_t row, std::size_t col, std::uint64_t value) {
  std::vector<FpMatrix> queries = table.all_queries();
  auto& q = queries[(m - 1) * table.key_count() + f];
  q = q.with_entry(row, col, value);
  return SchemeTable(table.params(), table.key_count(), std::move(queries));
}

SchemeTable ReplaceRow(const SchemeTable& table, std::size_t m, std::size_t f,
                       std::size_t row, const std::vector<std::uint32_t>& values) {
  std::vector<FpMatrix> queries = table.all_queries();
  auto& q = queries[(m - 1) * table.key_count() + f];
  for (std::size_t c = 0; c < values.size(); ++c) q = q.with_entry(row, c, values[c]);
  return SchemeTable(table.params(), table.key_count(), std::move(queries));
}

std::size_t FindReferenceKey(const ReferenceScheme& scheme,
                             const std::vector<std::uint32_t>& interference,
                             const std::vector<std::uint32_t>& nodes) {
  for (std::size_t f = 0; f < scheme.keys.size(); ++f) {
    if (scheme.keys[f].interference == interference && scheme.keys[f].nodes == nodes) {
      return f;
    }
  }
  throw std::out_of_range("no such reference key");
}

SchemeTable RandomTable(std::mt19937_64& rng, std::uint64_t p,
                        std::size_t servers, std::size_t messages,
                        std::size_t sub_length, std::size_t keys,
                        bool m_independent) {
  const FieldSpec field(p);
  const std::size_t width = messages * sub_length;
  std::uniform_int_distribution<std::uint32_t> symbol(0, static_cast<std::uint32_t>(p - 1));
  auto draw_map = [&] {
    while (true) {
      std::vector<FpMatrix> map;
      std::set<std::vector<std::uint32_t>> seen;
      for (std::size_t f = 0; f < keys; ++f) {
        std::vector<std::uint32_t> v(servers * width);
        for (auto& x : v) x = symbol(rng);
        if (!seen.insert(v).second) break;
        map.emplace_back(field, servers, width, std::move(v));
      }
      if (map.size() == keys) return map;
    }
  };
  std::vector<FpMatrix> queries;
  const auto shared = draw_map();
  for (std::size_t m = 1; m <= messages; ++m) {
    const auto map = m_independent ? shared : draw_map();
    queries.insert(queries.end(), map.begin(), map.end());
  }
  return MakeTable(p, servers, messages, sub_length, keys, std::move(queries));
}

}  // namespace pir::testing
