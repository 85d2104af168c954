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

#include "pir/rate.hpp"

#include <string>

#include "pir/error.hpp"

namespace pir {
namespace {

std::int64_t CheckedPow(std::int64_t base, std::size_t exponent) {
  std::int64_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (__builtin_mul_overflow(out, base, &out)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "capacity does not fit in 64-bit rationals");
    }
  }
  return out;
}

}  // namespace

Rational CapacityFormula(std::size_t servers, std::size_t messages,
                         std::size_t collusion) {
  if (collusion < 1 || collusion >= servers) {
    throw Error(ErrorCode::kInvalidCollusion,
                "need 1 <= T < S, got T=" + std::to_string(collusion) +
                    " S=" + std::to_string(servers));
  }
  if (messages < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need M >= 1");
  }
  // (1 - T/S) / (1 - (T/S)^M) = S^(M-1) (S - T) / (S^M - T^M).
  const auto s = static_cast<std::int64_t>(servers);
  const auto t = static_cast<std::int64_t>(collusion);
  std::int64_t num = 0;
  if (__builtin_mul_overflow(CheckedPow(s, messages - 1), s - t, &num)) {
    throw Error(ErrorCode::kInvalidArgument,
                "capacity does not fit in 64-bit rationals");
  }
  const std::int64_t den = CheckedPow(s, messages) - CheckedPow(t, messages);
  return Rational(num, den);
}

RateResult RateExact(const SchemeTable& table, std::uint64_t budget) {
  RequireWithinBudget(table, budget);
  RateResult out;
  const auto lw = static_cast<std::int64_t>(table.sub_length());
  for (std::size_t m = 1; m <= table.messages(); ++m) {
    Rational download = 0;
    for (std::size_t j = 1; j <= table.servers(); ++j) {
      download += ConditionalEntropy(table, m, j, GivenServerQuery{}, budget);
    }
    if (download.numerator() == 0) {
      throw Error(ErrorCode::kInvalidScheme,
                  "index " + std::to_string(m) + " downloads nothing");
    }
    out.per_m_download.push_back(download);
    const Rational rate = Rational(lw) / download;
    if (m == 1 || rate < out.rate) out.rate = rate;
  }
  out.capacity = CapacityFormula(table.servers(), table.messages(), 1);
  out.achieves = out.rate == out.capacity;
  return out;
}

}  // namespace pir
