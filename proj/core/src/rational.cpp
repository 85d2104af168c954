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

#include "pir/rational.hpp"

#include <cstdlib>

namespace pir {
namespace {
__extension__ using U128 = unsigned __int128;
}  // namespace

std::string ToString(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string ToDecimal(const Rational& r, int places) {
  // Exact long division.
  const bool negative = r.numerator() < 0;
  std::uint64_t num = static_cast<std::uint64_t>(std::llabs(r.numerator()));
  const std::uint64_t den = static_cast<std::uint64_t>(r.denominator());

  std::uint64_t scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  // Round half away from zero at the last place.
  U128 scaled = static_cast<U128>(num) * scale;
  scaled = (scaled * 2 + den) / (2 * static_cast<U128>(den));
  const auto whole = static_cast<std::uint64_t>(scaled / scale);
  const auto frac = static_cast<std::uint64_t>(scaled % scale);

  std::string out = negative && scaled != 0 ? "-" : "";
  out += std::to_string(whole);
  if (places > 0) {
    std::string f = std::to_string(frac);
    out += '.';
    out += std::string(static_cast<std::size_t>(places) - f.size(), '0');
    out += f;
  }
  return out;
}

}  // namespace pir
