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

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace pir {

/// Exact rational; entropies and rates are stored in units of log p.
using Rational = boost::rational<std::int64_t>;

/// "2/3", or "3" when the denominator is 1.
std::string ToString(const Rational& r);

/// Fixed-point rendering with `places` decimals, rounded half away from zero.
std::string ToDecimal(const Rational& r, int places = 6);

}  // namespace pir
