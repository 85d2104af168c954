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

#include "pir/field.hpp"

#include <ostream>
#include <string>

#include "pir/error.hpp"

namespace pir {

bool IsPrime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint64_t p) {
  if (p >= kMaxModulus) {
    throw Error(ErrorCode::kNotPrime,
                "modulus " + std::to_string(p) + " must be below 2^31");
  }
  if (!IsPrime(p)) {
    throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  }
  modulus_ = static_cast<std::uint32_t>(p);
}

std::uint32_t FieldSpec::pow(std::uint32_t base,
                             std::uint64_t exponent) const noexcept {
  std::uint32_t result = reduce(1);
  std::uint32_t b = reduce(base);
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, b);
    b = mul(b, b);
    exponent >>= 1;
  }
  return result;
}

std::uint32_t FieldSpec::inv(std::uint32_t a) const {
  a = reduce(a);
  if (a == 0) throw Error(ErrorCode::kZeroInverse, "zero has no inverse");
  // Extended Euclid on (a, p).
  std::int64_t r0 = modulus_, r1 = a;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t t2 = t0 - q * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  if (t0 < 0) t0 += modulus_;
  return static_cast<std::uint32_t>(t0);
}

FieldSpec ValidateField(std::uint64_t p) { return FieldSpec(p); }

void FieldElement::require_same_field(const FieldElement& rhs) const {
  if (field_ != rhs.field_) {
    throw Error(ErrorCode::kFieldMismatch,
                "F_" + std::to_string(field_.modulus()) + " vs F_" +
                    std::to_string(rhs.field_.modulus()));
  }
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  require_same_field(rhs);
  return {field_, field_.add(value_, rhs.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  require_same_field(rhs);
  return {field_, field_.sub(value_, rhs.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  require_same_field(rhs);
  return {field_, field_.mul(value_, rhs.value_)};
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
  return {field_, field_.pow(value_, exponent)};
}

FieldElement FieldElement::inv() const { return {field_, field_.inv(value_)}; }

std::ostream& operator<<(std::ostream& os, const FieldElement& e) {
  return os << e.value();
}

}  // namespace pir
