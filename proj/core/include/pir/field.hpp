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

#include <compare>
#include <cstdint>
#include <iosfwd>

namespace pir {

/// A prime field F_p with p < 2^31, so that the product of two residues fits
/// in 64 bits.
class FieldSpec {
 public:
  static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31);

  /// Throws Error(kNotPrime) unless 2 <= p < 2^31 and p is prime.
  explicit FieldSpec(std::uint64_t p);

  std::uint32_t modulus() const noexcept { return modulus_; }

  std::uint32_t reduce(std::uint64_t v) const noexcept {
    return static_cast<std::uint32_t>(v % modulus_);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t s = a + b;  // both < 2^31
    return s >= modulus_ ? s - modulus_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + modulus_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept {
    return a == 0 ? 0 : modulus_ - a;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % modulus_);
  }
  std::uint32_t pow(std::uint32_t base, std::uint64_t exponent) const noexcept;
  /// Throws Error(kZeroInverse) for a == 0.
  std::uint32_t inv(std::uint32_t a) const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint32_t modulus_;
};

/// Trial-division primality test.
bool IsPrime(std::uint64_t n) noexcept;

/// Returns FieldSpec(p), or throws Error(kNotPrime).
FieldSpec ValidateField(std::uint64_t p);

/// A residue tagged with its field. Mixed-field arithmetic throws
/// Error(kFieldMismatch).
class FieldElement {
 public:
  FieldElement(FieldSpec field, std::uint64_t value)
      : field_(field), value_(field.reduce(value)) {}

  static FieldElement Zero(FieldSpec field) { return {field, 0}; }
  static FieldElement One(FieldSpec field) { return {field, 1}; }

  std::uint32_t value() const noexcept { return value_; }
  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator-() const { return {field_, field_.neg(value_)}; }
  FieldElement pow(std::uint64_t exponent) const;
  FieldElement inv() const;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  void require_same_field(const FieldElement& rhs) const;

  FieldSpec field_;
  std::uint32_t value_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

}  // namespace pir
