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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "pir/error.hpp"
#include "pir/field.hpp"
#include "support/errors.hpp"

namespace pir {
namespace {

using testing::CodeOf;

TEST(FieldSpecTest, AcceptsPrimes) {
  EXPECT_EQ(ValidateField(2).modulus(), 2u);
  EXPECT_EQ(ValidateField(5).modulus(), 5u);
  EXPECT_EQ(FieldSpec(2147483647).modulus(), 2147483647u);
}

TEST(FieldSpecTest, RejectsNonPrimes) {
  EXPECT_EQ(CodeOf([] { ValidateField(4); }), ErrorCode::kNotPrime);
  EXPECT_EQ(CodeOf([] { FieldSpec(0); }), ErrorCode::kNotPrime);
  EXPECT_EQ(CodeOf([] { FieldSpec(1); }), ErrorCode::kNotPrime);
  EXPECT_EQ(CodeOf([] { FieldSpec(91); }), ErrorCode::kNotPrime);
  EXPECT_EQ(CodeOf([] { FieldSpec(FieldSpec::kMaxModulus + 11); }),
            ErrorCode::kNotPrime);
}

TEST(FieldSpecTest, IsPrimeMatchesSieve) {
  std::vector<bool> composite(2000, false);
  for (std::uint64_t i = 2; i < 2000; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t k = i * i; k < 2000; k += i) composite[k] = true;
  }
  for (std::uint64_t n = 0; n < 2000; ++n) {
    EXPECT_EQ(IsPrime(n), n >= 2 && !composite[n]) << n;
  }
}

TEST(FieldElementTest, Examples) {
  const FieldSpec f5(5), f3(3), f7(7);
  EXPECT_EQ((FieldElement(f5, 3) * FieldElement(f5, 4)).value(), 2u);
  EXPECT_EQ(FieldElement(f3, 2).pow(2).value(), 1u);
  for (std::uint64_t x = 0; x < 7; ++x) {
    EXPECT_EQ(FieldElement(f7, x) + FieldElement::Zero(f7), FieldElement(f7, x));
  }
  EXPECT_EQ(FieldElement(f5, 2).inv().value(), 3u);
  EXPECT_EQ(FieldElement(f7, 1).inv().value(), 1u);
  EXPECT_EQ(CodeOf([&] { FieldElement::Zero(f3).inv(); }), ErrorCode::kZeroInverse);
}

TEST(FieldElementTest, MixedFieldsThrow) {
  const FieldElement a(FieldSpec(3), 1), b(FieldSpec(5), 1);
  EXPECT_EQ(CodeOf([&] { (void)(a + b); }), ErrorCode::kFieldMismatch);
  EXPECT_EQ(CodeOf([&] { (void)(a * b); }), ErrorCode::kFieldMismatch);
  EXPECT_EQ(CodeOf([&] { (void)(a - b); }), ErrorCode::kFieldMismatch);
}

TEST(FieldElementTest, ReducesOnConstruction) {
  EXPECT_EQ(FieldElement(FieldSpec(7), 23).value(), 2u);
  std::ostringstream os;
  os << FieldElement(FieldSpec(7), 23);
  EXPECT_EQ(os.str(), "2");
}

TEST(FieldElementTest, NegationAndSubtraction) {
  const FieldSpec f7(7);
  for (std::uint64_t a = 0; a < 7; ++a) {
    EXPECT_TRUE((FieldElement(f7, a) + -FieldElement(f7, a)).is_zero());
    for (std::uint64_t b = 0; b < 7; ++b) {
      EXPECT_EQ((FieldElement(f7, a) - FieldElement(f7, b)).value(), (a + 7 - b) % 7);
    }
  }
}

class SmallPrimeTest : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(SmallPrimeTest, InverseAndFermatExhaustive) {
  const FieldSpec f(GetParam());
  for (std::uint64_t a = 1; a < f.modulus(); ++a) {
    const FieldElement x(f, a);
    EXPECT_EQ((x * x.inv()).value(), 1u) << a;
    EXPECT_EQ(x.pow(f.modulus() - 1).value(), 1u) << a;
  }
}

INSTANTIATE_TEST_SUITE_P(UpTo101, SmallPrimeTest,
                         ::testing::Values(2, 3, 5, 7, 11, 13, 17, 19, 23, 29,
                                           31, 37, 41, 43, 47, 53, 59, 61, 67,
                                           71, 73, 79, 83, 89, 97, 101));

TEST(FieldAxiomsTest, ExhaustiveUpToSeven) {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    const FieldSpec f(p);
    for (std::uint64_t a = 0; a < p; ++a) {
      for (std::uint64_t b = 0; b < p; ++b) {
        const FieldElement x(f, a), y(f, b);
        EXPECT_EQ(x + y, y + x);
        EXPECT_EQ(x * y, y * x);
        for (std::uint64_t c = 0; c < p; ++c) {
          const FieldElement z(f, c);
          EXPECT_EQ((x + y) + z, x + (y + z));
          EXPECT_EQ((x * y) * z, x * (y * z));
          EXPECT_EQ(x * (y + z), x * y + x * z);
        }
      }
    }
  }
}

TEST(FieldAxiomsTest, RandomTriplesLargePrime) {
  const FieldSpec f(2147483629);
  std::mt19937_64 rng(20261016);
  for (int i = 0; i < 2000; ++i) {
    const FieldElement x(f, rng()), y(f, rng()), z(f, rng());
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    if (!x.is_zero()) EXPECT_EQ((x * x.inv()).value(), 1u);
  }
}

}  // namespace
}  // namespace pir
