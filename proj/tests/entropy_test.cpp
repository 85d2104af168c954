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

#include <cstdlib>
#include <random>

#include "pir/entropy.hpp"
#include "pir/rate.hpp"
#include "pir/reference.hpp"
#include "pir/verifier.hpp"
#include "support/errors.hpp"
#include "support/oracles.hpp"
#include "support/tables.hpp"

namespace pir {
namespace {

using testing::CodeOf;

Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

TEST(RationalTest, Rendering) {
  EXPECT_EQ(ToString(R(2, 3)), "2/3");
  EXPECT_EQ(ToString(R(6, 3)), "2");
  EXPECT_EQ(ToString(R(0)), "0");
  EXPECT_EQ(ToDecimal(R(2, 3)), "0.666667");
  EXPECT_EQ(ToDecimal(R(3, 5)), "0.600000");
  EXPECT_EQ(ToDecimal(R(4, 7)), "0.571429");
  EXPECT_EQ(ToDecimal(R(1, 8), 2), "0.13");
  EXPECT_EQ(ToDecimal(R(-1, 8), 2), "-0.13");
  EXPECT_EQ(ToDecimal(R(5, 2), 0), "3");
  EXPECT_EQ(ToDecimal(R(-1, 1000), 2), "0.00");
}

TEST(CapacityFormulaTest, Examples) {
  EXPECT_EQ(CapacityFormula(2, 2, 1), R(2, 3));
  EXPECT_EQ(CapacityFormula(3, 2, 2), R(3, 5));
  EXPECT_EQ(CapacityFormula(2, 3), R(4, 7));
  EXPECT_EQ(CapacityFormula(3, 3), R(9, 13));
  EXPECT_EQ(CodeOf([] { CapacityFormula(2, 2, 2); }), ErrorCode::kInvalidCollusion);
  EXPECT_EQ(CodeOf([] { CapacityFormula(2, 2, 0); }), ErrorCode::kInvalidCollusion);
}

TEST(CapacityFormulaTest, DecreasesTowardOneMinusTOverS) {
  Rational previous = CapacityFormula(2, 1);
  EXPECT_EQ(previous, R(1));
  for (std::size_t m = 2; m <= 12; ++m) {
    const Rational c = CapacityFormula(2, m);
    EXPECT_LT(c, previous);
    EXPECT_GT(c, R(1, 2));
    previous = c;
  }
  EXPECT_LT(CapacityFormula(2, 12) - R(1, 2), R(1, 4000));
}

// (1 - T/S) / (1 - (T/S)^M) evaluated term by term.
TEST(CapacityFormulaTest, MatchesRatioForm) {
  for (std::int64_t s = 2; s <= 7; ++s) {
    for (std::int64_t t = 1; t < s; ++t) {
      for (std::size_t m = 1; m <= 6; ++m) {
        Rational ratio_pow(1);
        for (std::size_t i = 0; i < m; ++i) ratio_pow *= R(t, s);
        EXPECT_EQ(CapacityFormula(s, m, t), (R(1) - R(t, s)) / (R(1) - ratio_pow));
      }
    }
  }
}

TEST(ConditionalEntropyTest, ZeroRowIsDeterministic) {
  const FieldSpec f2(2);
  const SchemeTable t = testing::MakeTable(
      2, 2, 2, 1, 2,
      {FpMatrix(f2, {{0, 0}, {1, 0}}), FpMatrix(f2, {{0, 0}, {1, 1}}),
       FpMatrix(f2, {{0, 0}, {0, 1}}), FpMatrix(f2, {{1, 0}, {1, 1}})});
  EXPECT_EQ(ConditionalEntropy(t, 1, 1, GivenServerQuery{}), R(0));
  EXPECT_EQ(ConditionalEntropy(t, 1, 2, GivenServerQuery{}), R(1));
  EXPECT_EQ(ConditionalEntropy(t, 2, 2, GivenQueryAndMessages{{2}}), R(1, 2));
}

TEST(ConditionalEntropyTest, ReferenceDownloadPerServer) {
  // 1 - p^-M: the answer is constant only when q_j is the zero row.
  for (auto [s, m, expected] :
       {std::tuple{2, 2, R(3, 4)}, {2, 3, R(7, 8)}, {3, 2, R(8, 9)}}) {
    const SchemeTable t = BuildReferenceScheme(s, m).table;
    for (std::size_t idx = 1; idx <= t.messages(); ++idx) {
      for (std::size_t j = 1; j <= t.servers(); ++j) {
        EXPECT_EQ(ConditionalEntropy(t, idx, j, GivenServerQuery{}), expected)
            << s << "," << m;
      }
    }
  }
}

TEST(ConditionalEntropyTest, RealizationEntropyMatchesOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint64_t p = trial % 2 ? 3 : 2;
    const SchemeTable t = testing::RandomTable(rng, p, 3, 2, 1 + trial % 2, 2);
    for (std::size_t m = 1; m <= 2; ++m) {
      for (std::size_t f = 0; f < 2; ++f) {
        for (const std::vector<std::size_t>& servers :
             {std::vector<std::size_t>{1}, {2, 3}, {1, 2, 3}}) {
          for (const std::vector<std::size_t>& known :
               {std::vector<std::size_t>{}, {1}, {2}, {1, 2}}) {
            std::vector<std::size_t> rows;
            for (auto j : servers) rows.push_back(j - 1);
            EXPECT_EQ(RealizationEntropy(t, m, f, servers, known),
                      testing::EnumeratedEntropy(
                          t.query(m, f), rows,
                          testing::BlockColumns(t.sub_length(), known)));
          }
        }
      }
    }
  }
}

TEST(BudgetTest, EnumerationCostAndLimits) {
  const SchemeTable t = BuildReferenceScheme(3, 2).table;
  EXPECT_EQ(MessageSpaceSize(t.params()), std::optional<std::uint64_t>(81));
  EXPECT_EQ(EnumerationCost(t), std::optional<std::uint64_t>(18 * 81));
  EXPECT_NO_THROW(RequireWithinBudget(t, 18 * 81));
  EXPECT_EQ(CodeOf([&] { RequireWithinBudget(t, 18 * 81 - 1); }),
            ErrorCode::kBudgetExceeded);
  EXPECT_EQ(CodeOf([&] { RateExact(t, 100); }), ErrorCode::kBudgetExceeded);
  const std::size_t one[] = {1};
  EXPECT_EQ(CodeOf([&] { RealizationEntropy(t, 1, 0, one, {}, 80); }),
            ErrorCode::kBudgetExceeded);

  const auto wide = SchemeParams::Uniform(FieldSpec(2147483647), 2, 4, 2);
  EXPECT_FALSE(MessageSpaceSize(wide).has_value());
}

TEST(BudgetTest, Environment) {
  ::unsetenv("PIR_BUDGET");
  EXPECT_EQ(EnumerationBudgetFromEnvironment(), kDefaultEnumerationBudget);
  ::setenv("PIR_BUDGET", "1234", 1);
  EXPECT_EQ(EnumerationBudgetFromEnvironment(), 1234u);
  ::setenv("PIR_BUDGET", "12x", 1);
  EXPECT_EQ(CodeOf([] { EnumerationBudgetFromEnvironment(); }),
            ErrorCode::kInvalidArgument);
  ::unsetenv("PIR_BUDGET");
}

TEST(RateExactTest, ReferenceAchievesCapacity) {
  for (auto [s, m, expected] : {std::tuple{2, 2, R(2, 3)}, {3, 2, R(3, 4)},
                                {2, 3, R(4, 7)}, {3, 3, R(9, 13)}}) {
    const SchemeTable t = BuildReferenceScheme(s, m).table;
    const RateResult r = RateExact(t);
    EXPECT_EQ(r.rate, expected);
    EXPECT_EQ(r.capacity, CapacityFormula(s, m, 1));
    EXPECT_TRUE(r.achieves);
    ASSERT_EQ(r.per_m_download.size(), t.messages());
    for (std::size_t idx = 1; idx <= t.messages(); ++idx) {
      EXPECT_EQ(r.per_m_download[idx - 1], testing::EnumeratedDownload(t, idx));
    }
  }
}

TEST(RateExactTest, DownloadEverythingFallsShort) {
  const RateResult r = RateExact(testing::DownloadEverythingTable(2, 2));
  EXPECT_EQ(r.rate, R(1, 4));
  EXPECT_EQ(r.per_m_download, (std::vector<Rational>{R(4), R(4)}));
  EXPECT_FALSE(r.achieves);
  const RateResult r3 = RateExact(testing::DownloadEverythingTable(3, 2));
  EXPECT_EQ(r3.rate, R(1, 6));
  EXPECT_LT(r3.rate, r3.capacity);
}

TEST(RateExactTest, NothingDownloadedIsInvalid) {
  const FieldSpec f2(2);
  const SchemeTable t = testing::MakeTable(
      2, 2, 2, 1, 1, {FpMatrix(f2, 2, 2), FpMatrix(f2, {{1, 0}, {0, 0}})});
  EXPECT_EQ(CodeOf([&] { RateExact(t); }), ErrorCode::kInvalidScheme);
}

TEST(RateExactTest, MinimumOverIndices) {
  const FieldSpec f2(2);
  // m=1 downloads two symbols, m=2 one.
  const SchemeTable t = testing::MakeTable(
      2, 2, 2, 1, 1, {FpMatrix(f2, {{1, 0}, {0, 1}}), FpMatrix(f2, {{0, 1}, {0, 0}})});
  const RateResult r = RateExact(t);
  EXPECT_EQ(r.per_m_download, (std::vector<Rational>{R(2), R(1)}));
  EXPECT_EQ(r.rate, R(1, 2));
}

}  // namespace
}  // namespace pir
