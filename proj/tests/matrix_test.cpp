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

#include "pir/matrix.hpp"
#include "support/errors.hpp"
#include "support/oracles.hpp"

namespace pir {
namespace {

using testing::CodeOf;

const FieldSpec kF2(2);
const FieldSpec kF3(3);
const FieldSpec kF5(5);

TEST(MatrixTest, RankExamples) {
  EXPECT_EQ(Rank(FpMatrix(kF5, {{1, 2}, {2, 4}})), 1u);
  EXPECT_EQ(Rank(FpMatrix(kF5, 3, 4)), 0u);
  EXPECT_EQ(Rank(FpMatrix::Identity(kF3, 3)), 3u);
  EXPECT_EQ(Rank(FpMatrix(kF3, 0, 4)), 0u);
  EXPECT_EQ(Rank(FpMatrix(kF3, 2, 0)), 0u);
}

TEST(MatrixTest, ReducedRowEchelonForm) {
  const RowEchelon e = ReducedRowEchelon(FpMatrix(kF5, {{0, 2, 4}, {1, 1, 1}}));
  EXPECT_EQ(e.reduced, FpMatrix(kF5, {{1, 0, 4}, {0, 1, 2}}));
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0, 1}));
}

TEST(MatrixTest, ProductAndShapeErrors) {
  const FpMatrix a(kF5, {{1, 2}, {3, 4}});
  EXPECT_EQ(a * FpMatrix::Identity(kF5, 2), a);
  EXPECT_EQ(a * a, FpMatrix(kF5, {{2, 0}, {0, 2}}));
  EXPECT_EQ(CodeOf([&] { (void)(a * FpMatrix(kF5, 3, 1)); }),
            ErrorCode::kShapeMismatch);
  EXPECT_EQ(CodeOf([&] { (void)(a * FpMatrix::Identity(kF3, 2)); }),
            ErrorCode::kFieldMismatch);
  EXPECT_EQ(CodeOf([&] { (void)VStack(a, FpMatrix(kF5, 1, 3)); }),
            ErrorCode::kShapeMismatch);
}

TEST(MatrixTest, Printing) {
  std::ostringstream os;
  os << FpMatrix(kF3, {{1, 0}, {2, 1}});
  EXPECT_EQ(os.str(), "[1 0; 2 1]");
}

TEST(SolveLeftFactorTest, Examples) {
  auto d = SolveLeftFactor(FpMatrix::Identity(kF2, 2), FpMatrix(kF2, {{1, 0}}));
  ASSERT_TRUE(std::holds_alternative<FpMatrix>(d));
  EXPECT_EQ(std::get<FpMatrix>(d), FpMatrix(kF2, {{1, 0}}));

  d = SolveLeftFactor(FpMatrix(kF2, {{1, 1}, {1, 1}}), FpMatrix(kF2, {{1, 0}}));
  ASSERT_TRUE(std::holds_alternative<NoSolution>(d));
  EXPECT_EQ(std::get<NoSolution>(d).row, 0u);

  d = SolveLeftFactor(FpMatrix(kF2, {{0, 1}, {1, 1}}), FpMatrix(kF2, {{1, 0}}));
  ASSERT_TRUE(std::holds_alternative<FpMatrix>(d));
  EXPECT_EQ(std::get<FpMatrix>(d), FpMatrix(kF2, {{1, 1}}));
}

TEST(SolveLeftFactorTest, ReportsFirstUnreachableRow) {
  const FpMatrix a(kF3, {{1, 0, 0}});
  const FpMatrix b(kF3, {{2, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto d = SolveLeftFactor(a, b);
  ASSERT_TRUE(std::holds_alternative<NoSolution>(d));
  EXPECT_EQ(std::get<NoSolution>(d).row, 1u);
}

TEST(InvertTest, Examples) {
  EXPECT_EQ(Invert(FpMatrix::Identity(kF3, 3)), FpMatrix::Identity(kF3, 3));
  EXPECT_EQ(Invert(FpMatrix(kF2, {{1, 1}, {1, 0}})), FpMatrix(kF2, {{0, 1}, {1, 1}}));
  EXPECT_EQ(CodeOf([] { Invert(FpMatrix(kF2, {{1, 1}, {1, 1}})); }),
            ErrorCode::kSingular);
  EXPECT_EQ(CodeOf([] { Invert(FpMatrix(kF2, 2, 3)); }), ErrorCode::kShapeMismatch);
}

TEST(VandermondeTest, Examples) {
  const std::vector<FieldElement> nodes{{kF3, 0}, {kF3, 1}, {kF3, 2}};
  EXPECT_EQ(Vandermonde(nodes, 3), FpMatrix(kF3, {{1, 0, 0}, {1, 1, 1}, {1, 2, 1}}));
  const std::vector<FieldElement> single{{kF5, 4}};
  EXPECT_EQ(Vandermonde(single, 1), FpMatrix(kF5, {{1}}));
  const std::vector<FieldElement> distinct{{kF5, 1}, {kF5, 3}, {kF5, 4}, {kF5, 0}};
  EXPECT_EQ(Rank(Vandermonde(distinct, 4)), 4u);
}

TEST(VandermondeTest, EverySubsetInvertsUpToSeven) {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    const FieldSpec f(p);
    for (std::uint32_t mask = 1; mask < (1u << p); ++mask) {
      std::vector<FieldElement> nodes;
      for (std::uint32_t v = 0; v < p; ++v) {
        if (mask & (1u << v)) nodes.emplace_back(f, v);
      }
      const FpMatrix v = Vandermonde(nodes, nodes.size());
      EXPECT_EQ(Invert(v) * v, FpMatrix::Identity(f, nodes.size()))
          << "p=" << p << " mask=" << mask;
    }
  }
}

TEST(SelectColumnsTest, Examples) {
  const FpMatrix a(kF5, {{1, 2, 3, 4}});
  const std::vector<ColumnBlockIndex> all{{1, 2}, {2, 2}};
  EXPECT_EQ(SelectColumns(a, all), a);
  const FpMatrix none = SelectColumns(a, {});
  EXPECT_EQ(none.rows(), 1u);
  EXPECT_EQ(none.cols(), 0u);
  EXPECT_EQ(Rank(none), 0u);
  const std::vector<ColumnBlockIndex> second{{2, 2}};
  EXPECT_EQ(SelectColumns(a, second), FpMatrix(kF5, {{3, 4}}));
  const std::size_t reversed[] = {2, 1};
  EXPECT_EQ(SelectBlocks(a, reversed, 2), a);
  const std::vector<ColumnBlockIndex> out_of_range{{3, 2}};
  EXPECT_EQ(CodeOf([&] { SelectColumns(a, out_of_range); }),
            ErrorCode::kBlockOutOfRange);
}

// Every matrix over F_2 and F_3 up to 3x4, with a sample of the F_3 3x4 case.
TEST(RankOracleTest, MatchesSpanEnumeration) {
  std::mt19937_64 rng(7);
  for (std::uint64_t p : {2, 3}) {
    const FieldSpec f(p);
    for (std::size_t rows = 1; rows <= 3; ++rows) {
      for (std::size_t cols = 1; cols <= 4; ++cols) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < rows * cols; ++i) count *= p;
        const bool exhaustive = count <= 20000;
        const std::uint64_t trials = exhaustive ? count : 20000;
        for (std::uint64_t t = 0; t < trials; ++t) {
          std::vector<std::uint32_t> v(rows * cols);
          std::uint64_t code = exhaustive ? t : rng();
          for (auto& x : v) {
            x = static_cast<std::uint32_t>(code % p);
            code /= p;
          }
          const FpMatrix a(f, rows, cols, v);
          ASSERT_EQ(Rank(a), testing::SpanRank(a)) << a;
          ASSERT_EQ(Rank(a.transpose()), Rank(a)) << a;
          const std::size_t all_cols[] = {1};
          ASSERT_EQ(Rank(SelectBlocks(a, all_cols, cols)), Rank(a));
        }
      }
    }
  }
}

TEST(SolveLeftFactorTest, SolutionsRemultiply) {
  std::mt19937_64 rng(11);
  for (std::uint64_t p : {2, 3, 5}) {
    const FieldSpec f(p);
    std::uniform_int_distribution<std::uint32_t> sym(0, static_cast<std::uint32_t>(p - 1));
    for (int t = 0; t < 500; ++t) {
      const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4, k = 1 + rng() % 3;
      std::vector<std::uint32_t> av(r * c), bv(k * c);
      for (auto& x : av) x = sym(rng);
      for (auto& x : bv) x = sym(rng);
      const FpMatrix a(f, r, c, av), b(f, k, c, bv);
      const auto d = SolveLeftFactor(a, b);
      if (const auto* m = std::get_if<FpMatrix>(&d)) {
        EXPECT_EQ(*m * a, b);
      } else {
        // The reported row really is outside the row space.
        const auto row = std::get<NoSolution>(d).row;
        const std::size_t idx[] = {row};
        EXPECT_GT(Rank(VStack(a, b.select_rows(idx))), Rank(a));
      }
    }
  }
}

}  // namespace
}  // namespace pir
