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

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <variant>
#include <vector>

#include "pir/field.hpp"

namespace pir {

/// Dense row-major matrix over F_p. Values are immutable once built; every
/// operation returns a fresh matrix.
class FpMatrix {
 public:
  /// rows x cols zero matrix.
  FpMatrix(FieldSpec field, std::size_t rows, std::size_t cols);
  /// Takes ownership of `values` (row-major, reduced mod p on entry).
  FpMatrix(FieldSpec field, std::size_t rows, std::size_t cols,
           std::vector<std::uint32_t> values);
  /// Literal constructor for small matrices: {{1, 2}, {3, 4}}.
  FpMatrix(FieldSpec field,
           std::initializer_list<std::initializer_list<std::uint64_t>> rows);

  static FpMatrix Identity(FieldSpec field, std::size_t n);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  std::uint32_t value(std::size_t r, std::size_t c) const {
    return values_[r * cols_ + c];
  }
  FieldElement at(std::size_t r, std::size_t c) const {
    return {field_, value(r, c)};
  }
  std::span<const std::uint32_t> row(std::size_t r) const {
    return {values_.data() + r * cols_, cols_};
  }
  std::span<const std::uint32_t> values() const noexcept { return values_; }

  bool is_zero() const noexcept;

  /// Copy with entry (r, c) replaced.
  FpMatrix with_entry(std::size_t r, std::size_t c, std::uint64_t v) const;

  FpMatrix transpose() const;
  /// Rows [first, first + count).
  FpMatrix row_slice(std::size_t first, std::size_t count) const;
  /// Rows listed in `indices`, in that order.
  FpMatrix select_rows(std::span<const std::size_t> indices) const;
  /// Columns listed in `indices`, in that order.
  FpMatrix select_column_indices(std::span<const std::size_t> indices) const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> values_;
};

/// Throws Error(kShapeMismatch) / Error(kFieldMismatch).
FpMatrix operator*(const FpMatrix& lhs, const FpMatrix& rhs);
FpMatrix operator+(const FpMatrix& lhs, const FpMatrix& rhs);

/// Stacks `top` over `bottom`. Column counts must agree.
FpMatrix VStack(const FpMatrix& top, const FpMatrix& bottom);

std::ostream& operator<<(std::ostream& os, const FpMatrix& m);

struct RowEchelon {
  FpMatrix reduced;                  // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Gauss-Jordan elimination with first-nonzero pivoting.
RowEchelon ReducedRowEchelon(const FpMatrix& a);

std::size_t Rank(const FpMatrix& a);

/// Row `row` of the right-hand side has no solution.
struct NoSolution {
  std::size_t row;
  friend bool operator==(const NoSolution&, const NoSolution&) = default;
};

/// Finds D with D * a == b (a is r x c, b is t x c, D is t x r). Each row of
/// b is expressed in the row space of a; free variables are set to zero, so
/// the answer is the minimal-pivot solution read off the RREF of a^T.
std::variant<FpMatrix, NoSolution> SolveLeftFactor(const FpMatrix& a,
                                                   const FpMatrix& b);

/// Inverse of a square matrix. Throws Error(kSingular) or
/// Error(kShapeMismatch).
FpMatrix Invert(const FpMatrix& a);

/// Row i is (1, x_i, x_i^2, ..., x_i^(width-1)).
FpMatrix Vandermonde(std::span<const FieldElement> nodes, std::size_t width);

/// Column block k (1-based) of a matrix whose columns are grouped into
/// contiguous blocks of `sub_length`: columns (k-1)*Lw .. k*Lw-1.
struct ColumnBlockIndex {
  std::size_t message;
  std::size_t sub_length;
  friend auto operator<=>(const ColumnBlockIndex&,
                          const ColumnBlockIndex&) = default;
};

/// Concatenates the selected blocks in ascending order. All blocks must share
/// a sub_length that divides a.cols(); throws Error(kBlockOutOfRange).
FpMatrix SelectColumns(const FpMatrix& a,
                       std::span<const ColumnBlockIndex> blocks);

/// Convenience form: 1-based message indices with a common sub-length.
FpMatrix SelectBlocks(const FpMatrix& a, std::span<const std::size_t> messages,
                      std::size_t sub_length);

}  // namespace pir
