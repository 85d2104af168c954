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

#include "pir/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "pir/error.hpp"

namespace pir {
namespace {

std::string Shape(const FpMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void RequireSameField(const FpMatrix& a, const FpMatrix& b) {
  if (a.field() != b.field()) {
    throw Error(ErrorCode::kFieldMismatch, "matrices over different fields");
  }
}

// In-place Gauss-Jordan on a row-major buffer; returns pivot columns.
// Only the first `pivot_cols` columns are eligible as pivots.
std::vector<std::size_t> EliminateInPlace(const FieldSpec& f,
                                          std::vector<std::uint32_t>& v,
                                          std::size_t rows, std::size_t cols,
                                          std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && v[sel * cols + c] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r) {
      std::swap_ranges(v.begin() + sel * cols, v.begin() + (sel + 1) * cols,
                       v.begin() + r * cols);
    }
    const std::uint32_t scale = f.inv(v[r * cols + c]);
    for (std::size_t k = 0; k < cols; ++k) {
      v[r * cols + k] = f.mul(v[r * cols + k], scale);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const std::uint32_t factor = v[i * cols + c];
      if (factor == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) {
        v[i * cols + k] =
            f.sub(v[i * cols + k], f.mul(factor, v[r * cols + k]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

FpMatrix::FpMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), values_(rows * cols, 0) {}

FpMatrix::FpMatrix(FieldSpec field, std::size_t rows, std::size_t cols,
                   std::vector<std::uint32_t> values)
    : field_(field), rows_(rows), cols_(cols), values_(std::move(values)) {
  if (values_.size() != rows * cols) {
    throw Error(ErrorCode::kShapeMismatch,
                "expected " + std::to_string(rows * cols) + " entries, got " +
                    std::to_string(values_.size()));
  }
  for (auto& x : values_) x = field_.reduce(x);
}

FpMatrix::FpMatrix(
    FieldSpec field,
    std::initializer_list<std::initializer_list<std::uint64_t>> rows)
    : field_(field), rows_(rows.size()), cols_(0) {
  if (rows_ > 0) cols_ = rows.begin()->size();
  values_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorCode::kShapeMismatch, "ragged matrix literal");
    }
    for (auto x : r) values_.push_back(field_.reduce(x));
  }
}

FpMatrix FpMatrix::Identity(FieldSpec field, std::size_t n) {
  FpMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.values_[i * n + i] = 1;
  return m;
}

bool FpMatrix::is_zero() const noexcept {
  return std::all_of(values_.begin(), values_.end(),
                     [](std::uint32_t x) { return x == 0; });
}

FpMatrix FpMatrix::with_entry(std::size_t r, std::size_t c,
                              std::uint64_t v) const {
  if (r >= rows_ || c >= cols_) {
    throw Error(ErrorCode::kShapeMismatch, "entry outside " + Shape(*this));
  }
  FpMatrix out = *this;
  out.values_[r * cols_ + c] = field_.reduce(v);
  return out;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      t.values_[c * rows_ + r] = values_[r * cols_ + c];
    }
  }
  return t;
}

FpMatrix FpMatrix::row_slice(std::size_t first, std::size_t count) const {
  if (first + count > rows_) {
    throw Error(ErrorCode::kShapeMismatch, "row slice outside " + Shape(*this));
  }
  return FpMatrix(
      field_, count, cols_,
      std::vector<std::uint32_t>(values_.begin() + first * cols_,
                                 values_.begin() + (first + count) * cols_));
}

FpMatrix FpMatrix::select_rows(std::span<const std::size_t> indices) const {
  std::vector<std::uint32_t> out;
  out.reserve(indices.size() * cols_);
  for (auto r : indices) {
    if (r >= rows_) {
      throw Error(ErrorCode::kShapeMismatch, "row index outside " + Shape(*this));
    }
    auto src = row(r);
    out.insert(out.end(), src.begin(), src.end());
  }
  return FpMatrix(field_, indices.size(), cols_, std::move(out));
}

FpMatrix FpMatrix::select_column_indices(
    std::span<const std::size_t> indices) const {
  std::vector<std::uint32_t> out;
  out.reserve(rows_ * indices.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (auto c : indices) {
      if (c >= cols_) {
        throw Error(ErrorCode::kShapeMismatch,
                    "column index outside " + Shape(*this));
      }
      out.push_back(values_[r * cols_ + c]);
    }
  }
  return FpMatrix(field_, rows_, indices.size(), std::move(out));
}

FpMatrix operator*(const FpMatrix& lhs, const FpMatrix& rhs) {
  RequireSameField(lhs, rhs);
  if (lhs.cols() != rhs.rows()) {
    throw Error(ErrorCode::kShapeMismatch,
                "cannot multiply " + Shape(lhs) + " by " + Shape(rhs));
  }
  const FieldSpec& f = lhs.field();
  const std::uint64_t p = f.modulus();
  std::vector<std::uint32_t> out(lhs.rows() * rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < lhs.cols(); ++k) {
        acc = (acc + std::uint64_t{lhs.value(i, k)} * rhs.value(k, j)) % p;
      }
      out[i * rhs.cols() + j] = static_cast<std::uint32_t>(acc);
    }
  }
  return FpMatrix(f, lhs.rows(), rhs.cols(), std::move(out));
}

FpMatrix operator+(const FpMatrix& lhs, const FpMatrix& rhs) {
  RequireSameField(lhs, rhs);
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    throw Error(ErrorCode::kShapeMismatch,
                "cannot add " + Shape(lhs) + " and " + Shape(rhs));
  }
  std::vector<std::uint32_t> out(lhs.values().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = lhs.field().add(lhs.values()[i], rhs.values()[i]);
  }
  return FpMatrix(lhs.field(), lhs.rows(), lhs.cols(), std::move(out));
}

FpMatrix VStack(const FpMatrix& top, const FpMatrix& bottom) {
  RequireSameField(top, bottom);
  if (top.cols() != bottom.cols()) {
    throw Error(ErrorCode::kShapeMismatch,
                "cannot stack " + Shape(top) + " over " + Shape(bottom));
  }
  std::vector<std::uint32_t> out(top.values().begin(), top.values().end());
  out.insert(out.end(), bottom.values().begin(), bottom.values().end());
  return FpMatrix(top.field(), top.rows() + bottom.rows(), top.cols(),
                  std::move(out));
}

std::ostream& operator<<(std::ostream& os, const FpMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r > 0) os << "; ";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) os << ' ';
      os << m.value(r, c);
    }
  }
  return os << ']';
}

RowEchelon ReducedRowEchelon(const FpMatrix& a) {
  std::vector<std::uint32_t> v(a.values().begin(), a.values().end());
  auto pivots = EliminateInPlace(a.field(), v, a.rows(), a.cols(), a.cols());
  return {FpMatrix(a.field(), a.rows(), a.cols(), std::move(v)),
          std::move(pivots)};
}

std::size_t Rank(const FpMatrix& a) {
  if (a.empty()) return 0;
  std::vector<std::uint32_t> v(a.values().begin(), a.values().end());
  return EliminateInPlace(a.field(), v, a.rows(), a.cols(), a.cols()).size();
}

std::variant<FpMatrix, NoSolution> SolveLeftFactor(const FpMatrix& a,
                                                   const FpMatrix& b) {
  RequireSameField(a, b);
  if (a.cols() != b.cols()) {
    throw Error(ErrorCode::kShapeMismatch,
                "left factor of " + Shape(a) + " cannot produce " + Shape(b));
  }
  const FieldSpec& f = a.field();
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();
  const std::size_t t = b.rows();

  // Augmented system [a^T | b^T], c rows by (r + t) columns.
  const std::size_t width = r + t;
  std::vector<std::uint32_t> aug(c * width, 0);
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t k = 0; k < r; ++k) aug[i * width + k] = a.value(k, i);
    for (std::size_t k = 0; k < t; ++k) aug[i * width + r + k] = b.value(k, i);
  }
  const auto pivots = EliminateInPlace(f, aug, c, width, r);
  const std::size_t rank = pivots.size();

  // Rows below the rank are zero on the a^T side; any nonzero right-hand
  // entry there is an inconsistency.
  for (std::size_t k = 0; k < t; ++k) {
    for (std::size_t i = rank; i < c; ++i) {
      if (aug[i * width + r + k] != 0) return NoSolution{k};
    }
  }

  std::vector<std::uint32_t> d(t * r, 0);
  for (std::size_t k = 0; k < t; ++k) {
    for (std::size_t i = 0; i < rank; ++i) {
      d[k * r + pivots[i]] = aug[i * width + r + k];
    }
  }
  return FpMatrix(f, t, r, std::move(d));
}

FpMatrix Invert(const FpMatrix& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::kShapeMismatch,
                "cannot invert non-square " + Shape(a));
  }
  const std::size_t n = a.rows();
  const std::size_t width = 2 * n;
  std::vector<std::uint32_t> aug(n * width, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) aug[i * width + k] = a.value(i, k);
    aug[i * width + n + i] = 1;
  }
  const auto pivots = EliminateInPlace(a.field(), aug, n, width, n);
  if (pivots.size() != n) {
    throw Error(ErrorCode::kSingular,
                Shape(a) + " matrix has rank " + std::to_string(pivots.size()));
  }
  std::vector<std::uint32_t> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) out[i * n + k] = aug[i * width + n + k];
  }
  return FpMatrix(a.field(), n, n, std::move(out));
}

FpMatrix Vandermonde(std::span<const FieldElement> nodes, std::size_t width) {
  if (nodes.empty()) {
    throw Error(ErrorCode::kShapeMismatch, "Vandermonde needs at least one node");
  }
  if (width == 0) {
    throw Error(ErrorCode::kShapeMismatch, "Vandermonde width must be >= 1");
  }
  const FieldSpec f = nodes.front().field();
  std::vector<std::uint32_t> out;
  out.reserve(nodes.size() * width);
  for (const auto& z : nodes) {
    if (z.field() != f) {
      throw Error(ErrorCode::kFieldMismatch, "Vandermonde nodes differ in field");
    }
    std::uint32_t power = 1;
    for (std::size_t k = 0; k < width; ++k) {
      out.push_back(power);
      power = f.mul(power, z.value());
    }
  }
  return FpMatrix(f, nodes.size(), width, std::move(out));
}

FpMatrix SelectColumns(const FpMatrix& a,
                       std::span<const ColumnBlockIndex> blocks) {
  std::vector<ColumnBlockIndex> sorted(blocks.begin(), blocks.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<std::size_t> columns;
  for (const auto& b : sorted) {
    if (b.sub_length == 0 || a.cols() % b.sub_length != 0 ||
        (!sorted.empty() && b.sub_length != sorted.front().sub_length)) {
      throw Error(ErrorCode::kBlockOutOfRange,
                  "sub-length " + std::to_string(b.sub_length) +
                      " does not tile " + std::to_string(a.cols()) +
                      " columns");
    }
    const std::size_t block_count = a.cols() / b.sub_length;
    if (b.message < 1 || b.message > block_count) {
      throw Error(ErrorCode::kBlockOutOfRange,
                  "block " + std::to_string(b.message) + " not in [1:" +
                      std::to_string(block_count) + "]");
    }
    for (std::size_t k = 0; k < b.sub_length; ++k) {
      columns.push_back((b.message - 1) * b.sub_length + k);
    }
  }
  return a.select_column_indices(columns);
}

FpMatrix SelectBlocks(const FpMatrix& a, std::span<const std::size_t> messages,
                      std::size_t sub_length) {
  std::vector<ColumnBlockIndex> blocks;
  blocks.reserve(messages.size());
  for (auto k : messages) blocks.push_back({k, sub_length});
  return SelectColumns(a, blocks);
}

}  // namespace pir
