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

#include "pir/scheme.hpp"

#include <numeric>
#include <set>
#include <string>

#include "pir/error.hpp"

namespace pir {

SchemeParams SchemeParams::Uniform(FieldSpec field, std::size_t servers,
                                   std::size_t messages,
                                   std::size_t sub_length) {
  return {field, servers, messages, sub_length,
          std::vector<std::size_t>(servers, 1)};
}

std::size_t SchemeParams::total_rows() const noexcept {
  return std::accumulate(rows_per_server.begin(), rows_per_server.end(),
                         std::size_t{0});
}

std::size_t SchemeParams::row_offset(std::size_t server) const {
  if (server < 1 || server > servers) {
    throw Error(ErrorCode::kInvalidArgument,
                "server " + std::to_string(server) + " not in [1:" +
                    std::to_string(servers) + "]");
  }
  return std::accumulate(rows_per_server.begin(),
                         rows_per_server.begin() + (server - 1), std::size_t{0});
}

void SchemeParams::validate() const {
  if (servers < 2) throw Error(ErrorCode::kInvalidScheme, "need S >= 2");
  if (messages < 2) throw Error(ErrorCode::kInvalidScheme, "need M >= 2");
  if (sub_length < 1) throw Error(ErrorCode::kInvalidScheme, "need Lw >= 1");
  if (rows_per_server.size() != servers) {
    throw Error(ErrorCode::kInvalidScheme,
                "rows_per_server lists " +
                    std::to_string(rows_per_server.size()) + " servers, S = " +
                    std::to_string(servers));
  }
  for (auto rho : rows_per_server) {
    if (rho < 1) {
      throw Error(ErrorCode::kInvalidScheme, "every server needs >= 1 row");
    }
  }
}

SchemeTable::SchemeTable(SchemeParams params, std::size_t key_count,
                         std::vector<FpMatrix> queries)
    : params_(std::move(params)),
      key_count_(key_count),
      queries_(std::move(queries)) {
  params_.validate();
  if (key_count_ == 0) throw Error(ErrorCode::kInvalidScheme, "no keys");
  if (queries_.size() != params_.messages * key_count_) {
    throw Error(ErrorCode::kInvalidScheme,
                "expected " + std::to_string(params_.messages * key_count_) +
                    " realizations, got " + std::to_string(queries_.size()));
  }
  const std::size_t rows = params_.total_rows();
  const std::size_t cols = params_.width();
  for (std::size_t m = 1; m <= params_.messages; ++m) {
    std::set<std::vector<std::uint32_t>> seen;
    for (std::size_t f = 0; f < key_count_; ++f) {
      const FpMatrix& q = queries_[(m - 1) * key_count_ + f];
      if (q.field() != params_.field || q.rows() != rows || q.cols() != cols) {
        throw Error(ErrorCode::kInvalidScheme,
                    "realization (m=" + std::to_string(m) +
                        ", f=" + std::to_string(f) + ") has the wrong shape");
      }
      if (!seen.emplace(q.values().begin(), q.values().end()).second) {
        throw Error(ErrorCode::kInvalidScheme,
                    "key map is not injective: m=" + std::to_string(m) +
                        " repeats its query at f=" + std::to_string(f));
      }
    }
  }
}

const FpMatrix& SchemeTable::query(std::size_t m, std::size_t f) const {
  if (m < 1 || m > params_.messages || f >= key_count_) {
    throw Error(ErrorCode::kKeyNotFound,
                "(m=" + std::to_string(m) + ", f=" + std::to_string(f) + ")");
  }
  return queries_[(m - 1) * key_count_ + f];
}

FpMatrix SchemeTable::server_query(std::size_t m, std::size_t f,
                                   std::size_t server) const {
  const FpMatrix& q = query(m, f);
  return q.row_slice(params_.row_offset(server),
                     params_.rows_per_server[server - 1]);
}

FpMatrix SchemeTable::servers_query(std::size_t m, std::size_t f,
                                    std::span<const std::size_t> servers) const {
  const FpMatrix& q = query(m, f);
  std::vector<std::size_t> rows;
  for (auto j : servers) {
    const std::size_t offset = params_.row_offset(j);
    for (std::size_t k = 0; k < params_.rows_per_server[j - 1]; ++k) {
      rows.push_back(offset + k);
    }
  }
  return q.select_rows(rows);
}

MessageVector::MessageVector(FieldSpec field, std::size_t messages,
                             std::size_t sub_length,
                             std::vector<std::uint32_t> symbols)
    : messages_(messages),
      sub_length_(sub_length),
      column_(field, messages * sub_length, 1, std::move(symbols)) {}

MessageVector MessageVector::Zero(const SchemeParams& params) {
  return MessageVector(params.field, params.messages, params.sub_length,
                       std::vector<std::uint32_t>(params.width(), 0));
}

FpMatrix MessageVector::block(std::size_t k) const {
  if (k < 1 || k > messages_) {
    throw Error(ErrorCode::kBlockOutOfRange,
                "message " + std::to_string(k) + " not in [1:" +
                    std::to_string(messages_) + "]");
  }
  return column_.row_slice((k - 1) * sub_length_, sub_length_);
}

MessageVector operator+(const MessageVector& a, const MessageVector& b) {
  if (a.messages_ != b.messages_ || a.sub_length_ != b.sub_length_) {
    throw Error(ErrorCode::kShapeMismatch, "message vectors differ in shape");
  }
  const FpMatrix sum = a.column_ + b.column_;
  return MessageVector(sum.field(), a.messages_, a.sub_length_,
                       {sum.values().begin(), sum.values().end()});
}

ResponseVector::ResponseVector(FpMatrix stacked,
                               std::vector<std::size_t> rows_per_server)
    : stacked_(std::move(stacked)), rows_per_server_(std::move(rows_per_server)) {
  const std::size_t total = std::accumulate(
      rows_per_server_.begin(), rows_per_server_.end(), std::size_t{0});
  if (stacked_.cols() != 1 || stacked_.rows() != total) {
    throw Error(ErrorCode::kShapeMismatch, "response does not match row split");
  }
}

FpMatrix ResponseVector::server(std::size_t j) const {
  if (j < 1 || j > rows_per_server_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "server " + std::to_string(j) + " out of range");
  }
  const std::size_t offset =
      std::accumulate(rows_per_server_.begin(),
                      rows_per_server_.begin() + (j - 1), std::size_t{0});
  return stacked_.row_slice(offset, rows_per_server_[j - 1]);
}

ResponseVector operator+(const ResponseVector& a, const ResponseVector& b) {
  if (a.rows_per_server_ != b.rows_per_server_) {
    throw Error(ErrorCode::kShapeMismatch, "responses differ in row split");
  }
  return ResponseVector(a.stacked_ + b.stacked_, a.rows_per_server_);
}

ResponseVector Respond(const SchemeTable& table, std::size_t m, std::size_t f,
                       const MessageVector& w) {
  const FpMatrix& q = table.query(m, f);
  if (w.messages() != table.messages() ||
      w.sub_length() != table.sub_length()) {
    throw Error(ErrorCode::kShapeMismatch,
                "message vector does not match scheme shape");
  }
  return ResponseVector(q * w.column(), table.params().rows_per_server);
}

FpMatrix Retrieve(const SchemeTable& table, std::size_t m, std::size_t f,
                  const MessageVector& w, const FpMatrix& decoder) {
  if (decoder.rows() != table.sub_length() ||
      decoder.cols() != table.params().total_rows()) {
    throw Error(ErrorCode::kShapeMismatch,
                "decoder must be " + std::to_string(table.sub_length()) + "x" +
                    std::to_string(table.params().total_rows()));
  }
  return decoder * Respond(table, m, f, w).stacked();
}

FpMatrix BlockSelector(const SchemeParams& params, std::size_t m) {
  if (m < 1 || m > params.messages) {
    throw Error(ErrorCode::kBlockOutOfRange,
                "message " + std::to_string(m) + " out of range");
  }
  std::vector<std::uint32_t> v(params.sub_length * params.width(), 0);
  for (std::size_t i = 0; i < params.sub_length; ++i) {
    v[i * params.width() + (m - 1) * params.sub_length + i] = 1;
  }
  return FpMatrix(params.field, params.sub_length, params.width(), std::move(v));
}

}  // namespace pir
