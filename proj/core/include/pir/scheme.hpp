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
#include <span>
#include <string>
#include <vector>

#include "pir/field.hpp"
#include "pir/matrix.hpp"

namespace pir {

/// Shape of a linear PIR scheme: S servers, M messages of Lw symbols each,
/// server j answering with rows_per_server[j] symbols.
struct SchemeParams {
  FieldSpec field;
  std::size_t servers;
  std::size_t messages;
  std::size_t sub_length;
  std::vector<std::size_t> rows_per_server;

  /// One answer symbol per server.
  static SchemeParams Uniform(FieldSpec field, std::size_t servers,
                              std::size_t messages, std::size_t sub_length);

  std::size_t width() const noexcept { return messages * sub_length; }
  std::size_t total_rows() const noexcept;
  /// Index of server j's first row in a stacked query (j is 1-based).
  std::size_t row_offset(std::size_t server) const;

  /// Throws Error(kInvalidScheme) when S < 2, M < 2, Lw < 1, any rho_j < 1,
  /// or rows_per_server.size() != S.
  void validate() const;

  friend bool operator==(const SchemeParams&, const SchemeParams&) = default;
};

/// Full enumeration of a scheme's query realizations: for every message index
/// m in [1:M] and key f in [0:K), the stacked query matrix psi(m, f) of shape
/// (sum rho_j) x (M * Lw). Keys are uniformly distributed.
class SchemeTable {
 public:
  /// `queries` is m-major then f-major: queries[(m-1)*K + f]. Throws
  /// Error(kInvalidScheme) on shape/field violations or when f -> psi(m, f)
  /// is not injective for some m.
  SchemeTable(SchemeParams params, std::size_t key_count,
              std::vector<FpMatrix> queries);

  const SchemeParams& params() const noexcept { return params_; }
  const FieldSpec& field() const noexcept { return params_.field; }
  std::size_t servers() const noexcept { return params_.servers; }
  std::size_t messages() const noexcept { return params_.messages; }
  std::size_t sub_length() const noexcept { return params_.sub_length; }
  std::size_t key_count() const noexcept { return key_count_; }

  /// Stacked query for (m, f). Throws Error(kKeyNotFound).
  const FpMatrix& query(std::size_t m, std::size_t f) const;
  /// Server j's rows of the stacked query (j is 1-based).
  FpMatrix server_query(std::size_t m, std::size_t f, std::size_t server) const;
  /// Rows of the servers in `servers` (1-based, in the given order).
  FpMatrix servers_query(std::size_t m, std::size_t f,
                         std::span<const std::size_t> servers) const;

  const std::vector<FpMatrix>& all_queries() const noexcept { return queries_; }

  friend bool operator==(const SchemeTable&, const SchemeTable&) = default;

 private:
  SchemeParams params_;
  std::size_t key_count_;
  std::vector<FpMatrix> queries_;
};

/// The (M*Lw) x 1 column (w_{1,1..Lw}, ..., w_{M,1..Lw}).
class MessageVector {
 public:
  MessageVector(FieldSpec field, std::size_t messages, std::size_t sub_length,
                std::vector<std::uint32_t> symbols);
  static MessageVector Zero(const SchemeParams& params);

  const FpMatrix& column() const noexcept { return column_; }
  std::size_t messages() const noexcept { return messages_; }
  std::size_t sub_length() const noexcept { return sub_length_; }
  /// W_k as an Lw x 1 column (k is 1-based).
  FpMatrix block(std::size_t k) const;

  friend MessageVector operator+(const MessageVector& a,
                                 const MessageVector& b);
  friend bool operator==(const MessageVector&, const MessageVector&) = default;

 private:
  std::size_t messages_;
  std::size_t sub_length_;
  FpMatrix column_;
};

/// Stacked answers X = Q * w, split by server.
class ResponseVector {
 public:
  ResponseVector(FpMatrix stacked, std::vector<std::size_t> rows_per_server);

  const FpMatrix& stacked() const noexcept { return stacked_; }
  std::size_t servers() const noexcept { return rows_per_server_.size(); }
  /// X_j as a rho_j x 1 column (j is 1-based).
  FpMatrix server(std::size_t j) const;

  friend ResponseVector operator+(const ResponseVector& a,
                                  const ResponseVector& b);
  friend bool operator==(const ResponseVector&, const ResponseVector&) = default;

 private:
  FpMatrix stacked_;
  std::vector<std::size_t> rows_per_server_;
};

ResponseVector Respond(const SchemeTable& table, std::size_t m, std::size_t f,
                       const MessageVector& w);

/// D * X for the responses to (m, f). Throws Error(kShapeMismatch) unless D
/// is Lw x (sum rho_j).
FpMatrix Retrieve(const SchemeTable& table, std::size_t m, std::size_t f,
                  const MessageVector& w, const FpMatrix& decoder);

/// [O | E | O]: the Lw x (M*Lw) selector of block m.
FpMatrix BlockSelector(const SchemeParams& params, std::size_t m);

}  // namespace pir
