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

#include "pir/scheme_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "pir/error.hpp"

namespace pir {
namespace {

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::string_view text) : lines_(SplitLines(text)) {}

  std::size_t line_number() const { return next_; }

  std::vector<std::string_view> next_line(std::string_view expecting) {
    if (next_ >= lines_.size()) {
      throw ParseError(lines_.size() + 1,
                       "unexpected end of input, expected " +
                           std::string(expecting));
    }
    return Tokens(lines_[next_++]);
  }

  bool at_end() {
    while (next_ < lines_.size() && Tokens(lines_[next_]).empty()) ++next_;
    return next_ >= lines_.size();
  }

  std::uint64_t number(std::string_view token) const {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError(next_, "expected a non-negative integer, got '" +
                                  std::string(token) + "'");
    }
    return v;
  }

  // "<directive> <n>" with exactly one integer argument.
  std::uint64_t directive(std::string_view name) {
    auto tokens = next_line(name);
    if (tokens.empty() || tokens[0] != name) {
      throw ParseError(next_, "expected directive '" + std::string(name) +
                                  "', got '" +
                                  (tokens.empty() ? std::string()
                                                  : std::string(tokens[0])) +
                                  "'");
    }
    if (tokens.size() != 2) {
      throw ParseError(next_, "'" + std::string(name) + "' takes one value");
    }
    return number(tokens[1]);
  }

 private:
  std::vector<std::string_view> lines_;
  std::size_t next_ = 0;
};

}  // namespace

std::string SerializeScheme(const SchemeTable& table) {
  const SchemeParams& p = table.params();
  std::ostringstream out;
  out << "pir-scheme v1\n";
  out << "field " << p.field.modulus() << '\n';
  out << "servers " << p.servers << '\n';
  out << "messages " << p.messages << '\n';
  out << "sublength " << p.sub_length << '\n';
  out << "rows";
  for (auto rho : p.rows_per_server) out << ' ' << rho;
  out << '\n';
  out << "keys " << table.key_count() << '\n';
  for (std::size_t m = 1; m <= p.messages; ++m) {
    for (std::size_t f = 0; f < table.key_count(); ++f) {
      out << "realization " << m << ' ' << f << '\n';
      const FpMatrix& q = table.query(m, f);
      for (std::size_t r = 0; r < q.rows(); ++r) {
        for (std::size_t c = 0; c < q.cols(); ++c) {
          if (c > 0) out << ' ';
          out << q.value(r, c);
        }
        out << '\n';
      }
    }
  }
  return out.str();
}

SchemeTable ParseScheme(std::string_view text) {
  Reader in(text);
  {
    auto magic = in.next_line("header");
    if (magic.size() != 2 || magic[0] != "pir-scheme" || magic[1] != "v1") {
      throw ParseError(in.line_number(), "expected 'pir-scheme v1'");
    }
  }

  const std::uint64_t p = in.directive("field");
  if (p >= FieldSpec::kMaxModulus || !IsPrime(p)) {
    throw ParseError(in.line_number(),
                     "field modulus " + std::to_string(p) +
                         " is not a prime below 2^31");
  }
  const FieldSpec field(p);
  const std::uint64_t servers = in.directive("servers");
  if (servers < 2) throw ParseError(in.line_number(), "need servers >= 2");
  const std::uint64_t messages = in.directive("messages");
  if (messages < 2) throw ParseError(in.line_number(), "need messages >= 2");
  const std::uint64_t sub_length = in.directive("sublength");
  if (sub_length < 1) throw ParseError(in.line_number(), "need sublength >= 1");

  std::vector<std::size_t> rows_per_server;
  {
    auto tokens = in.next_line("rows");
    if (tokens.empty() || tokens[0] != "rows") {
      throw ParseError(in.line_number(), "expected directive 'rows'");
    }
    if (tokens.size() != servers + 1) {
      throw ParseError(in.line_number(),
                       "'rows' must list " + std::to_string(servers) +
                           " counts");
    }
    for (std::size_t j = 1; j < tokens.size(); ++j) {
      const auto rho = in.number(tokens[j]);
      if (rho < 1) throw ParseError(in.line_number(), "row counts must be >= 1");
      rows_per_server.push_back(rho);
    }
  }
  const std::uint64_t keys = in.directive("keys");
  if (keys < 1) throw ParseError(in.line_number(), "need keys >= 1");

  SchemeParams params{field, servers, messages, sub_length,
                      std::move(rows_per_server)};
  const std::size_t rows = params.total_rows();
  const std::size_t width = params.width();

  std::vector<FpMatrix> queries;
  for (std::size_t m = 1; m <= messages; ++m) {
    for (std::size_t f = 0; f < keys; ++f) {
      auto header = in.next_line("realization");
      if (header.empty() || header[0] != "realization") {
        throw ParseError(in.line_number(),
                         header.empty() ? std::string("expected 'realization'")
                                        : "unknown directive '" +
                                              std::string(header[0]) + "'");
      }
      if (header.size() != 3 || in.number(header[1]) != m ||
          in.number(header[2]) != f) {
        throw ParseError(in.line_number(),
                         "expected 'realization " + std::to_string(m) + " " +
                             std::to_string(f) + "'");
      }
      std::vector<std::uint32_t> values;
      values.reserve(rows * width);
      for (std::size_t r = 0; r < rows; ++r) {
        auto tokens = in.next_line("query row");
        if (tokens.size() != width) {
          throw ParseError(in.line_number(),
                           "query row needs " + std::to_string(width) +
                               " entries, got " + std::to_string(tokens.size()));
        }
        for (auto t : tokens) {
          const auto v = in.number(t);
          if (v >= p) {
            throw ParseError(in.line_number(),
                             "entry " + std::to_string(v) + " not in [0, " +
                                 std::to_string(p) + ")");
          }
          values.push_back(static_cast<std::uint32_t>(v));
        }
      }
      queries.emplace_back(field, rows, width, std::move(values));
    }
  }
  if (!in.at_end()) {
    throw ParseError(in.line_number() + 1, "trailing content after last realization");
  }
  return SchemeTable(std::move(params), keys, std::move(queries));
}

SchemeTable ReadSchemeFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot open '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseScheme(buf.str());
}

void WriteSchemeFile(const std::filesystem::path& path,
                     const SchemeTable& table) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument,
                "cannot write '" + path.string() + "'");
  }
  out << SerializeScheme(table);
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument,
                "write to '" + path.string() + "' failed");
  }
}

}  // namespace pir
