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

#include "pir/simulation.hpp"

#include <algorithm>
#include <sstream>

#include "pir/error.hpp"
#include "pir/verifier.hpp"

namespace pir {
namespace {

std::string Flat(const FpMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.values().size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(m.values()[i]);
  }
  return out + "]";
}

struct EventPrinter {
  std::ostream& out;
  void operator()(const QuerySent& e) const {
    out << "QuerySent server=" << e.server << " query=" << e.query << '\n';
  }
  void operator()(const ResponseReceived& e) const {
    out << "ResponseReceived server=" << e.server
        << " symbols=" << Flat(e.symbols) << '\n';
  }
  void operator()(const Decoded& e) const {
    out << "Decoded block=" << Flat(e.block) << '\n';
  }
};

}  // namespace

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::uniform(std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
  while (true) {
    const std::uint64_t x = next();
    if (x >= threshold) return x % n;
  }
}

SimulationTrace SimulateRetrieval(const SchemeTable& table, std::size_t m,
                                  std::uint64_t seed) {
  if (m < 1 || m > table.messages()) {
    throw Error(ErrorCode::kInvalidArgument,
                "index " + std::to_string(m) + " not in [1:" +
                    std::to_string(table.messages()) + "]");
  }
  SplitMix64 rng(seed);
  const std::size_t f = rng.uniform(table.key_count());
  std::vector<std::uint32_t> symbols(table.params().width());
  for (auto& s : symbols) {
    s = static_cast<std::uint32_t>(rng.uniform(table.field().modulus()));
  }
  MessageVector w(table.field(), table.messages(), table.sub_length(),
                  std::move(symbols));

  auto solved = DecodingMatrix(table, m, f);
  if (std::holds_alternative<NoSolution>(solved)) {
    throw Error(ErrorCode::kCorrectnessUnavailable,
                "no decoding matrix for (m=" + std::to_string(m) +
                    ", f=" + std::to_string(f) + ")");
  }
  const FpMatrix& decoder = std::get<FpMatrix>(solved);

  SimulationTrace trace{seed, m, f, w, {}};
  for (std::size_t j = 1; j <= table.servers(); ++j) {
    trace.events.emplace_back(QuerySent{j, table.server_query(m, f, j)});
  }
  const ResponseVector x = Respond(table, m, f, w);
  for (std::size_t j = 1; j <= table.servers(); ++j) {
    trace.events.emplace_back(ResponseReceived{j, x.server(j)});
  }
  FpMatrix block = decoder * x.stacked();
  const bool matches = block == w.block(m);
  trace.events.emplace_back(Decoded{std::move(block), matches});
  return trace;
}

std::string RenderTrace(const SimulationTrace& trace) {
  std::ostringstream out;
  out << "retrieval seed=" << trace.seed << " index=" << trace.index
      << " key=" << trace.key << '\n';
  out << "messages:";
  for (std::size_t k = 1; k <= trace.messages.messages(); ++k) {
    out << " W_" << k << "=" << Flat(trace.messages.block(k));
  }
  out << '\n';
  for (const auto& e : trace.events) std::visit(EventPrinter{out}, e);
  const auto& decoded = std::get<Decoded>(trace.events.back());
  out << "Decoded: " << (decoded.matches ? "matches" : "MISMATCH with")
      << " W_" << trace.index << '\n';
  return out.str();
}

AdversaryView SimulateAdversary(const SchemeTable& table,
                                std::span<const std::size_t> colluding,
                                std::uint64_t seed) {
  std::vector<std::size_t> set(colluding.begin(), colluding.end());
  std::sort(set.begin(), set.end());
  if (set.empty() || set.front() < 1 || set.back() > table.servers() ||
      std::adjacent_find(set.begin(), set.end()) != set.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "colluding set must be distinct servers in [1:" +
                    std::to_string(table.servers()) + "]");
  }
  SplitMix64 rng(seed);
  const std::size_t m = 1 + rng.uniform(table.messages());
  const std::size_t f = rng.uniform(table.key_count());
  FpMatrix observed = table.servers_query(m, f, set);
  auto posterior = Posterior(table, set, observed);
  return {seed, std::move(set), m, f, std::move(observed), std::move(posterior)};
}

std::string RenderAdversary(const AdversaryView& view) {
  std::ostringstream out;
  out << "adversary seed=" << view.seed << " colluding={";
  for (std::size_t i = 0; i < view.colluding.size(); ++i) {
    out << (i > 0 ? "," : "") << view.colluding[i];
  }
  out << "}\n";
  out << "true index: " << view.true_index << " key: " << view.key << '\n';
  out << "observed: " << view.observed << '\n';
  out << "posterior:";
  for (std::size_t m = 0; m < view.posterior.size(); ++m) {
    out << " P(m=" << m + 1 << ")=" << ToString(view.posterior[m]);
  }
  out << '\n';
  return out.str();
}

}  // namespace pir
