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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pir/rate.hpp"
#include "pir/verifier.hpp"

namespace pir {

/// Outcome of one report section: a result, or the error that stopped it.
template <typename Result>
struct Section {
  std::optional<Result> result;
  std::string error;  // empty when result is set

  bool passed() const { return result.has_value() && result->pass; }
};

struct RateSection {
  std::optional<RateResult> result;
  bool skipped_for_budget = false;
  std::string error;
};

struct ReportOptions {
  std::vector<std::size_t> collusion;  // colluding-set sizes to check
  bool crosscheck = false;
  std::uint64_t budget = kDefaultEnumerationBudget;
};

/// Standard and colluding verdicts for one table, laid out like the
/// condition tables: correctness, privacy, capacity.
struct VerificationReport {
  VerificationReport(SchemeParams p, std::size_t keys)
      : params(std::move(p)), key_count(keys) {}

  SchemeParams params;
  std::size_t key_count;
  Section<CorrectnessResult> correctness;
  Section<PrivacyResult> privacy_standard;
  Section<CapacityResult> capacity_standard;
  std::map<std::size_t, Section<PrivacyResult>> privacy_colluding;
  std::map<std::size_t, Section<CapacityResult>> capacity_colluding;
  RateSection rate;
  std::optional<Section<CrosscheckResult>> crosscheck;

  /// Every requested property passed. The rate line is informational.
  bool all_pass() const;
};

/// Runs every check; errors are recorded per section rather than thrown.
VerificationReport FullReport(const SchemeTable& table,
                              const ReportOptions& options);

/// Stable text rendering; the layout is documented in docs/formats.md.
std::string RenderReport(const VerificationReport& report);

}  // namespace pir
