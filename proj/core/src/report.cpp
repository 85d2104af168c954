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

#include "pir/report.hpp"

#include <sstream>

#include "pir/error.hpp"

namespace pir {
namespace {

template <typename Result, typename Fn>
Section<Result> Run(Fn&& fn) {
  Section<Result> s;
  try {
    s.result = fn();
  } catch (const Error& e) {
    s.error = e.what();
  }
  return s;
}

std::string SetText(const std::vector<std::size_t>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(items[i]);
  }
  return out + "}";
}

std::string CountsText(const std::vector<std::size_t>& counts) {
  std::string out;
  for (std::size_t m = 0; m < counts.size(); ++m) {
    if (m > 0) out += ", ";
    out += "m=" + std::to_string(m + 1) + " " + std::to_string(counts[m]);
  }
  return out;
}

std::string_view ConditionName(CapacityCondition c) {
  return c == CapacityCondition::kInterferenceRank ? "interference-rank"
                                                   : "joint-rank";
}

void Verdict(std::ostream& out, const std::string& label, bool pass) {
  out << label << ": " << (pass ? "PASS" : "FAIL") << '\n';
}

void Write(std::ostream& out, const std::string& label,
           const Section<CorrectnessResult>& s) {
  if (!s.result) {
    out << label << ": ERROR " << s.error << '\n';
    return;
  }
  Verdict(out, label, s.result->pass);
  if (const auto& w = s.result->failure) {
    out << "  realization: m=" << w->m << " f=" << w->f << '\n';
    out << "  selector row outside query row space: " << w->row << '\n';
  }
}

void Write(std::ostream& out, const std::string& label,
           const Section<PrivacyResult>& s) {
  if (!s.result) {
    out << label << ": ERROR " << s.error << '\n';
    return;
  }
  Verdict(out, label, s.result->pass);
  if (const auto& w = s.result->witness) {
    out << "  servers: " << SetText(w->servers) << '\n';
    out << "  observed: " << w->observed << '\n';
    out << "  key counts: " << CountsText(w->key_counts) << '\n';
  }
}

void Write(std::ostream& out, const std::string& label,
           const Section<CapacityResult>& s) {
  if (!s.result) {
    out << label << ": ERROR " << s.error << '\n';
    return;
  }
  Verdict(out, label, s.result->pass);
  if (const auto& w = s.result->witness) {
    out << "  condition: " << ConditionName(w->condition) << '\n';
    out << "  realization: m=" << w->m << " f=" << w->f << '\n';
    out << "  servers: " << SetText(w->servers) << '\n';
    out << "  blocks: " << SetText(w->blocks) << '\n';
    out << "  stacked rank: " << w->stacked_rank << '\n';
    out << "  compared rank: " << w->compared_rank << '\n';
  }
}

void Write(std::ostream& out, const std::string& label,
           const Section<CrosscheckResult>& s) {
  if (!s.result) {
    out << label << ": ERROR " << s.error << '\n';
    return;
  }
  Verdict(out, label, s.result->pass);
  out << "  cells: " << s.result->cells << '\n';
  if (const auto& w = s.result->witness) {
    out << "  realization: m=" << w->m << " f=" << w->f << '\n';
    out << "  server: " << w->server << '\n';
    out << "  known messages: " << SetText(w->known_messages) << '\n';
    out << "  entropy: " << ToString(w->entropy) << '\n';
    out << "  rank: " << w->rank << '\n';
  }
}

}  // namespace

bool VerificationReport::all_pass() const {
  bool ok = correctness.passed() && privacy_standard.passed() &&
            capacity_standard.passed();
  for (const auto& [t, s] : privacy_colluding) ok = ok && s.passed();
  for (const auto& [t, s] : capacity_colluding) ok = ok && s.passed();
  if (crosscheck) ok = ok && crosscheck->passed();
  return ok;
}

VerificationReport FullReport(const SchemeTable& table,
                              const ReportOptions& options) {
  VerificationReport r(table.params(), table.key_count());
  r.correctness =
      Run<CorrectnessResult>([&] { return CheckCorrectness(table); });
  r.privacy_standard =
      Run<PrivacyResult>([&] { return CheckPrivacyStandard(table); });
  r.capacity_standard =
      Run<CapacityResult>([&] { return CheckCapacityStandard(table); });
  for (auto t : options.collusion) {
    r.privacy_colluding[t] =
        Run<PrivacyResult>([&] { return CheckPrivacyColluding(table, t); });
    r.capacity_colluding[t] =
        Run<CapacityResult>([&] { return CheckCapacityColluding(table, t); });
  }
  try {
    r.rate.result = RateExact(table, options.budget);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kBudgetExceeded) {
      r.rate.skipped_for_budget = true;
    } else {
      r.rate.error = e.what();
    }
  }
  if (options.crosscheck) {
    r.crosscheck = Run<CrosscheckResult>(
        [&] { return RankEntropyCrosscheck(table, options.budget); });
  }
  return r;
}

std::string RenderReport(const VerificationReport& r) {
  std::ostringstream out;
  out << "pir-report v1\n";
  out << "scheme: field=" << r.params.field.modulus()
      << " servers=" << r.params.servers << " messages=" << r.params.messages
      << " sublength=" << r.params.sub_length << " rows=";
  for (std::size_t j = 0; j < r.params.rows_per_server.size(); ++j) {
    out << (j > 0 ? "," : "") << r.params.rows_per_server[j];
  }
  out << " keys=" << r.key_count << '\n';

  Write(out, "correctness", r.correctness);
  Write(out, "privacy-standard", r.privacy_standard);
  Write(out, "capacity-standard", r.capacity_standard);
  for (const auto& [t, s] : r.privacy_colluding) {
    Write(out, "privacy-colluding T=" + std::to_string(t), s);
  }
  for (const auto& [t, s] : r.capacity_colluding) {
    Write(out, "capacity-colluding T=" + std::to_string(t), s);
  }

  if (r.rate.result) {
    const RateResult& rate = *r.rate.result;
    out << "rate: " << ToString(rate.rate)
        << " capacity: " << ToString(rate.capacity)
        << " achieves-capacity: " << (rate.achieves ? "yes" : "no") << '\n';
    out << "  download per index:";
    for (std::size_t m = 0; m < rate.per_m_download.size(); ++m) {
      out << (m > 0 ? "," : "") << " m=" << m + 1 << " "
          << ToString(rate.per_m_download[m]);
    }
    out << '\n';
  } else if (r.rate.skipped_for_budget) {
    out << "rate: SKIPPED (enumeration budget)\n";
  } else {
    out << "rate: ERROR " << r.rate.error << '\n';
  }

  if (r.crosscheck) Write(out, "crosscheck", *r.crosscheck);
  return out.str();
}

}  // namespace pir
