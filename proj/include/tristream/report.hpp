// Copyright 2026 The tristream Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include "tristream/detectors.hpp"
#include "tristream/harness.hpp"
#include "tristream/oracle.hpp"

namespace tristream {

enum class ReportFormat { kJson, kTable, kCsv };

// Accepts "json", "table", "csv". Throws InvalidArgs otherwise.
ReportFormat ParseReportFormat(std::string_view name);

// Single-line JSON renderings with a fixed key order.
std::string StatsJson(const GraphStats& stats);
std::string OutcomeJson(const DetectionOutcome& outcome);
std::string AuditJson(const AuditRecord& record);
// wall_time_ms is the only field that varies between identical runs; drop it
// to compare reports byte for byte.
std::string TrialReportJson(const TrialReport& report,
                            bool include_wall_time = true);
std::string VarianceJson(const VarianceCheck& check);

// The same report as JSON, an aligned key/value table, or a header row plus
// one CSV row. Output ends with a newline.
std::string FormatTrialReport(const TrialReport& report, ReportFormat format);
std::string FormatVarianceCheck(const VarianceCheck& check, ReportFormat format);

}  // namespace tristream
