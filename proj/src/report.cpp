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

#include "tristream/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "tristream/errors.hpp"

namespace tristream {

namespace {

using Json = nlohmann::ordered_json;

Json TrialReportObject(const TrialReport& r, bool include_wall_time) {
  Json config = {{"alg", AlgorithmName(r.algorithm)}};
  if (r.algorithm == Algorithm::kA2) {
    config["rho"] = r.config.rho;
  } else {
    config["T"] = r.config.T;
    if (r.config.m_known) config["m_known"] = *r.config.m_known;
  }
  config["shuffle_order"] = r.shuffle_order;

  Json j = {
      {"trials", r.trials},
      {"found", r.found},
      {"not_found", r.not_found},
      {"fail", r.fail},
      {"stored_edges_mean", r.stored_edges_mean},
      {"stored_edges_sd", r.stored_edges_sd},
      {"stored_edges_max", r.stored_edges_max},
      {"stored_edges_max_completed", r.stored_edges_max_completed},
      {"master_seed", r.master_seed},
      {"config", config},
      {"graph", {{"n", r.num_vertices}, {"m", r.num_edges}}},
  };
  if (include_wall_time) j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

Json VarianceObject(const VarianceCheck& c) {
  return {
      {"p", c.exact.p},
      {"samples", c.samples},
      {"master_seed", c.master_seed},
      {"mu", c.exact.mu},
      {"sigma_sq", c.exact.sigma_sq},
      {"empirical_mean", c.empirical_mean},
      {"empirical_variance", c.empirical_variance},
      {"z_mean", c.z_mean},
      {"z_variance", c.z_variance},
  };
}

// Flattens nested objects into dotted keys, preserving order.
void Flatten(const Json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      Flatten(value, name, out);
    } else {
      out.emplace_back(name, value.is_string() ? value.get<std::string>()
                                               : value.dump());
    }
  }
}

std::string Render(const Json& j, ReportFormat format) {
  if (format == ReportFormat::kJson) return j.dump() + "\n";

  std::vector<std::pair<std::string, std::string>> rows;
  Flatten(j, "", rows);
  std::ostringstream out;
  if (format == ReportFormat::kTable) {
    std::size_t width = 0;
    for (const auto& row : rows) width = std::max(width, row.first.size());
    for (const auto& [key, value] : rows) {
      out << key << std::string(width - key.size() + 2, ' ') << value << '\n';
    }
  } else {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      out << (i ? "," : "") << rows[i].first;
    }
    out << '\n';
    for (std::size_t i = 0; i < rows.size(); ++i) {
      out << (i ? "," : "") << rows[i].second;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

ReportFormat ParseReportFormat(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "table") return ReportFormat::kTable;
  if (name == "csv") return ReportFormat::kCsv;
  throw InvalidArgs("unknown format '" + std::string(name) + "'");
}

std::string StatsJson(const GraphStats& s) {
  return Json{{"t3", s.t3},       {"rho", s.rho}, {"max_tower", s.max_tower},
              {"pi", s.pi},       {"n", s.num_vertices}, {"m", s.num_edges}}
      .dump();
}

std::string OutcomeJson(const DetectionOutcome& o) {
  return Json{{"verdict", VerdictName(o.verdict)},
              {"stored_edges_peak", o.stored_edges_peak},
              {"passes_used", o.passes_used}}
      .dump();
}

std::string AuditJson(const AuditRecord& r) {
  return Json{{"passed", r.passed()},
              {"t3", r.stats.t3},
              {"max_tower", r.stats.max_tower},
              {"pi", r.stats.pi},
              {"pair_bound", r.pair_bound},
              {"pair_bound_holds", r.pair_bound_holds},
              {"rho", r.stats.rho},
              {"density_bounds_hold", r.density_bounds_hold}}
      .dump();
}

std::string TrialReportJson(const TrialReport& report, bool include_wall_time) {
  return TrialReportObject(report, include_wall_time).dump();
}

std::string VarianceJson(const VarianceCheck& check) {
  return VarianceObject(check).dump();
}

std::string FormatTrialReport(const TrialReport& report, ReportFormat format) {
  return Render(TrialReportObject(report, true), format);
}

std::string FormatVarianceCheck(const VarianceCheck& check,
                                ReportFormat format) {
  return Render(VarianceObject(check), format);
}

}  // namespace tristream
