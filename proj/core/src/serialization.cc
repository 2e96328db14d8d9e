//
// Copyright 2026 The edgeldp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "edgeldp/serialization.h"

#include <vector>

#include <nlohmann/json.hpp>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"

namespace edgeldp {
namespace {

using nlohmann::json;

constexpr std::string_view kNoNoiseWarning =
    "NO-NOISE MODE: all mechanisms were replaced by identities; this output is "
    "NOT differentially private";

std::string Dump(const json& doc) { return doc.dump(2) + "\n"; }

std::string Num(double value) { return absl::StrFormat("%.17g", value); }

template <typename T>
json CountMap(const std::map<int, T>& counts) {
  json out = json::object();
  for (const auto& [len, count] : counts) out[std::to_string(len)] = count;
  return out;
}

// Runs a parse body, turning nlohmann exceptions into InvalidArgument.
template <typename Body>
auto Parse(std::string_view text, std::string_view what, Body&& body)
    -> decltype(body(std::declval<const json&>())) {
  try {
    json doc = json::parse(text);
    if (doc.value("schema", 0) != kSchemaVersion) {
      return absl::InvalidArgumentError(absl::StrCat(std::string(what), ": unsupported schema"));
    }
    return body(doc);
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat(std::string(what), ": ", e.what()));
  }
}

json BudgetJson(const PrivacyBudget& b) {
  return {{"eps0", b.eps0}, {"eps1", b.eps1}, {"eps2", b.eps2}, {"zeta", b.zeta},
          {"total", b.total()}};
}

json SummaryJson(const TrialSummary& s) {
  json doc = {{"exact", s.exact},   {"mean", s.mean},
              {"rmse", s.rmse},     {"bias", s.bias},
              {"stderr", s.std_error}, {"clipped_fraction", s.clipped_fraction},
              {"trials", s.trials}};
  if (!s.estimates.empty()) doc["estimates"] = s.estimates;
  return doc;
}

std::string SummaryCsvRow(const TrialSummary& s) {
  return absl::StrCat(Num(s.exact), ",", Num(s.mean), ",", Num(s.rmse), ",", Num(s.bias),
                      ",", Num(s.std_error), ",", Num(s.clipped_fraction));
}

}  // namespace

std::string GraphStatsToJson(const GraphStats& s) {
  json doc = {{"schema", kSchemaVersion},
              {"n", s.n},
              {"m", s.m},
              {"max_degree", s.max_degree},
              {"degeneracy", s.degeneracy},
              {"chiba_sum", s.chiba_sum},
              {"arboricity_interval", {s.arboricity_lower, s.arboricity_upper}}};
  return Dump(doc);
}

std::string ExactCountsToJson(const ExactCounts& c) {
  json doc = {{"schema", kSchemaVersion},
              {"triangles", c.triangles},
              {"cycles", CountMap(c.cycles)},
              {"paths", CountMap(c.paths)},
              {"low2stars", c.low2stars},
              {"monotone_cycles", CountMap(c.monotone_cycles)}};
  return Dump(doc);
}

std::string OrderingToJson(const NodeOrdering& o) {
  json doc = {{"schema", kSchemaVersion},
              {"phi", o.phi},
              {"noisy_degrees", o.noisy_degrees},
              {"eps0", o.eps0}};
  return Dump(doc);
}

absl::StatusOr<NodeOrdering> OrderingFromJson(std::string_view text) {
  return Parse(text, "ordering", [](const json& doc) -> absl::StatusOr<NodeOrdering> {
    NodeOrdering o;
    o.phi = doc.at("phi").get<std::vector<NodeId>>();
    o.noisy_degrees = doc.at("noisy_degrees").get<std::vector<double>>();
    o.eps0 = doc.at("eps0").get<double>();
    return o;
  });
}

std::string ReportToJson(const EstimateReport& r) {
  json doc = {{"schema", kSchemaVersion},
              {"task", r.task},
              {"mode", NoiseModeName(r.mode)},
              {"estimate", r.estimate},
              {"clipped_users", r.clipped_users},
              {"budget", BudgetJson(r.budget)},
              {"seed", r.seed},
              {"trial", r.trial},
              {"per_user", r.per_user}};
  if (r.task == "cycles") doc["k"] = r.k;
  if (r.walk_sum.has_value()) doc["walk_sum"] = *r.walk_sum;
  if (r.mode == NoiseMode::kNoNoise) doc["warning"] = kNoNoiseWarning;
  return Dump(doc);
}

absl::StatusOr<EstimateReport> ReportFromJson(std::string_view text) {
  return Parse(text, "report", [](const json& doc) -> absl::StatusOr<EstimateReport> {
    EstimateReport r;
    r.task = doc.at("task").get<std::string>();
    auto mode = ParseNoiseMode(doc.at("mode").get<std::string>());
    if (!mode.ok()) return mode.status();
    r.mode = *mode;
    r.estimate = doc.at("estimate").get<double>();
    r.clipped_users = doc.at("clipped_users").get<std::size_t>();
    const json& b = doc.at("budget");
    r.budget = {b.at("eps0").get<double>(), b.at("eps1").get<double>(),
                b.at("eps2").get<double>(), b.at("zeta").get<double>()};
    r.seed = doc.at("seed").get<std::uint64_t>();
    r.trial = doc.at("trial").get<std::uint64_t>();
    r.per_user = doc.at("per_user").get<std::vector<double>>();
    r.k = doc.value("k", 3);
    if (doc.contains("walk_sum")) r.walk_sum = doc.at("walk_sum").get<double>();
    return r;
  });
}

std::string ReportToCsv(const EstimateReport& r) {
  return absl::StrCat("estimate,clipped_users,mode\n", Num(r.estimate), ",", r.clipped_users,
                      ",", std::string(NoiseModeName(r.mode)), "\n");
}

std::string TrialSummaryToJson(const TrialSummary& s) {
  json doc = SummaryJson(s);
  doc["schema"] = kSchemaVersion;
  return Dump(doc);
}

absl::StatusOr<TrialSummary> TrialSummaryFromJson(std::string_view text) {
  return Parse(text, "trial summary", [](const json& doc) -> absl::StatusOr<TrialSummary> {
    TrialSummary s;
    s.exact = doc.at("exact").get<double>();
    s.mean = doc.at("mean").get<double>();
    s.rmse = doc.at("rmse").get<double>();
    s.bias = doc.at("bias").get<double>();
    s.std_error = doc.at("stderr").get<double>();
    s.clipped_fraction = doc.at("clipped_fraction").get<double>();
    s.trials = doc.at("trials").get<std::size_t>();
    if (doc.contains("estimates")) s.estimates = doc.at("estimates").get<std::vector<double>>();
    return s;
  });
}

std::string TrialSummaryToCsv(const TrialSummary& s) {
  return absl::StrCat(std::string(kTrialSummaryCsvHeader), "\n", SummaryCsvRow(s), "\n");
}

absl::StatusOr<TrialSummary> TrialSummaryFromCsv(std::string_view text) {
  std::vector<absl::string_view> lines = absl::StrSplit(
      absl::StripSuffix(absl::string_view(text.data(), text.size()), "\n"), '\n');
  if (lines.size() != 2 || lines[0] != absl::string_view(kTrialSummaryCsvHeader.data(), kTrialSummaryCsvHeader.size())) {
    return absl::InvalidArgumentError("trial summary CSV must be the header plus one row");
  }
  std::vector<absl::string_view> cells = absl::StrSplit(lines[1], ',');
  if (cells.size() != 6) {
    return absl::InvalidArgumentError("trial summary CSV row must have 6 columns");
  }
  double values[6];
  for (int c = 0; c < 6; ++c) {
    if (!absl::SimpleAtod(cells[c], &values[c])) {
      return absl::InvalidArgumentError(absl::StrCat("bad CSV number '", cells[c], "'"));
    }
  }
  TrialSummary s;
  s.exact = values[0];
  s.mean = values[1];
  s.rmse = values[2];
  s.bias = values[3];
  s.std_error = values[4];
  s.clipped_fraction = values[5];
  return s;
}

std::string BoundReportToJson(const BoundReport& r) {
  json doc = {{"schema", kSchemaVersion},
              {"n", r.n},
              {"m", r.m},
              {"degeneracy", r.degeneracy},
              {"max_degree", r.max_degree},
              {"chiba_sum", r.chiba_sum},
              {"chiba_bound_holds", r.chiba_bound_holds},
              {"chiba_twice_bound_holds", r.chiba_twice_bound_holds},
              {"edge_bound_holds", r.edge_bound_holds},
              {"orderings", r.orderings},
              {"eps0", r.eps0},
              {"four_cycles", r.four_cycles},
              {"mean_low2stars", r.mean_low2stars},
              {"stderr_low2stars", r.stderr_low2stars},
              {"low2stars_limit", r.low2stars_limit},
              {"low2stars_ratio", r.low2stars_ratio},
              {"mean_monotone_c4", r.mean_monotone_c4},
              {"stderr_monotone_c4", r.stderr_monotone_c4},
              {"monotone_c4_ratio", r.monotone_c4_ratio},
              {"baseline_mean_low2stars", r.baseline_mean_low2stars}};
  return Dump(doc);
}

std::string ScalingReportToJson(const ScalingReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json entry = SummaryJson(row.summary);
    entry["n"] = row.n;
    rows.push_back(std::move(entry));
  }
  json doc = {{"schema", kSchemaVersion}, {"rows", rows}, {"exact", r.exact}};
  doc["slope"] = r.slope.has_value() ? json(*r.slope) : json(nullptr);
  return Dump(doc);
}

std::string ScalingReportToCsv(const ScalingReport& r) {
  std::string out = absl::StrCat("n,", std::string(kTrialSummaryCsvHeader), "\n");
  for (const auto& row : r.rows) {
    absl::StrAppend(&out, row.n, ",", SummaryCsvRow(row.summary), "\n");
  }
  return out;
}

}  // namespace edgeldp
