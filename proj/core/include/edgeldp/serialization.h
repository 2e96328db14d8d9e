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

// JSON and CSV encodings of every result type. JSON documents carry
// "schema": 1. Doubles are written in shortest round-trip form (JSON) or
// with 17 significant digits (CSV), so parsing returns the exact values.

#ifndef EDGELDP_SERIALIZATION_H_
#define EDGELDP_SERIALIZATION_H_

#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "edgeldp/exact_counts.h"
#include "edgeldp/experiments.h"
#include "edgeldp/graph.h"
#include "edgeldp/ordering.h"
#include "edgeldp/protocol.h"

namespace edgeldp {

inline constexpr int kSchemaVersion = 1;

// Columns of the experiment CSV, in order.
inline constexpr std::string_view kTrialSummaryCsvHeader =
    "exact,mean,rmse,bias,stderr,clipped_fraction";

std::string GraphStatsToJson(const GraphStats& stats);
std::string ExactCountsToJson(const ExactCounts& counts);

std::string OrderingToJson(const NodeOrdering& ordering);
absl::StatusOr<NodeOrdering> OrderingFromJson(std::string_view text);

std::string ReportToJson(const EstimateReport& report);
absl::StatusOr<EstimateReport> ReportFromJson(std::string_view text);
// estimate,clipped_users,mode header plus one row.
std::string ReportToCsv(const EstimateReport& report);

std::string TrialSummaryToJson(const TrialSummary& summary);
absl::StatusOr<TrialSummary> TrialSummaryFromJson(std::string_view text);
// Header plus one row; per-trial estimates are not part of the CSV.
std::string TrialSummaryToCsv(const TrialSummary& summary);
absl::StatusOr<TrialSummary> TrialSummaryFromCsv(std::string_view text);

std::string BoundReportToJson(const BoundReport& report);

std::string ScalingReportToJson(const ScalingReport& report);
// n,<summary columns> per row.
std::string ScalingReportToCsv(const ScalingReport& report);

}  // namespace edgeldp

#endif  // EDGELDP_SERIALIZATION_H_
