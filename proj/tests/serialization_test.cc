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

#include <nlohmann/json.hpp>

#include "edgeldp/experiments.h"
#include "edgeldp/generators.h"
#include "edgeldp/triangle_estimator.h"
#include "edgeldp/cycle_estimator.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace edgeldp {
namespace {

using ::testing::HasSubstr;
using ::testing::StartsWith;

TEST(SerializationTest, TrialSummaryCsvRoundTripsBitExactly) {
  TrialSummary s;
  s.exact = 139;
  s.mean = 153.123456789012345;
  s.rmse = 1e-300;
  s.bias = -0.1;
  s.std_error = 1.0 / 3.0;
  s.clipped_fraction = 0.024;
  s.trials = 7;
  const std::string csv = TrialSummaryToCsv(s);
  EXPECT_THAT(csv, StartsWith("exact,mean,rmse,bias,stderr,clipped_fraction\n"));
  auto back = TrialSummaryFromCsv(csv);
  ASSERT_TRUE(back.ok()) << back.status();
  back->trials = s.trials;  // not a CSV column
  EXPECT_EQ(*back, s);
  EXPECT_EQ(TrialSummaryToCsv(*back), csv);
}

TEST(SerializationTest, TrialSummaryJsonRoundTrips) {
  TrialSummary s;
  s.exact = 4;
  s.mean = 4.000000000000001;
  s.rmse = 2.5;
  s.bias = 1e-15;
  s.std_error = 0.1;
  s.clipped_fraction = 0.5;
  s.trials = 2;
  s.estimates = {3.5, 4.500000000000002};
  const std::string text = TrialSummaryToJson(s);
  auto back = TrialSummaryFromJson(text);
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(*back, s);
  EXPECT_EQ(TrialSummaryToJson(*back), text);
  EXPECT_THAT(text, HasSubstr("\"stderr\""));
}

TEST(SerializationTest, ReportJsonRoundTrips) {
  auto g = GenerateBarabasiAlbert(40, 2, 3);
  ASSERT_TRUE(g.ok());
  EstimatorOptions options;
  options.seed = 11;
  for (bool cycles : {false, true}) {
    auto report = cycles ? EstimateOddCycles(*g, 5, options) : EstimateTriangles(*g, options);
    ASSERT_TRUE(report.ok());
    const std::string text = ReportToJson(*report);
    auto back = ReportFromJson(text);
    ASSERT_TRUE(back.ok()) << back.status();
    EXPECT_EQ(*back, *report);
    EXPECT_EQ(ReportToJson(*back), text);
  }
}

TEST(SerializationTest, NoNoiseReportsCarryAWarning) {
  EstimatorOptions options;
  options.mode = NoiseMode::kNoNoise;
  auto report = EstimateTriangles(CompleteGraph(4), options);
  ASSERT_TRUE(report.ok());
  auto doc = nlohmann::json::parse(ReportToJson(*report));
  EXPECT_EQ(doc["mode"], "no-noise");
  EXPECT_THAT(doc["warning"].get<std::string>(), HasSubstr("NOT differentially private"));
  EXPECT_EQ(doc["estimate"], 4.0);
  EXPECT_EQ(ReportToCsv(*report), "estimate,clipped_users,mode\n4,0,no-noise\n");
}

TEST(SerializationTest, OrderingRoundTrips) {
  auto ordering = RankByScore({2.5, -1.0, 7.0}, 0.5);
  auto back = OrderingFromJson(OrderingToJson(ordering));
  ASSERT_TRUE(back.ok());
  EXPECT_EQ(*back, ordering);
}

TEST(SerializationTest, RejectsMalformedInput) {
  EXPECT_FALSE(TrialSummaryFromJson("{").ok());
  EXPECT_FALSE(TrialSummaryFromJson("{\"schema\": 99}").ok());
  EXPECT_FALSE(ReportFromJson("[]").ok());
  EXPECT_FALSE(OrderingFromJson("{\"schema\": 1}").ok());
  EXPECT_FALSE(TrialSummaryFromCsv("exact,mean\n1,2\n").ok());
  EXPECT_FALSE(
      TrialSummaryFromCsv("exact,mean,rmse,bias,stderr,clipped_fraction\n1,2,3,4,5\n").ok());
  EXPECT_FALSE(
      TrialSummaryFromCsv("exact,mean,rmse,bias,stderr,clipped_fraction\n1,2,3,4,5,x\n").ok());
}

TEST(SerializationTest, ExactCountsAndStatsJson) {
  auto counts = ComputeExactCounts(CompleteGraph(4), 4);
  ASSERT_TRUE(counts.ok());
  auto doc = nlohmann::json::parse(ExactCountsToJson(*counts));
  EXPECT_EQ(doc["triangles"], 4);
  EXPECT_EQ(doc["cycles"]["4"], 3);
  EXPECT_EQ(doc["paths"]["2"], 12);
  EXPECT_EQ(doc["low2stars"], 12);
  EXPECT_EQ(doc["monotone_cycles"]["4"], 2);
  auto stats = nlohmann::json::parse(GraphStatsToJson(ComputeGraphStats(CompleteGraph(4))));
  EXPECT_EQ(stats["chiba_sum"], 18);
  EXPECT_EQ(stats["degeneracy"], 3);
  EXPECT_EQ(stats["schema"], kSchemaVersion);
}

TEST(SerializationTest, ScalingAndBoundsJson) {
  ScalingReport r;
  r.rows.push_back({10, {}});
  r.exact = true;
  auto doc = nlohmann::json::parse(ScalingReportToJson(r));
  EXPECT_TRUE(doc["slope"].is_null());
  EXPECT_EQ(doc["rows"][0]["n"], 10);
  EXPECT_THAT(ScalingReportToCsv(r), StartsWith("n,exact,mean,rmse,bias,stderr,clipped_fraction\n10,"));
  BoundReport b;
  b.chiba_bound_holds = true;
  auto bdoc = nlohmann::json::parse(BoundReportToJson(b));
  EXPECT_EQ(bdoc["chiba_bound_holds"], true);
  EXPECT_EQ(bdoc["chiba_twice_bound_holds"], false);
}

}  // namespace
}  // namespace edgeldp
