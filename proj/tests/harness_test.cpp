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

#include "tristream/harness.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "tristream/errors.hpp"
#include "tristream/generators.hpp"
#include "tristream/report.hpp"

namespace tristream {
namespace {

DetectorConfig WithT(std::uint64_t T) {
  DetectorConfig cfg;
  cfg.T = T;
  return cfg;
}

TEST(TrialSeedTest, PureAndDistinct) {
  EXPECT_EQ(TrialSeed(42, 7), TrialSeed(42, 7));
  EXPECT_NE(TrialSeed(42, 7), TrialSeed(42, 8));
  EXPECT_NE(TrialSeed(42, 7), TrialSeed(43, 7));
}

TEST(RunTrialsTest, TriangleFreeNeverFound) {
  const Graph g = GenerateDoubleBipartite(10);
  const TrialReport r = RunTrials(g, Algorithm::kA, WithT(1000), 500, 1);
  EXPECT_EQ(r.found, 0u);
  EXPECT_EQ(r.trials, 500u);
  EXPECT_EQ(r.found + r.not_found + r.fail, r.trials);
  EXPECT_EQ(r.config.m_known, g.num_edges());
}

TEST(RunTrialsTest, DisjointTrianglesReproducible) {
  const Graph g = GenerateDisjointTriangles(1000);
  const TrialReport a = RunTrials(g, Algorithm::kA, WithT(1000), 200, 99);
  const TrialReport b = RunTrials(g, Algorithm::kA, WithT(1000), 200, 99, {.jobs = 4});
  EXPECT_GE(3 * a.found, 2 * a.trials);
  EXPECT_EQ(TrialReportJson(a, false), TrialReportJson(b, false));
  EXPECT_LE(a.stored_edges_mean, static_cast<double>(a.stored_edges_max));
  EXPECT_LE(static_cast<double>(a.stored_edges_max), StorageThreshold(3000, 1000));
}

// Without m the doubling guess may store up to twice as many edges.
TEST(RunTrialsTest, AdaptiveDisjointTriangles) {
  const Graph g = GenerateDisjointTriangles(1000);
  const TrialReport r = RunTrials(g, Algorithm::kAAdaptive, WithT(1000), 1000, 5,
                                  {.jobs = 4});
  EXPECT_GE(3 * r.found, 2 * r.trials);
  EXPECT_LE(static_cast<double>(r.stored_edges_max_completed),
            2 * StorageThreshold(g.num_edges(), 1000));
}

TEST(RunTrialsTest, SingleTrialMatchesSingleRun) {
  const Graph g = GenerateTower(30, 5);
  const TrialReport r = RunTrials(g, Algorithm::kAAdaptive, WithT(1000), 1, 5);
  DetectorConfig cfg = WithT(1000);
  cfg.seed = TrialSeed(5, 0);
  EdgeStream stream(g, 2);
  const DetectionOutcome o = RunAlgorithmAAdaptive(stream, cfg);
  EXPECT_EQ(r.found, o.verdict == Verdict::kTriangleFound ? 1u : 0u);
  EXPECT_EQ(r.not_found, o.verdict == Verdict::kNoTriangle ? 1u : 0u);
  EXPECT_EQ(r.fail, o.verdict == Verdict::kFail ? 1u : 0u);
  EXPECT_EQ(r.stored_edges_max, o.stored_edges_peak);
  EXPECT_EQ(r.stored_edges_mean, static_cast<double>(o.stored_edges_peak));
  EXPECT_EQ(r.stored_edges_sd, 0.0);
}

TEST(RunTrialsTest, ParallelEqualsSerialWithShuffle) {
  const Graph g = GenerateTower(50, 100);
  DetectorConfig cfg;
  cfg.rho = 52;
  for (unsigned jobs : {2u, 3u, 8u}) {
    const TrialReport serial =
        RunTrials(g, Algorithm::kA2, cfg, 301, 3, {.jobs = 1, .shuffle_order = true});
    const TrialReport parallel =
        RunTrials(g, Algorithm::kA2, cfg, 301, 3, {.jobs = jobs, .shuffle_order = true});
    EXPECT_EQ(TrialReportJson(serial, false), TrialReportJson(parallel, false));
  }
}

TEST(RunTrialsTest, Errors) {
  const Graph g = GenerateTower(3);
  EXPECT_THROW(RunTrials(g, Algorithm::kA, WithT(1), 0, 1), InvalidArgs);
  EXPECT_THROW(RunTrials(g, Algorithm::kA, WithT(0), 5, 1), InvalidConfig);
  DetectorConfig bad;
  bad.rho = 0;
  EXPECT_THROW(RunTrials(g, Algorithm::kA2, bad, 5, 1, {.jobs = 4}), InvalidConfig);
}

TEST(TrialAccumulatorTest, MergeEqualsSequentialAdd) {
  std::vector<DetectionOutcome> outs;
  for (int i = 0; i < 37; ++i) {
    DetectionOutcome o;
    o.verdict = static_cast<Verdict>(i % 3);
    o.stored_edges_peak = static_cast<std::uint64_t>((i * 7919) % 101);
    outs.push_back(o);
  }
  TrialAccumulator all;
  TrialAccumulator left;
  TrialAccumulator right;
  for (std::size_t i = 0; i < outs.size(); ++i) {
    all.Add(outs[i]);
    (i < 20 ? left : right).Add(outs[i]);
  }
  right.Merge(left);
  TrialReport a;
  TrialReport b;
  all.FillReport(a);
  right.FillReport(b);
  EXPECT_EQ(TrialReportJson(a, false), TrialReportJson(b, false));
  EXPECT_LE(b.stored_edges_max_completed, b.stored_edges_max);
}

TEST(WilsonIntervalTest, KnownValues) {
  // 0 of 1000: upper = z^2 / (n + z^2).
  const double z = 1.959963984540054;
  const auto zero = WilsonInterval(0, 1000);
  EXPECT_EQ(zero.lower, 0.0);
  EXPECT_NEAR(zero.upper, z * z / (1000 + z * z), 1e-15);
  const auto half = WilsonInterval(50, 100);
  EXPECT_NEAR(half.lower + half.upper, 1.0, 1e-12);
  EXPECT_LT(half.lower, 0.5);
  EXPECT_GT(half.upper, 0.5);
  // 10/100 against a textbook interval [0.0552, 0.1744].
  const auto tenth = WilsonInterval(10, 100);
  EXPECT_NEAR(tenth.lower, 0.0552, 5e-4);
  EXPECT_NEAR(tenth.upper, 0.1744, 5e-4);
}

TEST(VerifyVarianceTest, DegenerateProbabilities) {
  const Graph g = GenerateTower(4);
  const VarianceCheck zero = VerifyVariance(g, 0.0, 100, 1);
  EXPECT_EQ(zero.empirical_mean, 0.0);
  EXPECT_EQ(zero.exact.mu, 0.0);
  EXPECT_EQ(zero.z_mean, 0.0);
  const VarianceCheck one = VerifyVariance(g, 1.0, 100, 1);
  EXPECT_EQ(one.empirical_mean, 4.0);
  EXPECT_EQ(one.empirical_variance, 0.0);
  EXPECT_EQ(one.z_variance, 0.0);
  EXPECT_THROW(VerifyVariance(g, 2.0, 10, 1), InvalidProbability);
  EXPECT_THROW(VerifyVariance(g, 0.5, 0, 1), InvalidArgs);
}

TEST(VerifyVarianceTest, TwoTowerWithinFiveStandardErrors) {
  const VarianceCheck c = VerifyVariance(GenerateTower(2), 0.5, 100000, 17, 4);
  EXPECT_DOUBLE_EQ(c.exact.sigma_sq, 0.25);
  EXPECT_LT(std::abs(c.z_mean), 5.0);
  EXPECT_LT(std::abs(c.z_variance), 5.0);
}

// Monte Carlo check on graphs too large to enumerate.
TEST(VerifyVarianceTest, LargerGraphsWithinFiveStandardErrors) {
  const std::vector<Graph> graphs = {GenerateRandom(14, 0.5, 3), GenerateTower(20, 3),
                                     GenerateRandom(10, 1.0, 0)};
  for (const Graph& g : graphs) {
    const VarianceCheck c = VerifyVariance(g, 0.4, 100000, 23, 4);
    EXPECT_LT(std::abs(c.z_mean), 5.0) << g.num_edges();
    EXPECT_LT(std::abs(c.z_variance), 5.0) << g.num_edges();
  }
}

TEST(VerifyVarianceTest, ParallelMatchesSerial) {
  const Graph g = GenerateTower(6);
  EXPECT_EQ(VarianceJson(VerifyVariance(g, 0.3, 2000, 8, 1)),
            VarianceJson(VerifyVariance(g, 0.3, 2000, 8, 5)));
}

TEST(AuditGraphTest, Examples) {
  const AuditRecord k4 = AuditGraph(GenerateRandom(4, 1.0, 0));
  EXPECT_EQ(k4.stats.pi, 6u);
  EXPECT_EQ(k4.pair_bound, 12.0);
  EXPECT_TRUE(k4.passed());
  for (std::uint64_t s = 1; s < 40; ++s) EXPECT_TRUE(AuditGraph(GenerateTower(s)).passed());
  const AuditRecord free = AuditGraph(GenerateDoubleBipartite(4));
  EXPECT_EQ(free.pair_bound, 0.0);
  EXPECT_TRUE(free.passed());
}

TEST(ReportTest, FormatsAndKeys) {
  const TrialReport r =
      RunTrials(GenerateTower(5), Algorithm::kA, WithT(216), 3, 4);
  const std::string json = FormatTrialReport(r, ReportFormat::kJson);
  EXPECT_EQ(json.find('\n'), json.size() - 1);
  EXPECT_NE(json.find("\"wall_time_ms\""), std::string::npos);
  EXPECT_EQ(TrialReportJson(r, false).find("wall_time_ms"), std::string::npos);
  EXPECT_NE(TrialReportJson(r).find("\"found\":3"), std::string::npos);

  const std::string table = FormatTrialReport(r, ReportFormat::kTable);
  EXPECT_NE(table.find("config.alg"), std::string::npos);
  const std::string csv = FormatTrialReport(r, ReportFormat::kCsv);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2);

  EXPECT_EQ(StatsJson(ComputeStats(GenerateTower(5))),
            R"({"t3":5,"rho":7,"max_tower":5,"pi":10,"n":7,"m":11})");
  EXPECT_THROW(ParseReportFormat("xml"), InvalidArgs);
}

}  // namespace
}  // namespace tristream
