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

#include "tristream/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "test_oracles.hpp"
#include "tristream/errors.hpp"
#include "tristream/generators.hpp"

namespace tristream {
namespace {

using testing::EnumerateSparsification;
using testing::NaiveEdgeSharingPairs;
using testing::NaiveTriangles;

Graph Complete(std::uint64_t n) { return GenerateRandom(n, 1.0, 0); }

TEST(ComputeStatsTest, Triangle) {
  const GraphStats s = ComputeStats(GenerateDisjointTriangles(1));
  EXPECT_EQ(s.t3, 1u);
  EXPECT_EQ(s.rho, 3u);
  EXPECT_EQ(s.max_tower, 1u);
  EXPECT_EQ(s.pi, 0u);
  EXPECT_EQ(s.tower_heights, (std::vector<std::uint64_t>{1, 1, 1}));
}

TEST(ComputeStatsTest, FiveTower) {
  const GraphStats s = ComputeStats(GenerateTower(5));
  EXPECT_EQ(s.t3, 5u);
  EXPECT_EQ(s.rho, 7u);
  EXPECT_EQ(s.max_tower, 5u);
  EXPECT_EQ(s.pi, 10u);
}

TEST(ComputeStatsTest, K4) {
  // Brute force over the 4 triangles of K4: every pair shares an edge.
  const GraphStats s = ComputeStats(Complete(4));
  EXPECT_EQ(s.t3, 4u);
  EXPECT_EQ(s.rho, 4u);
  EXPECT_EQ(s.max_tower, 2u);
  EXPECT_EQ(s.pi, 6u);
}

TEST(ComputeStatsTest, DoubleBipartiteIsTriangleFree) {
  const GraphStats s = ComputeStats(GenerateDoubleBipartite(2));
  EXPECT_EQ(s.t3, 0u);
  EXPECT_EQ(s.rho, 0u);
  EXPECT_EQ(s.pi, 0u);
  EXPECT_EQ(s.max_tower, 0u);
}

TEST(ComputeStatsTest, EmptyGraph) {
  const GraphStats s = ComputeStats(Graph());
  EXPECT_EQ(s.t3, 0u);
  EXPECT_EQ(s.max_tower, 0u);
}

// Edge intersection against naive triple enumeration.
TEST(ComputeStatsTest, MatchesTripleEnumeration) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::uint64_t n = 1 + seed % 30;
    const Graph g = GenerateRandom(n, 0.1 + 0.8 * ((seed * 37) % 100) / 100.0, seed);
    const auto tris = NaiveTriangles(g);
    const GraphStats s = ComputeStats(g);
    ASSERT_EQ(s.t3, tris.size()) << "seed " << seed;
    EXPECT_EQ(CountTriangles(g), tris.size());
    EXPECT_EQ(s.pi, NaiveEdgeSharingPairs(tris)) << "seed " << seed;
    std::set<VertexId> on;
    for (const auto& t : tris) on.insert(t.begin(), t.end());
    EXPECT_EQ(s.rho, on.size());

    std::uint64_t pi_from_heights = 0;
    for (std::uint64_t t : s.tower_heights) pi_from_heights += t * (t - (t > 0)) / 2;
    EXPECT_EQ(s.pi, pi_from_heights);
  }
}

TEST(ComputeStatsTest, BoundInvariantsOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Graph g = GenerateRandom(2 + seed % 49, ((seed * 13) % 97) / 96.0, seed);
    const GraphStats s = ComputeStats(g);
    EXPECT_TRUE(SatisfiesPairBound(s)) << "seed " << seed;
    EXPECT_TRUE(SatisfiesDensityBounds(s)) << "seed " << seed;
    if (s.max_tower >= 1) {
      EXPECT_LE(2 * s.pi, 3 * s.t3 * s.max_tower);
    }
  }
}

TEST(SparsificationMomentsTest, SingleTriangle) {
  const auto m = ComputeSparsificationMoments(GenerateDisjointTriangles(1), 0.5);
  EXPECT_DOUBLE_EQ(m.mu, 0.125);
  EXPECT_DOUBLE_EQ(m.sigma_sq, 0.109375);
}

TEST(SparsificationMomentsTest, DisjointTrianglesHaveNoCovariance) {
  const auto m = ComputeSparsificationMoments(GenerateDisjointTriangles(3), 0.1);
  EXPECT_NEAR(m.mu, 0.003, 1e-15);
  EXPECT_NEAR(m.sigma_sq, 0.002997, 1e-15);
}

TEST(SparsificationMomentsTest, TwoTower) {
  // 0.25 from summing over all 2^5 retention patterns.
  const auto m = ComputeSparsificationMoments(GenerateTower(2), 0.5);
  EXPECT_DOUBLE_EQ(m.mu, 0.25);
  EXPECT_DOUBLE_EQ(m.sigma_sq, 0.25);
}

TEST(SparsificationMomentsTest, DegenerateProbabilities) {
  const Graph k4 = Complete(4);
  const auto zero = ComputeSparsificationMoments(k4, 0.0);
  EXPECT_EQ(zero.mu, 0.0);
  EXPECT_EQ(zero.sigma_sq, 0.0);
  const auto one = ComputeSparsificationMoments(k4, 1.0);
  EXPECT_EQ(one.mu, 4.0);
  EXPECT_EQ(one.sigma_sq, 0.0);
}

TEST(SparsificationMomentsTest, RejectsBadProbability) {
  const Graph k3 = GenerateDisjointTriangles(1);
  EXPECT_THROW(ComputeSparsificationMoments(k3, -0.01), InvalidProbability);
  EXPECT_THROW(ComputeSparsificationMoments(k3, 1.01), InvalidProbability);
  EXPECT_THROW(ComputeSparsificationMoments(k3, std::nan("")), InvalidProbability);
}

TEST(SparsificationMomentsTest, MatchesExhaustiveEnumeration) {
  std::vector<Graph> corpus = {Complete(4), Complete(5)};
  for (std::uint64_t s = 1; s <= 5; ++s) corpus.push_back(GenerateTower(s));
  for (std::uint64_t t = 1; t <= 4; ++t) corpus.push_back(GenerateDisjointTriangles(t));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = GenerateRandom(7, 0.5, seed);
    if (g.num_edges() <= 14) corpus.push_back(g);
  }
  for (const Graph& g : corpus) {
    for (double p : {0.0, 0.1, 0.3, 0.5, 0.77, 1.0}) {
      const auto exact = EnumerateSparsification(g, p);
      const auto m = ComputeSparsificationMoments(g, p);
      const double tol_mu = 1e-12 * std::max(1.0L, exact.mean);
      const double tol_var = 1e-12 * std::max(1.0L, exact.variance);
      EXPECT_NEAR(m.mu, static_cast<double>(exact.mean), tol_mu);
      EXPECT_NEAR(m.sigma_sq, static_cast<double>(exact.variance), tol_var)
          << "m=" << g.num_edges() << " p=" << p;
    }
  }
}

TEST(ChernoffTest, PhiValues) {
  EXPECT_EQ(ChernoffPhi(0.0), 0.0);
  EXPECT_DOUBLE_EQ(ChernoffPhi(-1.0), 1.0);
  EXPECT_NEAR(ChernoffPhi(1.0), 2 * std::log(2.0) - 1, 1e-15);
  EXPECT_THROW(ChernoffPhi(-1.5), InvalidArgs);
}

TEST(ChernoffTest, ZeroDeviationIsTrivial) {
  EXPECT_EQ(ChernoffTail(10, 0, TailSide::kUpper), 1.0);
  EXPECT_EQ(ChernoffTail(10, 0, TailSide::kLower), 1.0);
}

TEST(ChernoffTest, LargeTowerFloorBound) {
  const double bound = ChernoffTail(36, 35, TailSide::kLower);
  EXPECT_LE(bound, std::exp(-30.0));
  EXPECT_LE(bound, 0.001);
  EXPECT_NEAR(std::log(bound), -31.41648106154389, 1e-9);
}

TEST(ChernoffTest, StorageOverflowBound) {
  // 5m' stored when m' = 4 is a deviation of 16 above the mean.
  EXPECT_LE(ChernoffTail(4, 16, TailSide::kUpper), 1.0 / 50);
  EXPECT_NEAR(ChernoffTail(4, 16, TailSide::kUpper), 9.317762225152072e-08, 1e-18);
}

TEST(ChernoffTest, MonotoneInDeviation) {
  for (double mu : {0.5, 4.0, 36.0, 1000.0}) {
    for (TailSide side : {TailSide::kUpper, TailSide::kLower}) {
      double prev = 1.0;
      for (int i = 0; i <= 200; ++i) {
        const double t = mu * i / 200.0;
        const double b = ChernoffTail(mu, t, side);
        EXPECT_LE(b, prev + 1e-15) << mu << " " << t;
        EXPECT_GE(b, 0.0);
        prev = b;
      }
    }
  }
}

TEST(ChernoffTest, RejectsBadArguments) {
  EXPECT_THROW(ChernoffTail(0, 1, TailSide::kUpper), InvalidArgs);
  EXPECT_THROW(ChernoffTail(1, -1, TailSide::kUpper), InvalidArgs);
  EXPECT_THROW(ChernoffTail(1, 2, TailSide::kLower), InvalidArgs);
  EXPECT_NO_THROW(ChernoffTail(1, 2, TailSide::kUpper));
}

TEST(ChebyshevTest, Values) {
  EXPECT_NEAR(ChebyshevZeroBound(216, 110), 0.2593449931412895, 1e-15);
  EXPECT_LE(ChebyshevZeroBound(216, 110), 0.26);
  EXPECT_EQ(ChebyshevZeroBound(5, 0), 0.0);
  EXPECT_EQ(ChebyshevZeroBound(5, 10), 1.0);
  EXPECT_THROW(ChebyshevZeroBound(0, 1), InvalidArgs);
  EXPECT_THROW(ChebyshevZeroBound(-1, 1), InvalidArgs);
}

TEST(BoundChecksTest, DetectsViolations) {
  GraphStats s;
  s.t3 = 2;
  s.max_tower = 1;
  s.pi = 4;  // 8 > 6
  EXPECT_FALSE(SatisfiesPairBound(s));
  s.pi = 3;
  EXPECT_TRUE(SatisfiesPairBound(s));

  GraphStats d;
  d.t3 = 5;
  d.rho = 4;  // C(4,3) = 4 < 5
  EXPECT_FALSE(SatisfiesDensityBounds(d));
  d.rho = 16;  // > 15
  EXPECT_FALSE(SatisfiesDensityBounds(d));
  d.rho = 15;
  EXPECT_TRUE(SatisfiesDensityBounds(d));
}

}  // namespace
}  // namespace tristream
