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

#include <cstdint>
#include <vector>

#include "tristream/graph.hpp"

namespace tristream {

// Exact triangle statistics of a graph.
struct GraphStats {
  std::uint64_t num_vertices = 0;
  std::uint64_t num_edges = 0;
  std::uint64_t t3 = 0;         // triangles
  std::uint64_t rho = 0;        // vertices lying on at least one triangle
  std::uint64_t max_tower = 0;  // largest number of triangles on one edge
  std::uint64_t pi = 0;         // unordered triangle pairs sharing an edge
  // Number of triangles through each edge, indexed like Graph::edges().
  std::vector<std::uint64_t> tower_heights;
};

// Enumerates triangles by intersecting the sorted neighbor lists of each
// edge's endpoints: O(sum over edges of deg u + deg v).
GraphStats ComputeStats(const Graph& g);

// Triangle count alone, via the same per-edge intersections.
std::uint64_t CountTriangles(const Graph& g);

// Moments of the triangle count of the subgraph that keeps every edge
// independently with probability p.
struct SparsificationMoments {
  double p = 0.0;
  double mu = 0.0;        // p^3 * t3
  double sigma_sq = 0.0;  // exact variance
};

// mu = p^3 t3 and sigma^2 = t3 p^3 (1 - p^3) + 2 pi (p^5 - p^6): triangles
// sharing an edge have covariance p^5 - p^6, all other pairs are independent.
// Throws InvalidProbability unless 0 <= p <= 1.
SparsificationMoments ComputeSparsificationMoments(const GraphStats& stats,
                                                   double p);
SparsificationMoments ComputeSparsificationMoments(const Graph& g, double p);

// --- Tail bounds. Every bound is clamped to [0, 1]. ---

// (1 + x) ln(1 + x) - x for x >= -1, continuous at x = -1 where it is 1.
double ChernoffPhi(double x);

enum class TailSide { kUpper, kLower };

// Binomial tail bound with mean `mu` and deviation `t`:
//   upper: Pr[X >= mu + t] <= exp(-mu phi(t / mu))
//   lower: Pr[X <= mu - t] <= exp(-mu phi(-t / mu))
// Requires mu > 0, t >= 0, and t <= mu on the lower side; throws InvalidArgs.
double ChernoffTail(double mu, double t, TailSide side);

// Chebyshev's bound on Pr[X = 0]: min(1, (sigma / mu)^2). Requires mu > 0.
double ChebyshevZeroBound(double mu, double sigma);

// Checks of the inequalities every graph must satisfy. Both hold vacuously on
// triangle-free graphs.
//   Pairs of edge-sharing triangles: pi <= 3 t3 h / 2 with h the max tower.
//   Triangle density: rho <= 3 t3 and C(rho, 3) >= t3.
bool SatisfiesPairBound(const GraphStats& stats);
bool SatisfiesDensityBounds(const GraphStats& stats);

}  // namespace tristream
