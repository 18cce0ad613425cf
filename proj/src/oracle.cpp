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

#include <algorithm>

#include "tristream/errors.hpp"

namespace tristream {

namespace {

std::uint64_t CommonNeighbors(std::span<const VertexId> a,
                              std::span<const VertexId> b) {
  std::uint64_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

__extension__ typedef unsigned __int128 U128;

std::uint64_t Choose2(std::uint64_t k) { return k * (k - (k > 0)) / 2; }

}  // namespace

GraphStats ComputeStats(const Graph& g) {
  GraphStats stats;
  stats.num_vertices = g.num_vertices();
  stats.num_edges = g.num_edges();
  stats.tower_heights.reserve(g.num_edges());

  std::vector<bool> on_triangle(g.num_vertices(), false);
  std::uint64_t edge_triangle_sum = 0;
  for (const Edge& e : g.edges()) {
    const std::uint64_t t = CommonNeighbors(g.neighbors(e.u), g.neighbors(e.v));
    stats.tower_heights.push_back(t);
    edge_triangle_sum += t;
    stats.max_tower = std::max(stats.max_tower, t);
    stats.pi += Choose2(t);
    // Every vertex on a triangle is an endpoint of one of its edges.
    if (t > 0) {
      on_triangle[e.u] = true;
      on_triangle[e.v] = true;
    }
  }
  stats.t3 = edge_triangle_sum / 3;
  stats.rho = static_cast<std::uint64_t>(
      std::count(on_triangle.begin(), on_triangle.end(), true));
  return stats;
}

std::uint64_t CountTriangles(const Graph& g) {
  std::uint64_t sum = 0;
  for (const Edge& e : g.edges()) {
    sum += CommonNeighbors(g.neighbors(e.u), g.neighbors(e.v));
  }
  return sum / 3;
}

SparsificationMoments ComputeSparsificationMoments(const GraphStats& stats,
                                                   double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidProbability(p);
  const double p3 = p * p * p;
  const double p5 = p3 * p * p;
  const double p6 = p3 * p3;
  const double t3 = static_cast<double>(stats.t3);
  const double pi = static_cast<double>(stats.pi);

  SparsificationMoments m;
  m.p = p;
  m.mu = p3 * t3;
  m.sigma_sq = t3 * p3 * (1.0 - p3) + 2.0 * pi * (p5 - p6);
  m.sigma_sq = std::max(0.0, m.sigma_sq);
  return m;
}

SparsificationMoments ComputeSparsificationMoments(const Graph& g, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidProbability(p);
  return ComputeSparsificationMoments(ComputeStats(g), p);
}

bool SatisfiesPairBound(const GraphStats& stats) {
  // 2 pi <= 3 t3 h, in integers.
  const U128 lhs = U128{stats.pi} * 2;
  const U128 rhs = U128{stats.t3} * stats.max_tower * 3;
  return lhs <= rhs;
}

bool SatisfiesDensityBounds(const GraphStats& stats) {
  if (stats.t3 == 0) return stats.rho == 0;
  const U128 r = stats.rho;
  const U128 choose3 = r < 3 ? 0 : r * (r - 1) * (r - 2) / 6;
  return U128{stats.rho} <= U128{stats.t3} * 3 && choose3 >= stats.t3;
}

}  // namespace tristream
