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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tristream/edge_stream.hpp"
#include "tristream/graph.hpp"

namespace tristream {

// Edges kept in memory by a detector, indexed for common-neighbor queries.
class SampledSubgraph {
 public:
  // Returns false if the edge was already stored.
  bool Add(const Edge& e);
  bool Contains(const Edge& e) const { return keys_.contains(EdgeKey(e)); }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  // True iff u and v have a common neighbor among the stored edges. The edge
  // (u, v) itself need not be stored. Cost is linear in the smaller of the
  // two stored degrees.
  bool CompletesTriangle(const Edge& e) const;

  // True iff the stored edges contain a triangle.
  bool ContainsTriangle() const;

 private:
  std::unordered_set<std::uint64_t> keys_;
  std::unordered_map<VertexId, std::vector<VertexId>> adjacency_;
  std::vector<Edge> edges_;
};

enum class Verdict { kTriangleFound, kNoTriangle, kFail };

std::string_view VerdictName(Verdict v);

struct DetectionOutcome {
  Verdict verdict = Verdict::kNoTriangle;
  // Maximum number of edges held at once. For a Fail verdict this includes
  // the edge that crossed the threshold.
  std::uint64_t stored_edges_peak = 0;
  int passes_used = 0;
  // The stored edges when the run ended, in the order they were stored.
  std::vector<Edge> stored_edges;
};

struct DetectorConfig {
  // Triangle threshold of the distinguishing problem; used by the edge
  // sparsification detectors. Must be >= 1.
  std::uint64_t T = 1;
  // Triangle density supplied to the vertex sampling detector. Must be >= 1.
  std::uint64_t rho = 1;
  // Edge count known in advance; required by RunAlgorithmA.
  std::optional<std::uint64_t> m_known;
  std::uint64_t seed = 0;
};

// Edge retention probability min(1, 6 / T^(1/3)).
double SparsificationProbability(std::uint64_t T);

// Storage limit 5 m' = 30 m / T^(1/3). Exceeding it (strictly) is a Fail.
double StorageThreshold(std::uint64_t m, std::uint64_t T);

// Two-pass edge sparsification detector.
//   Pass 1 keeps each edge with probability p, one uniform draw per edge in
//   stream order, failing as soon as more than 5m' edges are held. If the
//   kept subgraph H already has a triangle the run stops after one pass.
//   Pass 2 reports a triangle iff some stream edge closes a wedge in H.
// Never reports a triangle on a triangle-free graph.
// Throws InvalidConfig if T < 1 or m_known is absent or differs from the
// stream's edge count; PassBudgetExhausted if a needed pass is unavailable.
DetectionOutcome RunAlgorithmA(EdgeStream& stream, const DetectorConfig& cfg);

// RunAlgorithmA without knowing m. The storage limit tracks a doubling guess
// m_i, the smallest power of two >= edges seen so far, so the limit is
// 30 m_i / T^(1/3). Sampling is unchanged, so for the same seed the kept
// edges coincide with RunAlgorithmA's until either run fails.
DetectionOutcome RunAlgorithmAAdaptive(EdgeStream& stream,
                                       const DetectorConfig& cfg);

// Two-pass vertex sampling detector. Pass 1 samples ceil(4n / rho) distinct
// vertices uniformly (all of them when that reaches n) and stores every
// edge touching the sample. Pass 2 reports a triangle iff some stream edge
// closes a wedge among the stored edges. Never fails.
// Throws InvalidConfig if rho < 1.
DetectionOutcome RunAlgorithmA2(EdgeStream& stream, const DetectorConfig& cfg);

// Size of the vertex sample used by RunAlgorithmA2.
std::uint64_t VertexSampleSize(std::uint64_t n, std::uint64_t rho);

enum class Algorithm { kA, kAAdaptive, kA2 };

std::string_view AlgorithmName(Algorithm alg);
// Accepts "a", "a-adaptive", "a2". Throws InvalidArgs otherwise.
Algorithm ParseAlgorithm(std::string_view name);

// Dispatches to the selected detector.
DetectionOutcome RunDetector(Algorithm alg, EdgeStream& stream,
                             const DetectorConfig& cfg);

}  // namespace tristream
