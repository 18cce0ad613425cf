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

#include "tristream/detectors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "tristream/errors.hpp"
#include "tristream/random.hpp"

namespace tristream {

namespace {

void CheckThreshold(const DetectorConfig& cfg) {
  if (cfg.T < 1) throw InvalidConfig("triangle threshold T must be >= 1");
}

DetectionOutcome Finish(Verdict verdict, int passes_used,
                        std::uint64_t peak, const SampledSubgraph& h) {
  DetectionOutcome out;
  out.verdict = verdict;
  out.passes_used = passes_used;
  out.stored_edges_peak = peak;
  out.stored_edges = h.edges();
  return out;
}

// Second pass shared by all detectors: a triangle exists in the graph with
// two of its edges in `h` iff its third edge completes a wedge in `h`.
DetectionOutcome ClosingPass(EdgeStream& stream, const SampledSubgraph& h,
                             std::uint64_t peak) {
  for (const Edge& e : stream.NextPass()) {
    if (h.CompletesTriangle(e)) {
      return Finish(Verdict::kTriangleFound, 2, peak, h);
    }
  }
  return Finish(Verdict::kNoTriangle, 2, peak, h);
}

// Edge sparsification with a storage limit that may depend on how many
// edges have been read so far.
template <typename LimitFn>
DetectionOutcome SparsifyAndDetect(EdgeStream& stream,
                                   const DetectorConfig& cfg,
                                   LimitFn storage_limit) {
  const double p = SparsificationProbability(cfg.T);
  Rng rng(cfg.seed);
  SampledSubgraph h;

  std::uint64_t seen = 0;
  for (const Edge& e : stream.NextPass()) {
    ++seen;
    if (UniformUnit(rng) >= p) continue;
    h.Add(e);
    if (static_cast<double>(h.size()) > storage_limit(seen)) {
      return Finish(Verdict::kFail, 1, h.size(), h);
    }
  }
  const std::uint64_t peak = h.size();
  if (h.ContainsTriangle()) return Finish(Verdict::kTriangleFound, 1, peak, h);
  return ClosingPass(stream, h, peak);
}

// T^(1/3), exact when T is a perfect cube so that p = 1 at T = 216.
double CubeRoot(std::uint64_t T) {
  const double r = std::cbrt(static_cast<double>(T));
  const auto k = static_cast<std::uint64_t>(std::llround(r));
  return k * k * k == T ? static_cast<double>(k) : r;
}

}  // namespace

std::string_view VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kTriangleFound: return "TriangleFound";
    case Verdict::kNoTriangle: return "NoTriangle";
    case Verdict::kFail: return "Fail";
  }
  return "?";
}

double SparsificationProbability(std::uint64_t T) {
  return std::min(1.0, 6.0 / CubeRoot(T));
}

double StorageThreshold(std::uint64_t m, std::uint64_t T) {
  return 30.0 * static_cast<double>(m) / CubeRoot(T);
}

DetectionOutcome RunAlgorithmA(EdgeStream& stream, const DetectorConfig& cfg) {
  CheckThreshold(cfg);
  if (!cfg.m_known) throw InvalidConfig("edge count m is required");
  if (*cfg.m_known != stream.num_edges()) {
    throw InvalidConfig("m = " + std::to_string(*cfg.m_known) +
                        " does not match the stream's " +
                        std::to_string(stream.num_edges()) + " edges");
  }
  const double limit = StorageThreshold(*cfg.m_known, cfg.T);
  return SparsifyAndDetect(stream, cfg,
                           [limit](std::uint64_t) { return limit; });
}

DetectionOutcome RunAlgorithmAAdaptive(EdgeStream& stream,
                                       const DetectorConfig& cfg) {
  CheckThreshold(cfg);
  const std::uint64_t T = cfg.T;
  return SparsifyAndDetect(stream, cfg, [T](std::uint64_t seen) {
    return StorageThreshold(std::bit_ceil(seen), T);
  });
}

std::uint64_t VertexSampleSize(std::uint64_t n, std::uint64_t rho) {
  if (rho < 1) throw InvalidConfig("triangle density rho must be >= 1");
  // ceil(4n / rho) without overflow for any n < 2^62.
  const std::uint64_t k = (4 * n + rho - 1) / rho;
  return std::min(k, n);
}

DetectionOutcome RunAlgorithmA2(EdgeStream& stream, const DetectorConfig& cfg) {
  const std::uint64_t n = stream.num_vertices();
  const std::uint64_t k = VertexSampleSize(n, cfg.rho);

  std::vector<bool> in_sample(n, k == n);
  if (k < n) {
    // Partial Fisher-Yates: the first k slots end up a uniform k-subset.
    std::vector<VertexId> ids(n);
    std::iota(ids.begin(), ids.end(), VertexId{0});
    Rng rng(cfg.seed);
    for (std::uint64_t i = 0; i < k; ++i) {
      std::swap(ids[i], ids[i + UniformBelow(rng, n - i)]);
      in_sample[ids[i]] = true;
    }
  }

  SampledSubgraph h;
  for (const Edge& e : stream.NextPass()) {
    if (in_sample[e.u] || in_sample[e.v]) h.Add(e);
  }
  return ClosingPass(stream, h, h.size());
}

std::string_view AlgorithmName(Algorithm alg) {
  switch (alg) {
    case Algorithm::kA: return "a";
    case Algorithm::kAAdaptive: return "a-adaptive";
    case Algorithm::kA2: return "a2";
  }
  return "?";
}

Algorithm ParseAlgorithm(std::string_view name) {
  if (name == "a") return Algorithm::kA;
  if (name == "a-adaptive") return Algorithm::kAAdaptive;
  if (name == "a2") return Algorithm::kA2;
  throw InvalidArgs("unknown algorithm '" + std::string(name) +
                    "' (expected a, a-adaptive or a2)");
}

DetectionOutcome RunDetector(Algorithm alg, EdgeStream& stream,
                             const DetectorConfig& cfg) {
  switch (alg) {
    case Algorithm::kA: return RunAlgorithmA(stream, cfg);
    case Algorithm::kAAdaptive: return RunAlgorithmAAdaptive(stream, cfg);
    case Algorithm::kA2: return RunAlgorithmA2(stream, cfg);
  }
  throw InvalidArgs("unknown algorithm");
}

}  // namespace tristream
