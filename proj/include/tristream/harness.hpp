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

#include "tristream/detectors.hpp"
#include "tristream/graph.hpp"
#include "tristream/oracle.hpp"

namespace tristream {

struct TrialOptions {
  // Worker threads. Results do not depend on this value.
  unsigned jobs = 1;
  // Present each trial's edges in a per-trial seeded random order instead of
  // input order.
  bool shuffle_order = false;
};

// Aggregate of repeated detector runs. Fail is counted separately from
// NoTriangle; both are wrong answers on a graph with triangles.
struct TrialReport {
  Algorithm algorithm = Algorithm::kA;
  DetectorConfig config;  // seed is unused; see master_seed
  std::uint64_t num_vertices = 0;
  std::uint64_t num_edges = 0;
  std::uint64_t master_seed = 0;
  bool shuffle_order = false;

  std::uint64_t trials = 0;
  std::uint64_t found = 0;
  std::uint64_t not_found = 0;
  std::uint64_t fail = 0;

  double stored_edges_mean = 0.0;
  double stored_edges_sd = 0.0;  // sample standard deviation
  std::uint64_t stored_edges_max = 0;
  // Maximum over trials that did not end in Fail.
  std::uint64_t stored_edges_max_completed = 0;

  // Informational; excluded from reproducibility comparisons.
  double wall_time_ms = 0.0;
};

// Mergeable running totals of detector outcomes.
class TrialAccumulator {
 public:
  void Add(const DetectionOutcome& outcome);
  void Merge(const TrialAccumulator& other);
  void FillReport(TrialReport& report) const;

 private:
  std::uint64_t trials_ = 0;
  std::uint64_t found_ = 0;
  std::uint64_t not_found_ = 0;
  std::uint64_t fail_ = 0;
  std::uint64_t stored_sum_ = 0;
  // Squares of peaks up to ~4e9 edges fit; the mean of squares is what
  // matters, so a long double keeps precision for larger inputs.
  long double stored_sum_sq_ = 0;
  std::uint64_t stored_max_ = 0;
  std::uint64_t stored_max_completed_ = 0;
};

// Seed of trial `index` under `master_seed` (see DeriveSeed).
std::uint64_t TrialSeed(std::uint64_t master_seed, std::uint64_t index);

// Runs `trials` independent detections over fresh two-pass streams of `g`.
// Trial i uses seed TrialSeed(master_seed, i); cfg.seed is ignored. For
// Algorithm::kA a missing m_known is filled from g. Throws InvalidArgs if
// trials < 1, and propagates detector configuration errors.
TrialReport RunTrials(const Graph& g, Algorithm alg, DetectorConfig cfg,
                      std::uint64_t trials, std::uint64_t master_seed,
                      const TrialOptions& options = {});

struct ProportionInterval {
  double lower = 0.0;
  double upper = 1.0;
};

// Wilson score interval for a binomial proportion; z = 1.96 gives 95%.
ProportionInterval WilsonInterval(std::uint64_t successes, std::uint64_t trials,
                                  double z = 1.959963984540054);

// Empirical check of the sparsified triangle count against its exact moments.
struct VarianceCheck {
  SparsificationMoments exact;
  std::uint64_t samples = 0;
  std::uint64_t master_seed = 0;
  double empirical_mean = 0.0;
  double empirical_variance = 0.0;  // unbiased
  // Discrepancies in units of their standard errors. The mean uses the exact
  // sigma; the variance uses the fourth central moment of the samples. A zero
  // standard error yields 0 when the values agree and +-infinity otherwise.
  double z_mean = 0.0;
  double z_variance = 0.0;
};

// Draws `samples` sparsifications (sample i seeded by TrialSeed(master, i)),
// counts triangles in each with the oracle, and compares. Throws
// InvalidProbability and InvalidArgs on bad p or samples < 1.
VarianceCheck VerifyVariance(const Graph& g, double p, std::uint64_t samples,
                             std::uint64_t master_seed, unsigned jobs = 1);

// Checks of the pair-counting bound pi <= 3 t3 h / 2 and the density bounds
// rho <= 3 t3, C(rho, 3) >= t3.
struct AuditRecord {
  GraphStats stats;
  double pair_bound = 0.0;  // 3 t3 h / 2
  bool pair_bound_holds = true;
  bool density_bounds_hold = true;
  bool passed() const { return pair_bound_holds && density_bounds_hold; }
};

AuditRecord AuditGraph(const Graph& g);

}  // namespace tristream
