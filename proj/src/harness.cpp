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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include "tristream/edge_stream.hpp"
#include "tristream/errors.hpp"
#include "tristream/random.hpp"

namespace tristream {

namespace {

// Calls body(i) for i in [0, count), splitting the range into contiguous
// blocks over `jobs` threads. Blocks write disjoint state, so results are
// the same for any job count.
template <typename Body>
void ParallelFor(std::uint64_t count, unsigned jobs, Body body) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i) body(i, 0u);
    return;
  }
  jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, count));
  std::vector<std::jthread> workers;
  std::vector<std::exception_ptr> errors(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    const std::uint64_t lo = count * w / jobs;
    const std::uint64_t hi = count * (w + 1) / jobs;
    workers.emplace_back([&, lo, hi, w] {
      try {
        for (std::uint64_t i = lo; i < hi; ++i) body(i, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  workers.clear();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

double ZScore(double diff, double standard_error) {
  if (standard_error > 0.0) return diff / standard_error;
  if (diff == 0.0) return 0.0;
  return std::copysign(std::numeric_limits<double>::infinity(), diff);
}

}  // namespace

void TrialAccumulator::Add(const DetectionOutcome& outcome) {
  ++trials_;
  switch (outcome.verdict) {
    case Verdict::kTriangleFound: ++found_; break;
    case Verdict::kNoTriangle: ++not_found_; break;
    case Verdict::kFail: ++fail_; break;
  }
  const std::uint64_t peak = outcome.stored_edges_peak;
  stored_sum_ += peak;
  stored_sum_sq_ += static_cast<long double>(peak) * peak;
  stored_max_ = std::max(stored_max_, peak);
  if (outcome.verdict != Verdict::kFail) {
    stored_max_completed_ = std::max(stored_max_completed_, peak);
  }
}

void TrialAccumulator::Merge(const TrialAccumulator& other) {
  trials_ += other.trials_;
  found_ += other.found_;
  not_found_ += other.not_found_;
  fail_ += other.fail_;
  stored_sum_ += other.stored_sum_;
  stored_sum_sq_ += other.stored_sum_sq_;
  stored_max_ = std::max(stored_max_, other.stored_max_);
  stored_max_completed_ =
      std::max(stored_max_completed_, other.stored_max_completed_);
}

void TrialAccumulator::FillReport(TrialReport& report) const {
  report.trials = trials_;
  report.found = found_;
  report.not_found = not_found_;
  report.fail = fail_;
  report.stored_edges_max = stored_max_;
  report.stored_edges_max_completed = stored_max_completed_;
  if (trials_ == 0) return;
  const long double n = trials_;
  const long double mean = static_cast<long double>(stored_sum_) / n;
  report.stored_edges_mean = static_cast<double>(mean);
  if (trials_ > 1) {
    const long double ss = stored_sum_sq_ - n * mean * mean;
    report.stored_edges_sd =
        static_cast<double>(std::sqrt(std::max<long double>(0, ss / (n - 1))));
  }
}

std::uint64_t TrialSeed(std::uint64_t master_seed, std::uint64_t index) {
  return DeriveSeed(master_seed, index);
}

TrialReport RunTrials(const Graph& g, Algorithm alg, DetectorConfig cfg,
                      std::uint64_t trials, std::uint64_t master_seed,
                      const TrialOptions& options) {
  if (trials < 1) throw InvalidArgs("need at least one trial");
  if (alg == Algorithm::kA && !cfg.m_known) cfg.m_known = g.num_edges();

  const auto start = std::chrono::steady_clock::now();
  std::vector<DetectionOutcome> outcomes(trials);
  ParallelFor(trials, options.jobs, [&](std::uint64_t i, unsigned) {
    DetectorConfig trial_cfg = cfg;
    trial_cfg.seed = TrialSeed(master_seed, i);
    std::optional<std::uint64_t> order_seed;
    if (options.shuffle_order) order_seed = Mix64(trial_cfg.seed);
    EdgeStream stream(g, 2, order_seed);
    DetectionOutcome outcome = RunDetector(alg, stream, trial_cfg);
    outcome.stored_edges.clear();
    outcome.stored_edges.shrink_to_fit();
    outcomes[i] = std::move(outcome);
  });

  TrialAccumulator acc;
  for (const DetectionOutcome& o : outcomes) acc.Add(o);

  TrialReport report;
  report.algorithm = alg;
  report.config = cfg;
  report.config.seed = 0;
  report.num_vertices = g.num_vertices();
  report.num_edges = g.num_edges();
  report.master_seed = master_seed;
  report.shuffle_order = options.shuffle_order;
  acc.FillReport(report);
  report.wall_time_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return report;
}

ProportionInterval WilsonInterval(std::uint64_t successes, std::uint64_t trials,
                                  double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
  ProportionInterval interval{std::max(0.0, center - half),
                              std::min(1.0, center + half)};
  // The closed forms are exact at the boundaries; avoid rounding residue.
  if (successes == 0) interval.lower = 0.0;
  if (successes == trials) interval.upper = 1.0;
  return interval;
}

VarianceCheck VerifyVariance(const Graph& g, double p, std::uint64_t samples,
                             std::uint64_t master_seed, unsigned jobs) {
  VarianceCheck check;
  check.exact = ComputeSparsificationMoments(g, p);
  if (samples < 1) throw InvalidArgs("need at least one sample");
  check.samples = samples;
  check.master_seed = master_seed;

  std::vector<std::uint64_t> counts(samples);
  ParallelFor(samples, jobs, [&](std::uint64_t i, unsigned) {
    Rng rng(TrialSeed(master_seed, i));
    std::vector<Edge> kept;
    for (const Edge& e : g.edges()) {
      if (UniformUnit(rng) < p) kept.push_back(e);
    }
    counts[i] = CountTriangles(Graph(g.num_vertices(), std::move(kept)));
  });

  const long double n = samples;
  long double sum = 0;
  for (std::uint64_t c : counts) sum += c;
  const long double mean = sum / n;
  long double m2 = 0;
  long double m4 = 0;
  for (std::uint64_t c : counts) {
    const long double d = c - mean;
    m2 += d * d;
    m4 += d * d * d * d;
  }
  m2 /= n;
  m4 /= n;
  check.empirical_mean = static_cast<double>(mean);
  check.empirical_variance =
      samples > 1 ? static_cast<double>(m2 * n / (n - 1)) : 0.0;

  check.z_mean = ZScore(check.empirical_mean - check.exact.mu,
                        std::sqrt(check.exact.sigma_sq / static_cast<double>(n)));
  // Var(s^2) ~ (m4 - (n-3)/(n-1) m2^2) / n.
  double var_se = 0.0;
  if (samples > 1) {
    const long double v = (m4 - (n - 3) / (n - 1) * m2 * m2) / n;
    var_se = static_cast<double>(std::sqrt(std::max<long double>(0, v)));
  }
  check.z_variance =
      ZScore(check.empirical_variance - check.exact.sigma_sq, var_se);
  return check;
}

AuditRecord AuditGraph(const Graph& g) {
  AuditRecord record;
  record.stats = ComputeStats(g);
  record.pair_bound = 1.5 * static_cast<double>(record.stats.t3) *
                      static_cast<double>(record.stats.max_tower);
  record.pair_bound_holds = SatisfiesPairBound(record.stats);
  record.density_bounds_hold = SatisfiesDensityBounds(record.stats);
  return record;
}

}  // namespace tristream
