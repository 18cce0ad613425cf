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

// tristream: command-line front end for the streaming triangle detectors.
//
// Exit codes: 0 on success, 1 when an audit finds a violated bound, 2 on a
// usage or input error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tristream/detectors.hpp"
#include "tristream/edge_stream.hpp"
#include "tristream/errors.hpp"
#include "tristream/generators.hpp"
#include "tristream/graph.hpp"
#include "tristream/harness.hpp"
#include "tristream/oracle.hpp"
#include "tristream/random.hpp"
#include "tristream/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAuditFailure = 1;
constexpr int kExitUsage = 2;

using tristream::Graph;

struct GenOptions {
  std::string kind;
  std::string output;
  std::uint64_t s = 1;
  std::uint64_t pad = 0;
  std::uint64_t T = 1;
  std::uint64_t k = 1;
  std::uint64_t f = 1;
  std::uint64_t ell = 1;
  std::uint64_t n = 1;
  double p = 0.5;
  std::string x;
  std::string y;
  std::optional<std::size_t> random_bits;
  std::size_t ones = 0;
  std::optional<std::uint64_t> seed;
};

struct DetectOptions {
  std::string alg;
  std::optional<std::uint64_t> T;
  std::optional<std::uint64_t> rho;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> shuffle_seed;
  std::uint64_t trials = 1;
  unsigned jobs = 1;
  bool shuffle = false;
  std::string format = "json";
};

struct CommonInput {
  std::string path;
  std::optional<std::size_t> n;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Graph Load(const CommonInput& in) {
  return tristream::ReadEdgeListFile(in.path, in.n);
}

void AddInput(CLI::App* cmd, CommonInput& in) {
  cmd->add_option("edgelist", in.path, "Edge list file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--n", in.n,
                  "Vertex count, when larger than the largest id + 1");
}

tristream::BitVector RandomBits(const GenOptions& o, std::uint64_t stream) {
  return tristream::BitVector::Random(
      *o.random_bits, o.ones, tristream::DeriveSeed(*o.seed, stream));
}

Graph Generate(const GenOptions& o) {
  using namespace tristream;
  const bool random_bits = o.random_bits.has_value();
  if (random_bits && !o.seed) {
    throw UsageError("--random-bits requires --seed");
  }
  if (o.kind == "tower") return GenerateTower(o.s, o.pad);
  if (o.kind == "disjoint") return GenerateDisjointTriangles(o.T);
  if (o.kind == "bipartite") return GenerateDoubleBipartite(o.k);
  if (o.kind == "random") return GenerateRandom(o.n, o.p, *o.seed);
  if (o.kind == "index") {
    if (random_bits == !o.x.empty()) {
      throw UsageError("give exactly one of --x or --random-bits");
    }
    const BitVector x = random_bits ? RandomBits(o, 0) : BitVector::FromString(o.x);
    return GenerateIndexGadget(x, o.f, o.ell, o.T);
  }
  if (o.kind == "disj") {
    if (random_bits) {
      if (!o.x.empty() || !o.y.empty()) {
        throw UsageError("--random-bits replaces --x and --y");
      }
      return GenerateDisjointnessGadget(RandomBits(o, 0), RandomBits(o, 1));
    }
    if (o.x.empty() || o.y.empty()) {
      throw UsageError("disj needs --x and --y, or --random-bits");
    }
    return GenerateDisjointnessGadget(BitVector::FromString(o.x),
                                      BitVector::FromString(o.y));
  }
  throw UsageError("unknown generator " + o.kind);
}

tristream::DetectorConfig MakeConfig(tristream::Algorithm alg,
                                     const DetectOptions& o) {
  tristream::DetectorConfig cfg;
  cfg.seed = o.seed;
  if (alg == tristream::Algorithm::kA2) {
    if (!o.rho) throw UsageError("--alg a2 requires --rho");
    cfg.rho = *o.rho;
  } else {
    if (!o.T) throw UsageError("--alg " + o.alg + " requires --T");
    cfg.T = *o.T;
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-pass streaming triangle detection toolkit"};
  app.require_subcommand(1);

  // gen
  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Write a generated graph");
  gen_cmd->require_subcommand(1);
  auto add_gen = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = gen_cmd->add_subcommand(name, help);
    sub->add_option("-o,--output", gen.output,
                    "Output edge list (stdout when omitted)");
    sub->callback([&gen, name] { gen.kind = name; });
    return sub;
  };
  CLI::App* tower = add_gen("tower", "s triangles on one base edge");
  tower->add_option("--s", gen.s, "Tower height")->required();
  tower->add_option("--pad", gen.pad, "Extra matching edges on fresh vertices");
  add_gen("disjoint", "T vertex-disjoint triangles")
      ->add_option("--T", gen.T, "Triangle count")
      ->required();
  add_gen("bipartite", "Triangle-free double complete bipartite graph")
      ->add_option("--k", gen.k, "Part size")
      ->required();
  CLI::App* index = add_gen("index", "Index-problem gadget");
  index->add_option("--x", gen.x, "Bit string, e.g. 1011");
  index->add_option("--f", gen.f, "Bits per X vertex (|Y|)")->required();
  index->add_option("--ell", gen.ell, "1-based index into x")->required();
  index->add_option("--T", gen.T, "Size of Z")->required();
  CLI::App* disj = add_gen("disj", "Disjointness gadget");
  disj->add_option("--x", gen.x, "Bit string of length n^2");
  disj->add_option("--y", gen.y, "Bit string of length n^2");
  for (CLI::App* sub : {index, disj}) {
    sub->add_option("--random-bits", gen.random_bits,
                    "Length of random bit vectors");
    sub->add_option("--ones", gen.ones, "Ones in each random bit vector");
    sub->add_option("--seed", gen.seed, "Seed for random bit vectors");
  }
  CLI::App* random = add_gen("random", "Seeded random graph");
  random->add_option("--n", gen.n, "Vertex count")->required();
  random->add_option("--p", gen.p, "Edge probability")->required();
  random->add_option("--seed", gen.seed, "Seed")->required();

  // stats
  CommonInput stats_in;
  CLI::App* stats_cmd = app.add_subcommand("stats", "Exact triangle statistics");
  AddInput(stats_cmd, stats_in);

  // detect / bench
  DetectOptions det;
  CommonInput det_in;
  CLI::App* detect_cmd = app.add_subcommand("detect", "Run one detector");
  CLI::App* bench_cmd = app.add_subcommand("bench", "Repeat a detector");
  for (CLI::App* cmd : {detect_cmd, bench_cmd}) {
    cmd->add_option("--alg", det.alg, "a, a-adaptive or a2")
        ->required()
        ->check(CLI::IsMember({"a", "a-adaptive", "a2"}));
    cmd->add_option("--T", det.T, "Triangle threshold (a, a-adaptive)");
    cmd->add_option("--rho", det.rho, "Triangle density (a2)");
    cmd->add_option("--seed", det.seed, "Seed")->required();
    AddInput(cmd, det_in);
  }
  detect_cmd->add_option("--shuffle-seed", det.shuffle_seed,
                         "Shuffle the stream order with this seed");
  bench_cmd->add_option("--trials", det.trials, "Number of trials")->required();
  bench_cmd->add_option("--jobs", det.jobs, "Worker threads");
  bench_cmd->add_flag("--shuffle", det.shuffle,
                      "Shuffle edge order per trial");
  bench_cmd->add_option("--format", det.format, "json, table or csv")
      ->check(CLI::IsMember({"json", "table", "csv"}));

  // variance
  double var_p = 0.0;
  std::uint64_t var_samples = 0;
  std::uint64_t var_seed = 0;
  unsigned var_jobs = 1;
  std::string var_format = "json";
  CommonInput var_in;
  CLI::App* var_cmd =
      app.add_subcommand("variance", "Empirical vs exact sparsification moments");
  var_cmd->add_option("--p", var_p, "Edge retention probability")->required();
  var_cmd->add_option("--samples", var_samples, "Sparsifications")->required();
  var_cmd->add_option("--seed", var_seed, "Seed")->required();
  var_cmd->add_option("--jobs", var_jobs, "Worker threads");
  var_cmd->add_option("--format", var_format, "json, table or csv")
      ->check(CLI::IsMember({"json", "table", "csv"}));
  AddInput(var_cmd, var_in);

  // audit
  CommonInput audit_in;
  CLI::App* audit_cmd =
      app.add_subcommand("audit", "Check triangle pair and density bounds");
  AddInput(audit_cmd, audit_in);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) {
      const Graph g = Generate(gen);
      if (gen.output.empty()) {
        std::cout << tristream::SerializeEdgeList(g);
      } else {
        tristream::WriteEdgeListFile(g, gen.output);
      }
    } else if (stats_cmd->parsed()) {
      std::cout << tristream::StatsJson(tristream::ComputeStats(Load(stats_in)))
                << '\n';
    } else if (detect_cmd->parsed()) {
      const Graph g = Load(det_in);
      const auto alg = tristream::ParseAlgorithm(det.alg);
      tristream::DetectorConfig cfg = MakeConfig(alg, det);
      if (alg == tristream::Algorithm::kA) cfg.m_known = g.num_edges();
      tristream::EdgeStream stream(g, 2, det.shuffle_seed);
      std::cout << tristream::OutcomeJson(tristream::RunDetector(alg, stream, cfg))
                << '\n';
    } else if (bench_cmd->parsed()) {
      const Graph g = Load(det_in);
      const auto alg = tristream::ParseAlgorithm(det.alg);
      const tristream::TrialReport report = tristream::RunTrials(
          g, alg, MakeConfig(alg, det), det.trials, det.seed,
          {.jobs = det.jobs, .shuffle_order = det.shuffle});
      std::cout << tristream::FormatTrialReport(
          report, tristream::ParseReportFormat(det.format));
    } else if (var_cmd->parsed()) {
      const auto check = tristream::VerifyVariance(Load(var_in), var_p,
                                                   var_samples, var_seed, var_jobs);
      std::cout << tristream::FormatVarianceCheck(
          check, tristream::ParseReportFormat(var_format));
    } else if (audit_cmd->parsed()) {
      const auto record = tristream::AuditGraph(Load(audit_in));
      std::cout << tristream::AuditJson(record) << '\n';
      return record.passed() ? kExitOk : kExitAuditFailure;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const tristream::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
