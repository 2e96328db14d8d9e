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


// End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails unexpectedly.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "absl/strings/str_format.h"
#include "cli.h"
#include "edgeldp/cycle_estimator.h"
#include "edgeldp/exact_counts.h"
#include "edgeldp/experiments.h"
#include "edgeldp/generators.h"
#include "edgeldp/mechanisms.h"
#include "edgeldp/ordering.h"
#include "edgeldp/triangle_estimator.h"
#include "oracles.h"

namespace edgeldp {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;
  std::function<Outcome()> run;
  // Non-empty when the criterion is known to be unattainable as stated; the
  // line still reads FAIL but does not fail the run.
  std::string known_failure;
};

std::filesystem::path ScratchDir() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() / "edgeldp_acceptance";
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

// All graphs generated by the suite, for the deterministic-bound criterion.
std::vector<std::pair<std::string, Graph>>& GeneratedGraphs() {
  static std::vector<std::pair<std::string, Graph>> graphs;
  return graphs;
}

Graph Keep(std::string name, Graph g) {
  GeneratedGraphs().emplace_back(std::move(name), g);
  return g;
}

struct CliRun {
  int code;
  std::string out;
};

CliRun RunCli(std::vector<std::string> args) {
  args.insert(args.begin(), "edgeldp");
  std::ostringstream out, err;
  int code = cli::CliMain(args, out, err);
  return {code, out.str()};
}

std::string WriteGraph(const Graph& g, const std::string& name) {
  auto path = (ScratchDir() / name).string();
  std::ofstream(path) << SerializeEdgeList(g);
  return path;
}

EstimatorOptions NoNoise() {
  EstimatorOptions options;
  options.mode = NoiseMode::kNoNoise;
  return options;
}

double LaplaceCdf(double x, double b) {
  return x < 0 ? 0.5 * std::exp(x / b) : 1.0 - 0.5 * std::exp(-x / b);
}

Outcome MechanismDistributions() {
  const double eps = std::log(3.0);
  const int n = 100000;
  Rng rng(1);
  bool ok = true;
  std::string detail;
  for (std::uint8_t truth : {1, 0}) {
    std::vector<std::uint8_t> bits(n, truth);
    auto noisy = RandomizeResponseRow(bits, eps, rng);
    double kept = 0.0, sum = 0.0, sum_sq = 0.0;
    for (auto bit : noisy) {
      kept += bit == truth;
      const double a = Unbias(bit, eps);
      sum += a;
      sum_sq += a * a;
    }
    const double keep = kept / n, mean = sum / n;
    const double var = sum_sq / n - mean * mean;
    const double target_var = std::exp(eps) / std::pow(std::expm1(eps), 2);
    ok &= std::abs(keep - 0.75) <= 0.01 && std::abs(mean - truth) <= 0.02 &&
          std::abs(var / target_var - 1.0) <= 0.05;
    detail += absl::StrFormat("a=%d keep=%.4f mean=%.4f var/target=%.4f; ", truth, keep, mean,
                              var / target_var);
  }
  const double b = 2.0;
  std::vector<double> samples(n);
  for (double& x : samples) x = *SampleLaplace(b, rng);
  std::sort(samples.begin(), samples.end());
  double d = 0.0;
  for (int i = 0; i < n; ++i) {
    const double f = LaplaceCdf(samples[i], b);
    d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
  }
  const double critical = 1.628 / std::sqrt(static_cast<double>(n));
  ok &= d < critical;
  detail += absl::StrFormat("Laplace KS D=%.5f (critical %.5f)", d, critical);
  return {ok, detail};
}

Outcome TriangleExactness() {
  std::vector<std::pair<std::string, Graph>> graphs{
      {"K4", CompleteGraph(4)}, {"C5", CycleGraph(5)}, {"Petersen", PetersenGraph()}};
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 5 + i % 26;
    graphs.emplace_back(absl::StrFormat("er:%d:0.2#%d", n, i),
                        Keep("er", *GenerateErdosRenyi(n, 0.2, 1000 + i)));
  }
  int mismatches = 0;
  for (const auto& [name, g] : graphs) {
    const double exact = static_cast<double>(CountTriangles(g));
    const double naive = static_cast<double>(testing::NaiveTriangles(testing::ToDense(g)));
    const std::string path = WriteGraph(g, "tri.el");
    CliRun run = RunCli({"estimate-triangles", "--graph", path, "--mode", "no-noise"});
    double cli_estimate = std::nan("");
    if (run.code == 0) cli_estimate = nlohmann::json::parse(run.out)["estimate"].get<double>();
    const double lib_estimate = EstimateTriangles(g, NoNoise())->estimate;
    if (cli_estimate != exact || lib_estimate != exact || naive != exact) ++mismatches;
  }
  return {mismatches == 0, absl::StrFormat("%d graphs, %d mismatches", graphs.size(), mismatches)};
}

Outcome CycleExactness() {
  struct Case {
    std::string name;
    Graph graph;
    int k;
  };
  std::vector<Case> cases{{"C5", CycleGraph(5), 5}, {"Petersen", PetersenGraph(), 5}};
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = 6 + i % 9;
    cases.push_back({"er", Keep("er", *GenerateErdosRenyi(n, 0.3, 2000 + i)), 5});
  }
  for (int i = 0; i < 10; ++i) {
    const std::size_t n = 7 + i % 4;
    cases.push_back({"er", Keep("er", *GenerateErdosRenyi(n, 0.35, 3000 + i)), 7});
  }
  int mismatches = 0, bad_multiplicity = 0;
  std::size_t cycles_checked = 0;
  for (const auto& c : cases) {
    std::map<std::vector<NodeId>, double> multiplicity;
    auto report = EstimateOddCycles(c.graph, c.k, NoNoise(),
                                    [&](NodeId center, std::span<const NodeId> path, double w) {
                                      std::vector<NodeId> cycle{center};
                                      cycle.insert(cycle.end(), path.begin(), path.end());
                                      multiplicity[CanonicalCycle(cycle)] += w;
                                    });
    const double exact = static_cast<double>(*CountCycles(c.graph, c.k));
    const double naive = static_cast<double>(testing::NaiveCycles(testing::ToDense(c.graph), c.k));
    if (!report.ok() || report->estimate != exact || naive != exact) ++mismatches;
    if (multiplicity.size() != static_cast<std::size_t>(exact)) ++bad_multiplicity;
    for (const auto& [cycle, count] : multiplicity) {
      bad_multiplicity += count != 1.0;
      ++cycles_checked;
    }
  }
  // The command-line path on the named graphs.
  for (const auto& [g, expected] : {std::pair{CycleGraph(5), 1.0}, {PetersenGraph(), 12.0}}) {
    CliRun run = RunCli({"estimate-cycles", "--graph", WriteGraph(g, "cyc.el"), "--k", "5",
                         "--mode", "no-noise"});
    if (run.code != 0 || nlohmann::json::parse(run.out)["estimate"].get<double>() != expected) {
      ++mismatches;
    }
  }
  return {mismatches == 0 && bad_multiplicity == 0,
          absl::StrFormat("%d graphs, %d mismatches, %d cycles instrumented, %d with "
                          "multiplicity != 1",
                          cases.size() + 2, mismatches, cycles_checked, bad_multiplicity)};
}

Outcome Unbiased(Task task, std::size_t n, double p, std::size_t trials) {
  Graph g = Keep("er", *GenerateErdosRenyi(n, p, 4));
  TrialConfig config;
  config.task = task;
  config.k = task == Task::kTriangles ? 3 : 5;
  config.trials = trials;
  config.seed = 5;
  auto s = RunTrials(g, config);
  if (!s.ok()) return {false, std::string(s.status().message())};
  return {std::abs(s->mean - s->exact) <= 3 * s->std_error,
          absl::StrFormat("exact=%g mean=%.3f |bias|=%.3f stderr=%.3f (%.2f sigma)", s->exact,
                          s->mean, std::abs(s->bias), s->std_error,
                          std::abs(s->bias) / s->std_error)};
}

Outcome DegreeClipping() {
  Graph g = Keep("ba", *GenerateBarabasiAlbert(100, 3, 6));
  const double eps0 = 1.0, zeta = 0.1;
  const double threshold = std::log(100 / zeta) / eps0;
  const int runs = 10000;
  int violated = 0;
  for (int t = 0; t < runs; ++t) {
    auto ordering = GetOrdering(g, eps0, TrialStreams(6, t));
    for (NodeId v = 0; v < 100; ++v) {
      if (std::abs(ordering->noisy_degrees[v] - static_cast<double>(g.degree(v))) >= threshold) {
        ++violated;
        break;
      }
    }
  }
  const double fraction = static_cast<double>(violated) / runs;
  const double limit = zeta + 3 * std::sqrt(zeta * (1 - zeta) / runs);
  return {fraction <= limit, absl::StrFormat("fraction=%.4f limit=%.4f", fraction, limit)};
}

Outcome DeterministicBounds() {
  // Named and generated families on top of every graph the suite has built.
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    for (std::size_t m0 : {1, 2, 3, 5}) Keep("ba", *GenerateBarabasiAlbert(400, m0, seed));
    for (std::size_t k : {1, 2, 3}) Keep("ktree", *GenerateKTree(200, k, seed));
    Keep("er", *GenerateErdosRenyi(300, 0.03, seed));
  }
  std::size_t chiba_violations = 0, twice_violations = 0, edge_violations = 0;
  std::map<std::string, std::size_t> chiba_by_family;
  double worst = 0.0;
  for (const auto& [family, g] : GeneratedGraphs()) {
    GraphStats s = ComputeGraphStats(g);
    const double m_delta = static_cast<double>(s.m * s.degeneracy);
    if (s.chiba_sum > s.m * s.degeneracy) {
      ++chiba_violations;
      ++chiba_by_family[family];
      worst = std::max(worst, static_cast<double>(s.chiba_sum) / m_delta);
    }
    twice_violations += s.chiba_sum > 2 * s.m * s.degeneracy;
    edge_violations += s.m > s.degeneracy * s.n;
  }
  const bool oracle = Degeneracy(*GenerateBarabasiAlbert(50, 1, 0)).degeneracy == 1 &&
                      Degeneracy(CycleGraph(6)).degeneracy == 2 &&
                      Degeneracy(CompleteGraph(5)).degeneracy == 4 &&
                      Degeneracy(PetersenGraph()).degeneracy == 3;
  std::string families;
  for (const auto& [f, c] : chiba_by_family) families += absl::StrFormat(" %s:%d", f, c);
  return {chiba_violations == 0 && edge_violations == 0 && oracle,
          absl::StrFormat("%d graphs; chiba_sum<=m*delta violated on %d (worst ratio %.3f;%s); "
                          "chiba_sum<=2*m*delta violated on %d; m<=delta*n violated on %d; "
                          "degeneracy oracle tree/C6/K5/Petersen=1/2/4/3 %s",
                          GeneratedGraphs().size(), chiba_violations, worst, families,
                          twice_violations, edge_violations, oracle ? "ok" : "WRONG")};
}

Outcome OrderedStructureBounds() {
  Graph g = Keep("ba", *GenerateBarabasiAlbert(1000, 3, 8));
  auto r = VerifyBounds(g, 100, 1.0, 8);
  if (!r.ok()) return {false, std::string(r.status().message())};
  const double limit = r->low2stars_limit + 3 * r->stderr_low2stars;
  const bool finite = std::isfinite(r->low2stars_ratio) && std::isfinite(r->monotone_c4_ratio);
  return {finite && r->mean_low2stars <= limit,
          absl::StrFormat("mean S2*=%.1f <= %.1f (chiba+m/eps0+3se); S2*/(d^2 n)=%.4f "
                          "C4*/(d^3 n)=%.5f; random-order S2*=%.1f",
                          r->mean_low2stars, limit, r->low2stars_ratio, r->monotone_c4_ratio,
                          r->baseline_mean_low2stars)};
}

Outcome ErrorScalingSlopes() {
  TrialConfig tri;
  tri.task = Task::kTriangles;
  tri.trials = 200;
  tri.seed = 9;
  std::vector<std::size_t> tri_sizes{200, 400, 800, 1600};
  auto a = ErrorScaling(*ParseGeneratorSpec("ba:200:3"), tri_sizes, tri);
  TrialConfig cyc;
  cyc.task = Task::kCycles;
  cyc.k = 5;
  cyc.trials = 50;
  cyc.seed = 9;
  std::vector<std::size_t> cyc_sizes{40, 80, 160};
  auto b = ErrorScaling(*ParseGeneratorSpec("ba:40:2"), cyc_sizes, cyc);
  if (!a.ok() || !b.ok() || !a->slope || !b->slope) return {false, "scaling run failed"};
  return {*a->slope < 1.25 && *b->slope < 2.5,
          absl::StrFormat("triangle slope=%.3f (<1.25), 5-cycle slope=%.3f (<2.5)", *a->slope,
                          *b->slope)};
}

Outcome AccountingAndDeterminism() {
  bool ok = true;
  std::string detail;
  struct BudgetCase {
    std::string eps0, eps1, eps2, total;
    int expected_code;
  };
  for (const auto& c : {BudgetCase{"1", "1", "1", "2", 1}, BudgetCase{"0.5", "1", "1", "2.4", 1},
                        BudgetCase{"0.5", "1", "0.5", "2", 0}}) {
    const std::vector<std::string> budget{"--gen", "er:30:0.2", "--eps0", c.eps0, "--eps1",
                                          c.eps1, "--eps2", c.eps2, "--eps", c.total};
    auto estimate = budget;
    estimate.insert(estimate.begin(), "estimate-triangles");
    auto experiment = budget;
    experiment.insert(experiment.begin(), "experiment");
    experiment.insert(experiment.end(), {"--trials", "3"});
    ok &= RunCli(estimate).code == c.expected_code;
    ok &= RunCli(experiment).code == c.expected_code;
  }
  detail += ok ? "over-budget runs exit 1; " : "budget exit codes WRONG; ";
  const std::string g = WriteGraph(*GenerateBarabasiAlbert(150, 3, 10), "det.el");
  int identical = 0, total_runs = 0;
  for (std::vector<std::string> args :
       {std::vector<std::string>{"estimate-triangles", "--graph", g, "--seed", "42"},
        {"estimate-cycles", "--graph", g, "--k", "5", "--seed", "42", "--format", "csv"},
        {"experiment", "--graph", g, "--trials", "20", "--seed", "42"},
        {"experiment", "--graph", g, "--trials", "20", "--seed", "42", "--format", "json"},
        {"experiment", "--graph", g, "--task", "cycles", "--trials", "3", "--seed", "42"}}) {
    CliRun first = RunCli(args);
    for (const char* threads : {"1", "2", "4"}) {
      auto threaded = args;
      threaded.insert(threaded.end(), {"--threads", threads});
      CliRun again = RunCli(threaded);
      ++total_runs;
      identical += first.code == 0 && again.out == first.out;
    }
  }
  ok &= identical == total_runs;
  detail += absl::StrFormat("%d/%d reruns byte-identical across 1/2/4 threads", identical,
                            total_runs);
  return {ok, detail};
}

}  // namespace
}  // namespace edgeldp

int main() {
  using namespace edgeldp;
  const std::vector<Criterion> criteria{
      {1, "mechanism distributions", 10, MechanismDistributions, ""},
      {2, "no-noise triangle exactness", 30, TriangleExactness, ""},
      {3, "no-noise cycle exactness", 300, CycleExactness, ""},
      {4, "triangle unbiasedness ER(50,0.1) T=2000", 120,
       [] { return Unbiased(Task::kTriangles, 50, 0.1, 2000); }, ""},
      {5, "5-cycle unbiasedness ER(30,0.2) T=1000", 600,
       [] { return Unbiased(Task::kCycles, 30, 0.2, 1000); }, ""},
      {6, "degree-clipping guarantee", 30, DegreeClipping, ""},
      {7, "deterministic bounds", 600, DeterministicBounds,
       "sum of min degrees exceeds m*degeneracy on ordinary graphs; the "
       "Chiba-Nishizeki lemma gives 2*arboricity*m"},
      {8, "ordered-structure bounds BA(1000,3)", 120, OrderedStructureBounds, ""},
      {9, "error scaling slopes", 1800, ErrorScalingSlopes, ""},
      {10, "privacy accounting and determinism", 600, AccountingAndDeterminism, ""},
  };
  int unexpected = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = c.run();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.time_limit_s;
    const bool pass = outcome.pass && in_time;
    std::cout << absl::StrFormat("[%s] criterion %d [PRIMARY] %s: %s; %.1fs (limit %.0fs)",
                                 pass ? "PASS" : "FAIL", c.id, c.title, outcome.detail, seconds,
                                 c.time_limit_s);
    if (!pass && !c.known_failure.empty()) std::cout << " -- known: " << c.known_failure;
    std::cout << std::endl;
    if (!pass && c.known_failure.empty()) ++unexpected;
  }
  std::filesystem::remove_all(ScratchDir());
  return unexpected == 0 ? 0 : 1;
}
