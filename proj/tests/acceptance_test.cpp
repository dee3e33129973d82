// Copyright 2026 The localsym Authors.
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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Run with a criterion number to run only that one.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "localsym/canonical.hpp"
#include "localsym/degree_metrics.hpp"
#include "localsym/edge_list_io.hpp"
#include "localsym/experiments.hpp"
#include "localsym/random_models.hpp"
#include "localsym/symmetry.hpp"
#include "localsym_cli/commands.hpp"
#include "oracles.hpp"

namespace localsym {
namespace {

using namespace ::localsym::testing;

struct Outcome {
  bool pass = false;
  std::string detail;
  // Inconclusive criteria are reported but do not fail the run.
  bool inconclusive = false;
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::string Fmt(double value, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
  return buf;
}

struct CliResult {
  int code;
  std::string out;
};

CliResult Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "localsym");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str()};
}

std::vector<std::size_t> ClassSizes(const std::string& json) {
  std::vector<std::size_t> sizes;
  const auto doc = nlohmann::json::parse(json);
  for (const auto& c : doc["classes"]) sizes.push_back(c.size());
  return sizes;
}

Outcome FixtureExactness() {
  const std::string path = FixturePath("double_star.el").string();
  const Graph g = ReadEdgeListFile(path);
  constexpr Vertex u = 0, v = 1, leaf_u = 2, leaf_v = 10;
  std::vector<std::string> problems;

  const auto local = ClassSizes(Cli({"classes", path, "--k", "1"}).out);
  if (local != std::vector<std::size_t>{15, 1, 1}) problems.push_back("k=1 class sizes");
  const auto global = ClassSizes(Cli({"classes", path, "--global"}).out);
  if (global != std::vector<std::size_t>{8, 7, 1, 1}) problems.push_back("global class sizes");
  if (KLocallySymmetric(g, leaf_u, leaf_v, 1) != Verdict::kSymmetric) {
    problems.push_back("leaves not 1-locally symmetric");
  }
  if (GloballySymmetricPair(g, leaf_u, leaf_v) != Verdict::kAsymmetric) {
    problems.push_back("leaves globally symmetric");
  }
  // Beyond the diameter every ball is the whole graph.
  const std::size_t max_k = Diameter(g) + 1;
  for (std::size_t k = 1; k <= max_k; ++k) {
    if (KLocallySymmetric(g, u, v, k) != Verdict::kAsymmetric) {
      problems.push_back("u,v symmetric at k=" + std::to_string(k));
    }
  }
  if (GloballySymmetricPair(g, u, v) != Verdict::kAsymmetric) problems.push_back("u,v global");

  Outcome o;
  o.pass = problems.empty();
  o.detail = o.pass ? "classes {15,1,1} and {8,7,1,1}; u,v asymmetric for k=1.." +
                          std::to_string(max_k) + " and globally"
                    : "mismatch: " + problems.front();
  return o;
}

Outcome RootedIsomorphismOracle() {
  // Exhaustive part: on every labeled rooted graph with n <= 6, equal codes
  // must coincide with equal minimal root-fixing forms.
  std::size_t exhaustive = 0, mismatches = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    std::map<CanonicalCode, std::vector<bool>> code_to_form;
    std::map<std::vector<bool>, CanonicalCode> form_to_code;
    const std::uint64_t masks = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      const Graph g = GraphFromMask(n, mask);
      for (Vertex root = 0; root < n; ++root) {
        const auto code = ComputeCanonicalCode(RootedGraph(g, root));
        const auto form = BruteForceRootedForm(g, root);
        const auto [it1, fresh1] = code_to_form.emplace(code, form);
        const auto [it2, fresh2] = form_to_code.emplace(form, code);
        if (it1->second != form || it2->second != code) ++mismatches;
        ++exhaustive;
      }
    }
  }

  // Sampled part: 10^5 pairs on up to 7 vertices, a third of them relabeled
  // copies and a third one edge away, so both answers are well represented.
  std::mt19937_64 rng(20240607);
  constexpr std::size_t kPairs = 100000;
  std::size_t isomorphic = 0;
  for (std::size_t i = 0; i < kPairs; ++i) {
    const std::size_t n = 1 + rng() % 7;
    const Graph a = RandomGraph(n, 0.2 + 0.6 * static_cast<double>(rng() % 1000) / 1000.0, rng);
    const Vertex ra = static_cast<Vertex>(rng() % n);
    Graph b;
    Vertex rb;
    switch (i % 3) {
      case 0: {
        const auto perm = RandomPermutation(n, rng);
        b = a.Permuted(perm);
        rb = perm[ra];
        break;
      }
      case 1: {
        auto edges = a.Edges();
        if (n >= 2) {
          Vertex x = static_cast<Vertex>(rng() % n), y = static_cast<Vertex>(rng() % n);
          if (x == y) y = (x + 1) % n;
          const Edge e{std::min(x, y), std::max(x, y)};
          auto it = std::find(edges.begin(), edges.end(), e);
          if (it == edges.end()) {
            edges.push_back(e);
          } else {
            edges.erase(it);
          }
        }
        const auto perm = RandomPermutation(n, rng);
        b = MakeGraph(n, edges).Permuted(perm);
        rb = perm[ra];
        break;
      }
      default: {
        const std::size_t nb = 1 + rng() % 7;
        b = RandomGraph(nb, 0.5, rng);
        rb = static_cast<Vertex>(rng() % nb);
      }
    }
    const bool truth = BruteForceRootedIsomorphic(a, ra, b, rb);
    const bool by_code =
        ComputeCanonicalCode(RootedGraph(a, ra)) == ComputeCanonicalCode(RootedGraph(b, rb));
    isomorphic += truth ? 1 : 0;
    if (truth != by_code) ++mismatches;
  }

  Outcome o;
  o.pass = mismatches == 0;
  o.detail = std::to_string(exhaustive) + " rooted graphs n<=6 exhaustively, " +
             std::to_string(kPairs) + " sampled pairs n<=7 (" + std::to_string(isomorphic) +
             " isomorphic); mismatches " + std::to_string(mismatches);
  return o;
}

Outcome MismatchOracle() {
  std::vector<Graph> small;
  for (std::size_t n = 0; n <= 4; ++n) {
    const std::uint64_t masks = std::uint64_t{1} << (n < 2 ? 0 : n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < masks; ++mask) small.push_back(GraphFromMask(n, mask));
  }
  std::size_t pairs = 0, mismatches = 0;
  auto check = [&](const Graph& a, const Graph& b) {
    const std::size_t dsed = Dsed(a, b);
    if (dsed != MinMismatchOracle(a, b) || dsed != MinMismatchBruteForce(a, b)) ++mismatches;
    ++pairs;
  };
  for (const Graph& a : small) {
    for (const Graph& b : small) check(a, b);
  }
  const std::size_t exhaustive = pairs;
  std::mt19937_64 rng(314159);
  for (int i = 0; i < 10000; ++i) {
    const Graph a = RandomGraph(rng() % 7, 0.5, rng);
    const Graph b = RandomGraph(rng() % 7, 0.5, rng);
    check(a, b);
  }
  Outcome o;
  o.pass = mismatches == 0;
  o.detail = std::to_string(exhaustive) + " exhaustive pairs (<=4+4), " +
             std::to_string(pairs - exhaustive) + " random pairs (<=6+6); mismatches " +
             std::to_string(mismatches);
  return o;
}

Outcome SubgraphBoundTrials() {
  std::mt19937_64 rng(271828);
  std::size_t violations = 0, two_sided_violations = 0;
  std::string example;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng() % 40;
    const double p = static_cast<double>(rng() % 1000) / 1000.0;
    const Graph g = RandomGraph(n, p, rng);
    std::vector<Vertex> members;
    for (Vertex v = 0; v < n; ++v) {
      if (rng() % 2) members.push_back(v);
    }
    const auto check = SubgraphBoundCheck(g, VertexSet::Of(members, n));
    if (check.dsed > check.bound) {
      if (violations++ == 0) {
        example = "n=" + std::to_string(n) + " |S|=" + std::to_string(members.size()) +
                  " dsed=" + std::to_string(check.dsed) + " > " + std::to_string(check.bound);
      }
    }
    if (check.dsed > check.two_sided_bound) ++two_sided_violations;
  }
  Outcome o;
  o.pass = violations == 0;
  o.detail = "1000 trials; |V\\S|+|C(S)| violated " + std::to_string(violations) + " times" +
             (example.empty() ? "" : " (first: " + example + ")") + "; |V\\S|+2|C(S)| violated " +
             std::to_string(two_sided_violations) + " times";
  if (!o.pass) o.detail += "; the single-sided bound is false, e.g. K3 with |S|=2 gives 5 > 3";
  return o;
}

bool Refines(const SymmetryClassPartition& fine, const SymmetryClassPartition& coarse) {
  const auto coarse_of = coarse.ClassOf();
  for (const auto& cls : fine.classes) {
    for (Vertex v : cls) {
      if (coarse_of[v] != coarse_of[cls.front()]) return false;
    }
  }
  return true;
}

Outcome Hierarchy() {
  std::mt19937_64 rng(1618);
  std::size_t violations = 0, connected = 0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng() % 25;
    const double p = 0.05 + 0.45 * static_cast<double>(rng() % 1000) / 1000.0;
    const Graph g = RandomGraph(n, p, rng);
    std::vector<SymmetryClassPartition> parts;
    for (std::size_t k = 0; k <= 4; ++k) parts.push_back(SymmetryPartition(g, Locality::Order(k)));
    for (std::size_t k = 0; k < 4; ++k) violations += Refines(parts[k + 1], parts[k]) ? 0 : 1;
    if (IsConnected(g)) {
      ++connected;
      const auto at_diameter = SymmetryPartition(g, Locality::Order(Diameter(g)));
      const auto global = SymmetryPartition(g, Locality::Global());
      if (at_diameter.classes != global.classes) ++violations;
    }
  }
  Outcome o;
  o.pass = violations == 0;
  o.detail = "500 graphs (" + std::to_string(connected) + " connected); violations " +
             std::to_string(violations);
  return o;
}

CellParams Cell(std::size_t n, double p, std::size_t samples, std::uint64_t seed) {
  CellParams cell;
  cell.n = n;
  cell.p = p;
  cell.samples = samples;
  cell.seed = seed;
  cell.threads = 0;
  return cell;
}

Outcome TriangleMean() {
  const auto row = RunTriangleCell(Cell(50, 0.2, 1000, 6), 0.5);
  const double mean = row.statistics->empirical_mean;
  const double rel = std::abs(mean - 156.8) / 156.8;
  Outcome o;
  o.pass = rel < 0.05;
  o.detail = "empirical mean " + Fmt(mean, 6) + " vs 156.8 (relative error " + Fmt(rel, 3) + ")";
  return o;
}

Outcome DegreeConcentration() {
  const auto row = RunConcentrationCell(Cell(5000, 0.017, 100, 7), 0.5);
  Outcome o;
  o.pass = row.successes >= 99;
  o.detail = std::to_string(row.successes) + "/100 samples within (n-1)p(1 +- 0.5)";
  return o;
}

Outcome SparseRegime() {
  Outcome o;
  o.pass = true;
  std::ostringstream detail;
  std::uint64_t seed = 8;
  for (std::size_t n : {500, 1000, 2000}) {
    const double p = std::pow(static_cast<double>(n), -0.8);
    const auto row = RunLocalSymmetryCell(Cell(n, p, 200, seed++), 1);
    const bool ok = row.estimate >= 0.95 && row.wilson_low > 0.5;
    o.pass = o.pass && ok;
    detail << "n=" << n << ": " << Fmt(row.estimate) << " [" << Fmt(row.wilson_low) << ", "
           << Fmt(row.wilson_high) << "]" << (row.undecided ? " undecided " + std::to_string(row.undecided) : "")
           << "; ";
  }
  o.detail = detail.str();
  return o;
}

Outcome RegimeTrend() {
  const std::vector<double> alphas = {0.8, 0.7, 0.6, 0.5, 0.45};
  std::vector<ExperimentRow> rows;
  std::ostringstream detail;
  bool inconclusive = false;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const std::size_t n = 2000;
    auto cell = Cell(n, std::pow(static_cast<double>(n), -alphas[i]), 100, 900 + i);
    cell.alpha = alphas[i];
    rows.push_back(RunLocalSymmetryCell(cell, 1));
    const auto& row = rows.back();
    const double undecided = static_cast<double>(row.undecided) / row.samples;
    if (undecided > 0.2) inconclusive = true;
    detail << "a=" << alphas[i] << ": " << Fmt(row.estimate) << " [" << Fmt(row.wilson_low) << ", "
           << Fmt(row.wilson_high) << "] undecided " << Fmt(100 * undecided, 3) << "%; ";
  }
  // An increase only counts when the intervals separate.
  bool monotone = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (rows[j].wilson_low > rows[i].wilson_high) monotone = false;
    }
  }
  const bool separated = rows.back().wilson_high < rows.front().wilson_low;
  Outcome o;
  o.pass = monotone && separated;
  o.inconclusive = inconclusive;
  o.detail = detail.str() + (monotone ? "non-increasing" : "increase detected") +
             (separated ? ", end intervals disjoint" : ", end intervals overlap");
  return o;
}

Outcome LargeDsed() {
  const std::size_t n = 4096;
  const auto row = RunDsedPairCell(Cell(n, std::pow(4096.0, -0.6), 100, 10), 0.1);
  const double fraction = static_cast<double>(row.successes) / row.samples;
  Outcome o;
  o.pass = fraction >= 0.95;
  o.detail = std::to_string(row.successes) + "/100 pairs with dsed >= " +
             Fmt(std::pow(4096.0, 0.4), 4);
  return o;
}

Outcome Determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "localsym_acceptance";
  std::filesystem::create_directories(dir);
  const std::filesystem::path root = LOCALSYM_SOURCE_DIR;
  std::vector<std::string> configs = {(root / "configs" / "sparse_regime.cfg").string()};
  const char* extra[] = {
      "mode = dsed-pairs\nsamples = 10\nseed = 3\nn = 300, 600\nalpha = 0.6\n",
      "mode = triangle-stats\nsamples = 30\nseed = 4\nn = 60\np = 0.1, 0.2\n",
      "mode = degree-concentration\nsamples = 10\nseed = 5\nn = 500\nalpha = 0.3\n",
      "mode = global-symmetry\nsamples = 20\nseed = 6\nn = 40\nalpha = 0.5, 1.2\n",
  };
  for (std::size_t i = 0; i < std::size(extra); ++i) {
    const auto path = dir / ("extra" + std::to_string(i) + ".cfg");
    std::ofstream(path) << extra[i];
    configs.push_back(path.string());
  }
  auto read = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  };
  std::size_t identical = 0;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const auto a = dir / ("a" + std::to_string(i) + ".csv");
    const auto b = dir / ("b" + std::to_string(i) + ".csv");
    const int ca = Cli({"experiment", configs[i], "--out", a.string()}).code;
    const int cb = Cli({"--threads", "2", "experiment", configs[i], "--out", b.string()}).code;
    if (ca == 0 && cb == 0 && read(a) == read(b) && !read(a).empty()) ++identical;
  }
  std::filesystem::remove_all(dir);
  Outcome o;
  o.pass = identical == configs.size();
  o.detail = std::to_string(identical) + "/" + std::to_string(configs.size()) +
             " configs byte-identical across two runs (1 and 2 threads)";
  return o;
}

}  // namespace
}  // namespace localsym

int main(int argc, char** argv) {
  using localsym::Criterion;
  const std::vector<Criterion> criteria = {
      {1, "fixture exactness", 1, localsym::FixtureExactness},
      {2, "rooted isomorphism vs brute force", 300, localsym::RootedIsomorphismOracle},
      {3, "dsed equals minimum mismatch count", 0, localsym::MismatchOracle},
      {4, "induced subgraph dsed bound", 0, localsym::SubgraphBoundTrials},
      {5, "locality hierarchy", 0, localsym::Hierarchy},
      {6, "triangle mean", 30, localsym::TriangleMean},
      {7, "degree concentration", 60, localsym::DegreeConcentration},
      {8, "sparse regime local symmetry", 600, localsym::SparseRegime},
      {9, "regime trend at n=2000", 0, localsym::RegimeTrend},
      {10, "large dsed between independent samples", 120, localsym::LargeDsed},
      {11, "experiment determinism", 0, localsym::Determinism},
  };
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  int failures = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    localsym::Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds <= 0 || seconds < c.limit_seconds;
    const char* status = outcome.inconclusive ? "INCONCLUSIVE"
                         : outcome.pass && in_time ? "PASS"
                                                   : "FAIL";
    std::string timing = localsym::Fmt(seconds, 3) + "s";
    if (c.limit_seconds > 0) timing += " (limit " + localsym::Fmt(c.limit_seconds, 3) + "s)";
    std::printf("%s %d %s: %s [%s]\n", status, c.id, c.name, outcome.detail.c_str(),
                timing.c_str());
    std::fflush(stdout);
    if (std::string(status) == "FAIL") ++failures;
  }
  return failures == 0 ? 0 : 1;
}
