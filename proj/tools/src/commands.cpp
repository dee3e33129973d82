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

#include "localsym_cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "localsym/degree_metrics.hpp"
#include "localsym/edge_list_io.hpp"
#include "localsym/errors.hpp"
#include "localsym/experiments.hpp"
#include "localsym/random_models.hpp"
#include "localsym/symmetry.hpp"
#include "localsym_cli/config.hpp"

namespace localsym::cli {
namespace {

struct Common {
  unsigned threads = 0;
  std::uint64_t budget = CanonicalOptions{}.node_budget;
  bool strict = false;
};

Graph LoadGraph(const std::string& path, const Common& common, std::ostream& err) {
  const EdgePolicy policy = common.strict ? EdgePolicy::kStrict : EdgePolicy::kLenient;
  BuildStats stats;
  Graph g;
  try {
    if (path == "-") {
      g = ReadEdgeList(std::cin, policy, &stats);
    } else {
      g = ReadEdgeListFile(path, policy, &stats);
    }
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line(), e.column());
  }
  if (stats.dropped() > 0) {
    err << "warning: " << path << ": dropped " << stats.dropped_duplicates
        << " duplicate edge(s) and " << stats.dropped_self_loops << " self-loop(s)\n";
  }
  return g;
}

SymmetryOptions ToSymmetryOptions(const Common& common) {
  SymmetryOptions options;
  options.canonical.node_budget = common.budget;
  options.threads = common.threads;
  return options;
}

Locality ToLocality(const std::optional<std::size_t>& k, bool global) {
  return global ? Locality::Global() : Locality::Order(k.value_or(1));
}

int ExitFor(Verdict verdict) {
  switch (verdict) {
    case Verdict::kSymmetric:
      return kExitOk;
    case Verdict::kAsymmetric:
      return kExitNegative;
    case Verdict::kUndecided:
      return kExitUndecided;
  }
  return kExitUndecided;
}

std::string VersionText() {
  return std::string("localsym ") + LOCALSYM_VERSION + "\nprng " + std::string(kPrngId) +
         "\ncanonical-code " + std::string(CanonicalCode::kFormatVersion);
}

struct GenArgs {
  std::string model = "gnp";
  std::size_t n = 0;
  std::optional<double> p;
  std::optional<std::uint64_t> m;
  std::uint64_t seed = 0;
  std::string out = "-";
};

int CmdGen(const GenArgs& args, std::ostream& out, std::ostream& err) {
  Graph g;
  if (args.model == "gnp") {
    if (!args.p || args.m) {
      err << "error: --model gnp needs --p and no --m\n";
      return kExitInputError;
    }
    g = SampleGnp({args.n, *args.p, args.seed});
  } else {
    if (!args.m || args.p) {
      err << "error: --model gnm needs --m and no --p\n";
      return kExitInputError;
    }
    g = SampleGnm({args.n, *args.m, args.seed});
  }
  if (args.out == "-") {
    WriteEdgeList(out, g);
  } else {
    WriteEdgeListFile(args.out, g);
  }
  return kExitOk;
}

int CmdStats(const std::string& path, const Common& common, std::ostream& out,
             std::ostream& err) {
  const Graph g = LoadGraph(path, common, err);
  const std::size_t n = g.num_vertices();
  std::size_t min_degree = 0, max_degree = 0;
  for (Vertex v = 0; v < n; ++v) {
    min_degree = v == 0 ? g.degree(v) : std::min(min_degree, g.degree(v));
    max_degree = std::max(max_degree, g.degree(v));
  }
  nlohmann::ordered_json doc;
  doc["n"] = n;
  doc["m"] = g.num_edges();
  doc["min_degree"] = min_degree;
  doc["max_degree"] = max_degree;
  doc["mean_degree"] = n == 0 ? 0.0 : 2.0 * static_cast<double>(g.num_edges()) / static_cast<double>(n);
  doc["triangles"] = TriangleCount(g);
  doc["connected"] = IsConnected(g);
  const std::size_t diameter = Diameter(g);
  if (diameter == kInfiniteDistance) {
    doc["diameter"] = nullptr;
  } else {
    doc["diameter"] = diameter;
  }
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int CmdClasses(const std::string& path, Locality locality, const std::string& format,
               const Common& common, std::ostream& out, std::ostream& err) {
  const Graph g = LoadGraph(path, common, err);
  const auto partition = SymmetryPartition(g, locality, ToSymmetryOptions(common));
  if (format == "json") {
    out << PartitionToJson(partition, 2) << '\n';
  } else {
    out << "class\tsize\tmembers\tcode\n";
    for (std::size_t c = 0; c < partition.classes.size(); ++c) {
      out << c << '\t' << partition.classes[c].size() << '\t';
      for (std::size_t i = 0; i < partition.classes[c].size(); ++i) {
        out << (i ? "," : "") << partition.classes[c][i];
      }
      out << '\t' << (partition.codes[c] ? partition.codes[c]->ToHex() : "undecided") << '\n';
    }
  }
  if (!partition.undecided.empty()) {
    err << "warning: " << partition.undecided.size()
        << " vertex(es) exceeded the canonicalization budget and are reported as singletons\n";
    return kExitUndecided;
  }
  return kExitOk;
}

int CmdPair(const std::string& path, Vertex v1, Vertex v2, Locality locality,
            const Common& common, std::ostream& out, std::ostream& err) {
  const Graph g = LoadGraph(path, common, err);
  const Verdict verdict = PairSymmetry(g, v1, v2, locality, ToSymmetryOptions(common));
  out << ToString(verdict) << '\n';
  return ExitFor(verdict);
}

int CmdGlobal(const std::string& path, const Common& common, std::ostream& out,
              std::ostream& err) {
  const Graph g = LoadGraph(path, common, err);
  const auto verdict = GraphGloballySymmetric(g, ToSymmetryOptions(common));
  out << ToString(verdict.status);
  if (verdict.witness) out << ' ' << verdict.witness->first << ' ' << verdict.witness->second;
  out << '\n';
  return ExitFor(verdict.status);
}

int CmdDsed(const std::string& path1, const std::string& path2, bool explain,
            const Common& common, std::ostream& out, std::ostream& err) {
  const Graph a = LoadGraph(path1, common, err);
  const Graph b = LoadGraph(path2, common, err);
  if (explain) {
    out << "degree,count1,count2,abs_diff\n";
    for (const auto& term : DsedTerms(DegreeFunction::Of(a), DegreeFunction::Of(b))) {
      out << term.degree << ',' << term.count_a << ',' << term.count_b << ',' << term.diff << '\n';
    }
  } else {
    out << Dsed(a, b) << '\n';
  }
  return kExitOk;
}

int CmdExperiment(const std::string& config, const std::string& out_path,
                  std::optional<unsigned> threads, std::ostream& out, std::ostream& err) {
  ExperimentSpec spec;
  try {
    spec = ParseExperimentConfigFile(config);
  } catch (const ParseError& e) {
    err << "error: " << config << ": " << e.what() << '\n';
    return kExitInputError;
  }
  if (threads) spec.threads = *threads;

  std::ofstream file;
  std::ostream* sink = &out;
  if (out_path != "-") {
    file.open(out_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "error: cannot open " << out_path << " for writing\n";
      return kExitInputError;
    }
    sink = &file;
  }
  *sink << CsvHeader(spec.mode) << '\n' << std::flush;
  const std::size_t emitted = RunExperiment(
      spec,
      [&](const ExperimentRow& row) {
        *sink << CsvRow(row) << '\n' << std::flush;
        for (const auto& warning : row.warnings) {
          err << "warning: cell n=" << row.n << " p=" << FormatDouble(row.p) << ": " << warning
              << '\n';
        }
        if (row.undecided > 0) {
          err << "warning: cell n=" << row.n << " p=" << FormatDouble(row.p) << ": "
              << row.undecided << " of " << row.samples << " samples undecided\n";
        }
      },
      &InterruptFlag());
  if (emitted < spec.cells.size()) {
    err << "interrupted: wrote " << emitted << " of " << spec.cells.size() << " rows\n";
    return kExitInterrupted;
  }
  return kExitOk;
}

}  // namespace

std::atomic<bool>& InterruptFlag() {
  static std::atomic<bool> flag{false};
  return flag;
}

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local and global vertex symmetry of graphs, degree-sequence distances and "
               "seeded random-graph experiments."};
  app.set_version_flag("--version", VersionText());
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--threads", common.threads, "Worker threads; 0 uses every core")
      ->capture_default_str();

  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", common.budget, "Search node budget per canonicalization")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
  };
  auto add_strict = [&](CLI::App* sub) {
    sub->add_flag("--strict", common.strict,
                  "Reject duplicate edges and self-loops instead of dropping them");
  };

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Sample a random graph as an edge list");
  gen_cmd->add_option("--model", gen.model, "gnp or gnm")
      ->capture_default_str()
      ->check(CLI::IsMember({"gnp", "gnm"}));
  gen_cmd->add_option("--n", gen.n, "Vertex count")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--p", gen.p, "Edge probability (gnp)")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--m", gen.m, "Edge count (gnm)");
  gen_cmd->add_option("--seed", gen.seed, "PRNG seed")->required();
  gen_cmd->add_option("--out", gen.out, "Output path, - for stdout")->capture_default_str();

  std::string input, input2;
  auto* stats_cmd = app.add_subcommand("stats", "Basic statistics as JSON");
  stats_cmd->add_option("input", input, "Edge-list file, - for stdin")->required();
  add_strict(stats_cmd);

  std::optional<std::size_t> k;
  bool global = false;
  auto add_locality = [&](CLI::App* sub) {
    auto* k_opt = sub->add_option("--k", k, "Neighborhood radius (default 1)");
    auto* g_opt = sub->add_flag("--global", global, "Use whole-graph automorphisms");
    k_opt->excludes(g_opt);
  };

  std::string format = "json";
  auto* classes_cmd = app.add_subcommand("classes", "Vertex symmetry classes");
  classes_cmd->add_option("input", input, "Edge-list file, - for stdin")->required();
  add_locality(classes_cmd);
  classes_cmd->add_option("--format", format, "json or tsv")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "tsv"}));
  add_budget(classes_cmd);
  add_strict(classes_cmd);

  Vertex v1 = 0, v2 = 0;
  auto* pair_cmd = app.add_subcommand("pair", "Are two vertices symmetric?");
  pair_cmd->add_option("input", input, "Edge-list file, - for stdin")->required();
  pair_cmd->add_option("v1", v1, "First vertex")->required();
  pair_cmd->add_option("v2", v2, "Second vertex")->required();
  add_locality(pair_cmd);
  add_budget(pair_cmd);
  add_strict(pair_cmd);

  auto* global_cmd = app.add_subcommand("global", "Does the graph have a non-trivial automorphism?");
  global_cmd->add_option("input", input, "Edge-list file, - for stdin")->required();
  add_budget(global_cmd);
  add_strict(global_cmd);

  bool explain = false;
  auto* dsed_cmd = app.add_subcommand("dsed", "Degree-sequence edit distance of two graphs");
  dsed_cmd->add_option("input1", input, "First edge-list file")->required();
  dsed_cmd->add_option("input2", input2, "Second edge-list file")->required();
  dsed_cmd->add_flag("--explain", explain, "Print the per-degree terms as CSV");
  add_strict(dsed_cmd);

  std::string config, out_path = "-";
  auto* exp_cmd = app.add_subcommand("experiment", "Run a Monte Carlo grid from a config file");
  exp_cmd->add_option("config", config, "Config file")->required();
  exp_cmd->add_option("--out", out_path, "CSV output path, - for stdout")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*gen_cmd) return CmdGen(gen, out, err);
    if (*stats_cmd) return CmdStats(input, common, out, err);
    if (*classes_cmd) return CmdClasses(input, ToLocality(k, global), format, common, out, err);
    if (*pair_cmd) return CmdPair(input, v1, v2, ToLocality(k, global), common, out, err);
    if (*global_cmd) return CmdGlobal(input, common, out, err);
    if (*dsed_cmd) return CmdDsed(input, input2, explain, common, out, err);
    if (*exp_cmd) {
      std::optional<unsigned> threads;
      if (app.get_option("--threads")->count() > 0) threads = common.threads;
      return CmdExperiment(config, out_path, threads, out, err);
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUndecided;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace localsym::cli
