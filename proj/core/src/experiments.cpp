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

#include "localsym/experiments.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <string>

#include "localsym/degree_metrics.hpp"
#include "localsym/parallel.hpp"
#include "localsym/random_models.hpp"

namespace localsym {
namespace {

enum class Outcome { kFailure, kSuccess, kUndecided };

struct SampleResult {
  Outcome outcome = Outcome::kFailure;
  // Mode-specific statistic (triangle count, mean degree).
  double value = 0;
  double millis = 0;
};

// Runs every sample of a cell. `mean_value`, when given, receives the mean
// of SampleResult::value over all samples.
template <typename Fn>
ExperimentRow RunSamples(const CellParams& cell, ExperimentMode mode, std::size_t k,
                         Fn&& sample, double* mean_value = nullptr) {
  std::vector<SampleResult> results(cell.samples);
  ParallelFor(cell.samples, cell.threads, [&](std::size_t i) {
    if (cell.cancel != nullptr && cell.cancel->load(std::memory_order_relaxed)) {
      throw Cancelled("experiment cancelled");
    }
    const auto start = std::chrono::steady_clock::now();
    results[i] = sample(DeriveSeed(cell.seed, i));
    results[i].millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
  });

  ExperimentRow row;
  row.n = cell.n;
  row.p = cell.p;
  row.alpha = cell.alpha;
  row.k = k;
  row.mode = mode;
  row.samples = cell.samples;
  row.seed = cell.seed;
  double total_millis = 0;
  double total_value = 0;
  // Summed in sample order so floating-point results are reproducible.
  for (const auto& r : results) {
    row.successes += r.outcome == Outcome::kSuccess ? 1 : 0;
    row.undecided += r.outcome == Outcome::kUndecided ? 1 : 0;
    total_millis += r.millis;
    total_value += r.value;
  }
  if (mean_value != nullptr) {
    *mean_value = cell.samples == 0 ? 0 : total_value / static_cast<double>(cell.samples);
  }
  const std::size_t decided = row.samples - row.undecided;
  row.estimate = decided == 0 ? 0.0
                              : static_cast<double>(row.successes) / static_cast<double>(decided);
  const auto ci = Wilson(row.successes, decided);
  row.wilson_low = std::min(ci.low, row.estimate);
  row.wilson_high = std::max(ci.high, row.estimate);
  row.mean_runtime_ms = cell.samples == 0 ? 0 : total_millis / static_cast<double>(cell.samples);
  return row;
}

CellStatistics Statistics(double empirical, double analytic) {
  CellStatistics s{empirical, analytic, 0};
  if (analytic != 0) {
    s.relative_error = std::abs(empirical - analytic) / std::abs(analytic);
  } else {
    s.relative_error = empirical == 0 ? 0 : std::numeric_limits<double>::infinity();
  }
  return s;
}

Graph SampleFor(const CellParams& cell, std::uint64_t seed) {
  return SampleGnp({cell.n, cell.p, seed});
}

}  // namespace

std::string_view ToString(ExperimentMode mode) {
  switch (mode) {
    case ExperimentMode::kLocalSymmetry:
      return "local-symmetry";
    case ExperimentMode::kGlobalSymmetry:
      return "global-symmetry";
    case ExperimentMode::kDsedPairs:
      return "dsed-pairs";
    case ExperimentMode::kTriangleStats:
      return "triangle-stats";
    case ExperimentMode::kDegreeConcentration:
      return "degree-concentration";
  }
  return "unknown";
}

std::optional<ExperimentMode> ParseExperimentMode(std::string_view text) {
  for (auto mode : {ExperimentMode::kLocalSymmetry, ExperimentMode::kGlobalSymmetry,
                    ExperimentMode::kDsedPairs, ExperimentMode::kTriangleStats,
                    ExperimentMode::kDegreeConcentration}) {
    if (ToString(mode) == text) return mode;
  }
  return std::nullopt;
}

double ResolveP(const CellSpec& cell, double c) {
  if (cell.n < 1) throw InvalidArgument("cell needs n >= 1");
  if (cell.alpha.has_value() == cell.p.has_value()) {
    throw InvalidArgument("cell needs exactly one of alpha and p");
  }
  const double p =
      cell.p ? *cell.p : c * std::pow(static_cast<double>(cell.n), -*cell.alpha);
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidArgument("cell n = " + std::to_string(cell.n) + " resolves to p = " +
                          FormatDouble(p) + ", outside [0, 1]");
  }
  return p;
}

void ExperimentSpec::Validate() const {
  if (samples < 1) throw InvalidArgument("samples must be >= 1");
  if (budget < 1) throw InvalidArgument("budget must be >= 1");
  if (!(c > 0)) throw InvalidArgument("c must be positive");
  if ((mode == ExperimentMode::kDegreeConcentration || mode == ExperimentMode::kTriangleStats) &&
      !(delta > 0 && delta < 1)) {
    throw InvalidArgument("delta must lie in (0, 1)");
  }
  if (mode == ExperimentMode::kDsedPairs && !(epsilon > 0 && epsilon < 0.5)) {
    throw InvalidArgument("epsilon must lie in (0, 1/2)");
  }
  for (const auto& cell : cells) ResolveP(cell, c);
}

WilsonInterval Wilson(std::size_t successes, std::size_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1 + z2 / n;
  const double center = (phat + z2 / (2 * n)) / denom;
  const double half = z * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

ExperimentRow RunLocalSymmetryCell(const CellParams& cell, std::size_t k,
                                   const SymmetryOptions& options) {
  SymmetryOptions per_sample = options;
  per_sample.threads = 1;
  return RunSamples(cell, ExperimentMode::kLocalSymmetry, k, [&](std::uint64_t seed) {
    const auto verdict = GraphKLocallySymmetric(SampleFor(cell, seed), k, per_sample);
    switch (verdict.status) {
      case Verdict::kSymmetric:
        return SampleResult{Outcome::kSuccess};
      case Verdict::kUndecided:
        return SampleResult{Outcome::kUndecided};
      case Verdict::kAsymmetric:
        break;
    }
    return SampleResult{Outcome::kFailure};
  });
}

ExperimentRow RunGlobalSymmetryCell(const CellParams& cell, const SymmetryOptions& options) {
  SymmetryOptions per_sample = options;
  per_sample.threads = 1;
  auto row = RunSamples(cell, ExperimentMode::kGlobalSymmetry, 0, [&](std::uint64_t seed) {
    const auto verdict = GraphGloballySymmetric(SampleFor(cell, seed), per_sample);
    switch (verdict.status) {
      case Verdict::kSymmetric:
        return SampleResult{Outcome::kSuccess};
      case Verdict::kUndecided:
        return SampleResult{Outcome::kUndecided};
      case Verdict::kAsymmetric:
        break;
    }
    return SampleResult{Outcome::kFailure};
  });
  return row;
}

ExperimentRow RunDsedPairCell(const CellParams& cell, double epsilon) {
  const double n = static_cast<double>(cell.n);
  const double threshold = std::pow(n, 0.5 - epsilon);
  auto row = RunSamples(cell, ExperimentMode::kDsedPairs, 0, [&](std::uint64_t seed) {
    const Graph a = SampleFor(cell, DeriveSeed(seed, 0));
    const Graph b = SampleFor(cell, DeriveSeed(seed, 1));
    const auto distance = static_cast<double>(Dsed(a, b));
    return SampleResult{distance >= threshold ? Outcome::kSuccess : Outcome::kFailure, distance};
  });
  if (!(cell.p > std::log(n) / n && cell.p < 1 / std::sqrt(n))) {
    row.warnings.push_back("p = " + FormatDouble(cell.p) + " lies outside (log n / n, n^-1/2) for n = " +
                           std::to_string(cell.n));
  }
  return row;
}

ExperimentRow RunTriangleCell(const CellParams& cell, double tolerance) {
  const double n = static_cast<double>(cell.n);
  const double expected = n * (n - 1) * (n - 2) / 6 * cell.p * cell.p * cell.p;
  double mean_triangles = 0;
  auto row = RunSamples(
      cell, ExperimentMode::kTriangleStats, 0,
      [&](std::uint64_t seed) {
        const auto t = static_cast<double>(TriangleCount(SampleFor(cell, seed)));
        const bool ok = expected == 0 ? t == 0 : std::abs(t - expected) < tolerance * expected;
        return SampleResult{ok ? Outcome::kSuccess : Outcome::kFailure, t};
      },
      &mean_triangles);
  row.statistics = Statistics(mean_triangles, expected);
  return row;
}

ExperimentRow RunConcentrationCell(const CellParams& cell, double delta) {
  double mean_degree = 0;
  auto row = RunSamples(
      cell, ExperimentMode::kDegreeConcentration, 0,
      [&](std::uint64_t seed) {
        const Graph g = SampleFor(cell, seed);
        const double degree = 2.0 * static_cast<double>(g.num_edges()) / static_cast<double>(cell.n);
        return SampleResult{DegreeConcentrationCheck(g, cell.p, delta) ? Outcome::kSuccess
                                                                       : Outcome::kFailure,
                            degree};
      },
      &mean_degree);
  row.statistics = Statistics(mean_degree, static_cast<double>(cell.n - 1) * cell.p);
  return row;
}

ExperimentRow RunCell(const ExperimentSpec& spec, std::size_t cell_index,
                      const std::atomic<bool>* cancel) {
  const CellSpec& cell_spec = spec.cells.at(cell_index);
  CellParams cell;
  cell.n = cell_spec.n;
  cell.p = ResolveP(cell_spec, spec.c);
  cell.alpha = cell_spec.alpha;
  cell.samples = spec.samples;
  cell.seed = DeriveSeed(spec.base_seed, cell_index);
  cell.threads = spec.threads;
  cell.cancel = cancel;

  SymmetryOptions options;
  options.canonical.node_budget = spec.budget;
  options.star_fast_path = spec.star_fast_path;

  switch (spec.mode) {
    case ExperimentMode::kLocalSymmetry:
      return RunLocalSymmetryCell(cell, spec.k, options);
    case ExperimentMode::kGlobalSymmetry:
      return RunGlobalSymmetryCell(cell, options);
    case ExperimentMode::kDsedPairs:
      return RunDsedPairCell(cell, spec.epsilon);
    case ExperimentMode::kTriangleStats:
      return RunTriangleCell(cell, spec.delta);
    case ExperimentMode::kDegreeConcentration:
      return RunConcentrationCell(cell, spec.delta);
  }
  throw InvalidArgument("unknown experiment mode");
}

std::size_t RunExperiment(const ExperimentSpec& spec, const RowSink& sink,
                          const std::atomic<bool>* cancel) {
  spec.Validate();
  std::size_t emitted = 0;
  for (std::size_t i = 0; i < spec.cells.size(); ++i) {
    if (cancel != nullptr && cancel->load()) break;
    ExperimentRow row;
    try {
      row = RunCell(spec, i, cancel);
    } catch (const Cancelled&) {
      break;
    }
    sink(row);
    ++emitted;
  }
  return emitted;
}

std::string FormatDouble(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

namespace {

bool HasStatistics(ExperimentMode mode) {
  return mode == ExperimentMode::kTriangleStats || mode == ExperimentMode::kDegreeConcentration;
}

}  // namespace

std::string CsvHeader(ExperimentMode mode) {
  std::string header =
      "n,p,alpha,k,mode,samples,successes,undecided,estimate,wilson_low,wilson_high,seed,prng_id";
  if (HasStatistics(mode)) header += ",empirical_mean,analytic_mean,relative_error";
  return header;
}

std::string CsvRow(const ExperimentRow& row) {
  std::string out;
  bool first = true;
  auto field = [&](const std::string& value) {
    if (!first) out += ',';
    first = false;
    out += value;
  };
  field(std::to_string(row.n));
  field(FormatDouble(row.p));
  field(row.alpha ? FormatDouble(*row.alpha) : std::string());
  field(std::to_string(row.k));
  field(std::string(ToString(row.mode)));
  field(std::to_string(row.samples));
  field(std::to_string(row.successes));
  field(std::to_string(row.undecided));
  field(FormatDouble(row.estimate));
  field(FormatDouble(row.wilson_low));
  field(FormatDouble(row.wilson_high));
  field(std::to_string(row.seed));
  field(std::string(kPrngId));
  if (HasStatistics(row.mode)) {
    const CellStatistics stats = row.statistics.value_or(CellStatistics{});
    field(FormatDouble(stats.empirical_mean));
    field(FormatDouble(stats.analytic_mean));
    field(FormatDouble(stats.relative_error));
  }
  return out;
}

}  // namespace localsym
