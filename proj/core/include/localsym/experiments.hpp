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

// Seeded Monte Carlo estimates over (n, p) grids.
//
// Every cell draws its samples from streams derived from
// (base seed, cell index, sample index), so results do not depend on the
// thread count or scheduling. Rows come out in grid order.

#ifndef LOCALSYM_EXPERIMENTS_HPP_
#define LOCALSYM_EXPERIMENTS_HPP_

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "localsym/errors.hpp"
#include "localsym/symmetry.hpp"

namespace localsym {

enum class ExperimentMode {
  kLocalSymmetry,
  kGlobalSymmetry,
  kDsedPairs,
  kTriangleStats,
  kDegreeConcentration,
};

// "local-symmetry", "global-symmetry", "dsed-pairs", "triangle-stats",
// "degree-concentration".
std::string_view ToString(ExperimentMode mode);
std::optional<ExperimentMode> ParseExperimentMode(std::string_view text);

// One grid cell: p = c * n^-alpha, or an explicit p. Exactly one is set.
struct CellSpec {
  std::size_t n = 1;
  std::optional<double> alpha;
  std::optional<double> p;
};

// Throws InvalidArgument if the cell is malformed or p falls outside [0, 1].
double ResolveP(const CellSpec& cell, double c);

struct ExperimentSpec {
  std::vector<CellSpec> cells;
  std::size_t samples = 100;
  std::size_t k = 1;
  std::uint64_t base_seed = 0;
  ExperimentMode mode = ExperimentMode::kLocalSymmetry;
  std::uint64_t budget = CanonicalOptions{}.node_budget;
  double c = 1.0;
  // Relative band for degree-concentration and triangle-stats.
  double delta = 0.5;
  // Threshold exponent for dsed-pairs: success iff dsed >= n^(1/2 - epsilon).
  double epsilon = 0.1;
  bool star_fast_path = true;
  // 0 = hardware threads.
  unsigned threads = 0;

  // Throws InvalidArgument on the first problem found.
  void Validate() const;
};

struct CellStatistics {
  double empirical_mean = 0;
  double analytic_mean = 0;
  double relative_error = 0;
};

struct ExperimentRow {
  std::size_t n = 0;
  double p = 0;
  std::optional<double> alpha;
  std::size_t k = 0;
  ExperimentMode mode = ExperimentMode::kLocalSymmetry;
  std::size_t samples = 0;
  std::size_t successes = 0;
  std::size_t undecided = 0;
  // successes / (samples - undecided); 0 when nothing was decided.
  double estimate = 0;
  double wilson_low = 0;
  double wilson_high = 1;
  // Wall time per sample; not part of the determinism contract.
  double mean_runtime_ms = 0;
  std::uint64_t seed = 0;
  // Set for triangle-stats and degree-concentration.
  std::optional<CellStatistics> statistics;
  std::vector<std::string> warnings;

  std::size_t failures() const { return samples - successes - undecided; }
};

struct WilsonInterval {
  double low = 0;
  double high = 1;
};

inline constexpr double kZ95 = 1.959963984540054;

// Wilson score interval; [0, 1] when trials == 0.
WilsonInterval Wilson(std::size_t successes, std::size_t trials, double z = kZ95);

struct CellParams {
  std::size_t n = 1;
  double p = 0;
  std::optional<double> alpha;
  std::size_t samples = 1;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  // When set and raised, remaining samples are skipped and the cell
  // throws Cancelled.
  const std::atomic<bool>* cancel = nullptr;
};

class Cancelled : public Error {
 public:
  using Error::Error;
};

// Success: the sample graph is k-locally symmetric.
ExperimentRow RunLocalSymmetryCell(const CellParams& cell, std::size_t k,
                                   const SymmetryOptions& options = {});
// Success: the sample graph has a non-trivial automorphism.
ExperimentRow RunGlobalSymmetryCell(const CellParams& cell, const SymmetryOptions& options = {});
// Success: two independent samples have dsed >= n^(1/2 - epsilon). Adds a
// warning when p lies outside (log n / n, n^-1/2).
ExperimentRow RunDsedPairCell(const CellParams& cell, double epsilon);
// Success: |T - E[T]| < tolerance * E[T] (T == 0 when E[T] == 0).
ExperimentRow RunTriangleCell(const CellParams& cell, double tolerance);
// Success: every degree within (n-1)p(1 +- delta).
ExperimentRow RunConcentrationCell(const CellParams& cell, double delta);

// Seed of cell i: DeriveSeed(base_seed, i).
ExperimentRow RunCell(const ExperimentSpec& spec, std::size_t cell_index,
                      const std::atomic<bool>* cancel = nullptr);

using RowSink = std::function<void(const ExperimentRow&)>;

// Validates, then emits one row per cell in grid order. Returns the
// number of rows emitted, fewer than the cell count only when cancelled.
std::size_t RunExperiment(const ExperimentSpec& spec, const RowSink& sink,
                          const std::atomic<bool>* cancel = nullptr);

// n,p,alpha,k,mode,samples,successes,undecided,estimate,wilson_low,
// wilson_high,seed,prng_id; the statistics modes append
// empirical_mean,analytic_mean,relative_error. No trailing newline.
std::string CsvHeader(ExperimentMode mode);
std::string CsvRow(const ExperimentRow& row);

// Shortest round-trip decimal form.
std::string FormatDouble(double value);

}  // namespace localsym

#endif  // LOCALSYM_EXPERIMENTS_HPP_
