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

// Experiment config files.
//
//   # comment
//   mode = local-symmetry
//   samples = 200
//   n = 500, 1000, 2000
//   alpha = 0.8
//
//   [cell.1]
//   n = 100
//   p = 0
//
// Top-level keys: mode, samples, k, seed, budget, c, delta, epsilon,
// star_fast_path, threads, n, alpha, p. The n list crossed with the alpha
// list (or the p list) gives grid cells in n-major order; [cell.N] sections
// add single cells after the grid, each with n and one of alpha or p.
// Unknown keys, repeated keys and repeated sections are errors.

#ifndef LOCALSYM_CLI_CONFIG_HPP_
#define LOCALSYM_CLI_CONFIG_HPP_

#include <filesystem>
#include <istream>

#include "localsym/experiments.hpp"

namespace localsym::cli {

// Throws ParseError with the 1-based line and column of the offending token.
// Semantic checks (p in range, samples >= 1, ...) are done here as well, so
// a returned spec always validates.
ExperimentSpec ParseExperimentConfig(std::istream& in);
ExperimentSpec ParseExperimentConfigFile(const std::filesystem::path& path);

}  // namespace localsym::cli

#endif  // LOCALSYM_CLI_CONFIG_HPP_
