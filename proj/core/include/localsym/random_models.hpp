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

#ifndef LOCALSYM_RANDOM_MODELS_HPP_
#define LOCALSYM_RANDOM_MODELS_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string_view>

#include "localsym/graph.hpp"

namespace localsym {

// Recorded in experiment output so results can be tied to the generator.
inline constexpr std::string_view kPrngId = "xoshiro256ss-splitmix64-v1";

std::uint64_t SplitMix64(std::uint64_t& state);

// Stream seed for (base, index): splitmix64 mixing of both words.
std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t index);

// xoshiro256** seeded through splitmix64. Usable as a standard
// UniformRandomBitGenerator, but the helpers below are what the samplers
// use, so output does not depend on the standard library's distributions.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  // Uniform in [0, 1) with 53 random bits.
  double UniformDouble();
  // Uniform in [0, bound); bound > 0. Lemire's multiply-shift with rejection.
  std::uint64_t UniformBelow(std::uint64_t bound);

 private:
  std::uint64_t s_[4];
};

struct GnpSpec {
  std::size_t n = 1;
  double p = 0.0;
  std::uint64_t seed = 0;
};

struct GnmSpec {
  std::size_t n = 1;
  std::uint64_t m = 0;
  std::uint64_t seed = 0;
};

// Throws InvalidArgument unless n >= 1 and 0 <= p <= 1.
void Validate(const GnpSpec& spec);
// Throws InvalidArgument unless n >= 1 and m <= n(n-1)/2.
void Validate(const GnmSpec& spec);

// Each pair independently with probability p, via geometric skipping:
// O(n + m) expected time. Deterministic in the spec.
Graph SampleGnp(const GnpSpec& spec);

// Uniformly random set of exactly m edges. Deterministic in the spec.
Graph SampleGnm(const GnmSpec& spec);

// Each triangle counted once.
std::uint64_t TriangleCount(const Graph& g);

// True iff no two neighbors of v are adjacent, i.e. the egonet of v is a
// star centered at v.
bool PeripheralEdgeFree(const Graph& g, Vertex v);

// True iff every degree lies strictly inside ((n-1)p(1-delta), (n-1)p(1+delta)).
// Throws InvalidArgument unless 0 < delta < 1.
bool DegreeConcentrationCheck(const Graph& g, double p, double delta);

}  // namespace localsym

#endif  // LOCALSYM_RANDOM_MODELS_HPP_
