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

#include "localsym/random_models.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>
#include <vector>

#include "localsym/errors.hpp"

namespace localsym {
namespace {

__extension__ typedef unsigned __int128 Uint128;

constexpr std::uint64_t Rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

// Inverse of the row-major enumeration of pairs (u, v), u < v.
Edge PairFromIndex(std::uint64_t index, std::uint64_t n) {
  // Row u holds n-1-u pairs and starts at u*n - u(u+1)/2.
  auto row_start = [n](std::uint64_t u) { return u * n - u * (u + 1) / 2; };
  const double nd = static_cast<double>(n);
  const double disc = (2 * nd - 1) * (2 * nd - 1) - 8.0 * static_cast<double>(index);
  auto u = static_cast<std::uint64_t>(
      std::max(0.0, std::floor(((2 * nd - 1) - std::sqrt(std::max(0.0, disc))) / 2)));
  while (u > 0 && row_start(u) > index) --u;
  while (u + 1 < n && row_start(u + 1) <= index) ++u;
  const std::uint64_t v = u + 1 + (index - row_start(u));
  return {static_cast<Vertex>(u), static_cast<Vertex>(v)};
}

}  // namespace

std::uint64_t SplitMix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t state = base;
  const std::uint64_t mixed_base = SplitMix64(state);
  state = mixed_base ^ (index * 0xd1b54a32d192ed03ULL);
  return SplitMix64(state);
}

Rng::Rng(std::uint64_t seed) {
  std::uint64_t state = seed;
  for (auto& word : s_) word = SplitMix64(state);
}

Rng::result_type Rng::operator()() {
  const std::uint64_t result = Rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = Rotl(s_[3], 45);
  return result;
}

double Rng::UniformDouble() {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::UniformBelow(std::uint64_t bound) {
  Uint128 product = static_cast<Uint128>((*this)()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      product = static_cast<Uint128>((*this)()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

void Validate(const GnpSpec& spec) {
  if (spec.n < 1) throw InvalidArgument("G(n,p) needs n >= 1");
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) {
    throw InvalidArgument("G(n,p) needs 0 <= p <= 1, got p = " + std::to_string(spec.p));
  }
}

void Validate(const GnmSpec& spec) {
  if (spec.n < 1) throw InvalidArgument("G(n,m) needs n >= 1");
  const std::uint64_t pairs = static_cast<std::uint64_t>(spec.n) * (spec.n - 1) / 2;
  if (spec.m > pairs) {
    throw InvalidArgument("G(n,m) needs m <= n(n-1)/2 = " + std::to_string(pairs));
  }
}

Graph SampleGnp(const GnpSpec& spec) {
  Validate(spec);
  const std::size_t n = spec.n;
  std::vector<Edge> edges;
  if (spec.p >= 1.0) {
    edges.reserve(n * (n - 1) / 2);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph::FromEdgeList(edges, n);
  }
  if (spec.p > 0.0) {
    // Walk the lower triangle (v, w), w < v, jumping over geometric gaps of
    // absent pairs.
    Rng rng(spec.seed);
    const double log_q = std::log1p(-spec.p);
    std::int64_t v = 1;
    std::int64_t w = -1;
    const auto nn = static_cast<std::int64_t>(n);
    edges.reserve(static_cast<std::size_t>(spec.p * static_cast<double>(n) * (n - 1) / 2 * 1.1) + 16);
    while (v < nn) {
      const double r = rng.UniformDouble();
      const double skip = std::floor(std::log1p(-r) / log_q);
      // Gaps beyond the remaining triangle end the walk.
      if (skip > static_cast<double>(nn) * static_cast<double>(nn)) break;
      w += 1 + static_cast<std::int64_t>(skip);
      while (w >= v && v < nn) {
        w -= v;
        ++v;
      }
      if (v < nn) edges.emplace_back(static_cast<Vertex>(w), static_cast<Vertex>(v));
    }
  }
  return Graph::FromEdgeList(edges, n);
}

Graph SampleGnm(const GnmSpec& spec) {
  Validate(spec);
  const std::uint64_t pairs = static_cast<std::uint64_t>(spec.n) * (spec.n - 1) / 2;
  Rng rng(spec.seed);
  // Floyd's subset sampling over pair indices; dense requests sample the
  // complement instead.
  const bool complement = spec.m > pairs / 2;
  const std::uint64_t draw = complement ? pairs - spec.m : spec.m;
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(draw) * 2);
  for (std::uint64_t j = pairs - draw; j < pairs; ++j) {
    const std::uint64_t t = rng.UniformBelow(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<std::uint64_t> indices;
  if (complement) {
    indices.reserve(static_cast<std::size_t>(spec.m));
    for (std::uint64_t i = 0; i < pairs; ++i) {
      if (!chosen.contains(i)) indices.push_back(i);
    }
  } else {
    indices.assign(chosen.begin(), chosen.end());
  }
  std::vector<Edge> edges;
  edges.reserve(indices.size());
  for (auto i : indices) edges.push_back(PairFromIndex(i, spec.n));
  return Graph::FromEdgeList(edges, spec.n);
}

std::uint64_t TriangleCount(const Graph& g) {
  std::uint64_t total = 0;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    const auto nu = g.neighbors(u);
    for (Vertex v : nu) {
      if (v <= u) continue;
      // Count w > v adjacent to both: merge the tails of both lists.
      const auto nv = g.neighbors(v);
      auto a = std::upper_bound(nu.begin(), nu.end(), v);
      auto b = std::upper_bound(nv.begin(), nv.end(), v);
      while (a != nu.end() && b != nv.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          ++total;
          ++a;
          ++b;
        }
      }
    }
  }
  return total;
}

bool PeripheralEdgeFree(const Graph& g, Vertex v) {
  const auto nv = g.neighbors(v);
  for (Vertex w : nv) {
    // Any common neighbor of v and w closes a triangle through a
    // peripheral edge.
    const auto nw = g.neighbors(w);
    auto a = nv.begin();
    auto b = nw.begin();
    while (a != nv.end() && b != nw.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        return false;
      }
    }
  }
  return true;
}

bool DegreeConcentrationCheck(const Graph& g, double p, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw InvalidArgument("degree concentration needs 0 < delta < 1");
  }
  const double mean = static_cast<double>(g.num_vertices() - (g.num_vertices() > 0 ? 1 : 0)) * p;
  const double low = mean * (1 - delta);
  const double high = mean * (1 + delta);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto d = static_cast<double>(g.degree(v));
    if (!(d > low && d < high)) return false;
  }
  return true;
}

}  // namespace localsym
