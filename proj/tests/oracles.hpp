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

// Brute-force reference implementations used only by tests. None of these
// touch color refinement or the canonical search.

#ifndef LOCALSYM_TESTS_ORACLES_HPP_
#define LOCALSYM_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "localsym/graph.hpp"

namespace localsym::testing {

inline std::filesystem::path FixturePath(const std::string& name) {
  return std::filesystem::path(LOCALSYM_FIXTURE_DIR) / name;
}

inline Graph MakeGraph(std::size_t n, std::vector<Edge> edges) {
  return Graph::FromEdgeList(edges, n);
}

inline Graph Path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return MakeGraph(n, edges);
}

inline Graph Complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return MakeGraph(n, edges);
}

// K_{1,leaves} with center 0.
inline Graph Star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return MakeGraph(leaves + 1, edges);
}

inline Graph Edgeless(std::size_t n) { return MakeGraph(n, {}); }

// Each pair present with probability p, from a std::mt19937_64 stream so
// test inputs do not share the library's generator.
inline Graph RandomGraph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return MakeGraph(n, edges);
}

inline std::vector<Vertex> RandomPermutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// Upper-triangle adjacency bits of g relabeled by perm (vertex -> position).
inline std::vector<bool> RelabeledBits(const Graph& g, const std::vector<Vertex>& perm) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> bits(n < 2 ? 0 : n * (n - 1) / 2, false);
  for (const auto& [u, v] : g.Edges()) {
    std::size_t i = perm[u], j = perm[v];
    if (i > j) std::swap(i, j);
    bits[i * (2 * n - i - 1) / 2 + (j - i - 1)] = true;
  }
  return bits;
}

// Minimum relabeled bitstring over all bijections sending root to 0.
// Exhaustive: (n-1)! permutations.
inline std::vector<bool> BruteForceRootedForm(const Graph& g, Vertex root) {
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> others;
  for (Vertex v = 0; v < n; ++v) {
    if (v != root) others.push_back(v);
  }
  std::vector<bool> best;
  bool first = true;
  std::vector<Vertex> positions(n - 1);
  std::iota(positions.begin(), positions.end(), Vertex{1});
  do {
    std::vector<Vertex> perm(n);
    perm[root] = 0;
    for (std::size_t i = 0; i < others.size(); ++i) perm[others[i]] = positions[i];
    auto bits = RelabeledBits(g, perm);
    if (first || bits < best) {
      best = std::move(bits);
      first = false;
    }
  } while (std::next_permutation(positions.begin(), positions.end()));
  return best;
}

// Exhaustive permutation search for a bijection a -> b with root_a -> root_b
// preserving adjacency.
inline bool BruteForceRootedIsomorphic(const Graph& a, Vertex root_a, const Graph& b,
                                       Vertex root_b) {
  const std::size_t n = a.num_vertices();
  if (n != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  std::vector<Vertex> targets;
  for (Vertex v = 0; v < n; ++v) {
    if (v != root_b) targets.push_back(v);
  }
  std::vector<Vertex> sources;
  for (Vertex v = 0; v < n; ++v) {
    if (v != root_a) sources.push_back(v);
  }
  const auto edges = a.Edges();
  do {
    std::vector<Vertex> f(n);
    f[root_a] = root_b;
    for (std::size_t i = 0; i < sources.size(); ++i) f[sources[i]] = targets[i];
    bool ok = true;
    for (const auto& [u, v] : edges) {
      if (!b.HasEdge(f[u], f[v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(targets.begin(), targets.end()));
  return false;
}

// Backtracking search for an isomorphism a -> b extending the given forced
// pairs. Prunes only on degree equality and adjacency consistency with
// already-mapped vertices, so it stays exhaustive.
class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& a, const Graph& b) : a_(a), b_(b) {}

  bool Exists(const std::vector<Edge>& forced) {
    const std::size_t n = a_.num_vertices();
    if (n != b_.num_vertices() || a_.num_edges() != b_.num_edges()) return false;
    map_.assign(n, kUnmapped);
    used_.assign(n, 0);
    for (const auto& [u, v] : forced) {
      if (map_[u] != kUnmapped || used_[v] || !Consistent(u, v)) return false;
      map_[u] = v;
      used_[v] = 1;
    }
    return Extend();
  }

 private:
  static constexpr Vertex kUnmapped = ~Vertex{0};

  bool Consistent(Vertex u, Vertex v) const {
    if (a_.degree(u) != b_.degree(v)) return false;
    for (Vertex x = 0; x < a_.num_vertices(); ++x) {
      if (map_[x] == kUnmapped || x == u) continue;
      if (a_.HasEdge(u, x) != b_.HasEdge(v, map_[x])) return false;
    }
    return true;
  }

  // Next vertex: most already-mapped neighbors, then highest degree, then
  // lowest id. Every candidate image is still tried, so the search remains
  // exhaustive; the order only makes adjacency checks bite early.
  Vertex NextVertex() const {
    Vertex best = kUnmapped;
    std::size_t best_mapped = 0;
    for (Vertex u = 0; u < a_.num_vertices(); ++u) {
      if (map_[u] != kUnmapped) continue;
      std::size_t mapped = 0;
      for (Vertex w : a_.neighbors(u)) mapped += map_[w] != kUnmapped ? 1 : 0;
      if (best == kUnmapped || mapped > best_mapped ||
          (mapped == best_mapped && a_.degree(u) > a_.degree(best))) {
        best = u;
        best_mapped = mapped;
      }
    }
    return best;
  }

  bool Extend() {
    const Vertex u = NextVertex();
    if (u == kUnmapped) return true;
    for (Vertex v = 0; v < b_.num_vertices(); ++v) {
      if (used_[v] || !Consistent(u, v)) continue;
      map_[u] = v;
      used_[v] = 1;
      if (Extend()) return true;
      map_[u] = kUnmapped;
      used_[v] = 0;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
};

inline bool BruteForceAutomorphismMaps(const Graph& g, Vertex from, Vertex to) {
  return IsomorphismSearch(g, g).Exists({{from, to}});
}

// Orbit partition under the automorphism group, classes sorted by
// (size desc, smallest member asc).
inline std::vector<std::vector<Vertex>> BruteForceOrbits(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<int> orbit(n, -1);
  std::vector<std::vector<Vertex>> orbits;
  for (Vertex v = 0; v < n; ++v) {
    if (orbit[v] >= 0) continue;
    orbit[v] = static_cast<int>(orbits.size());
    orbits.push_back({v});
    for (Vertex w = v + 1; w < n; ++w) {
      if (orbit[w] < 0 && BruteForceAutomorphismMaps(g, v, w)) {
        orbit[w] = orbit[v];
        orbits.back().push_back(w);
      }
    }
  }
  std::sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() > b.size() : a.front() < b.front();
  });
  return orbits;
}

// Partition of vertices by pairwise backtracking rooted isomorphism of
// their closed k-neighborhoods, in the same class order.
inline std::vector<std::vector<Vertex>> BruteForceLocalClasses(const Graph& g, std::size_t k) {
  const std::size_t n = g.num_vertices();
  std::vector<InducedSubgraph> balls;
  for (Vertex v = 0; v < n; ++v) {
    balls.push_back(ClosedKNeighborhood(g, VertexSet::Single(v, n), k));
  }
  auto root = [&](Vertex v) { return static_cast<Vertex>(balls[v].LocalIndex(v)); };
  std::vector<int> cls(n, -1);
  std::vector<std::vector<Vertex>> classes;
  for (Vertex v = 0; v < n; ++v) {
    if (cls[v] >= 0) continue;
    cls[v] = static_cast<int>(classes.size());
    classes.push_back({v});
    for (Vertex w = v + 1; w < n; ++w) {
      if (cls[w] >= 0) continue;
      if (IsomorphismSearch(balls[v].graph, balls[w].graph).Exists({{root(v), root(w)}})) {
        cls[w] = cls[v];
        classes.back().push_back(w);
      }
    }
  }
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() > b.size() : a.front() < b.front();
  });
  return classes;
}

// Labeled graph whose edge set is bit i of `mask` for the i-th pair in
// row-major upper-triangular order.
inline Graph GraphFromMask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1U) edges.emplace_back(u, v);
    }
  }
  return MakeGraph(n, edges);
}

// Recursive minimum over partial injections: vertex i of `a` is either left
// unmapped or sent to any unused vertex of `b`.
inline std::size_t MinMismatchOracle(const Graph& a, const Graph& b, std::size_t i,
                              std::vector<char>& used, std::size_t mapped_equal) {
  if (i == a.num_vertices()) {
    return a.num_vertices() + b.num_vertices() - 2 * mapped_equal;
  }
  std::size_t best = MinMismatchOracle(a, b, i + 1, used, mapped_equal);
  for (Vertex j = 0; j < b.num_vertices(); ++j) {
    if (used[j]) continue;
    used[j] = 1;
    const std::size_t equal = a.degree(i) == b.degree(j) ? 1 : 0;
    best = std::min(best, MinMismatchOracle(a, b, i + 1, used, mapped_equal + equal));
    used[j] = 0;
  }
  return best;
}

inline std::size_t MinMismatchOracle(const Graph& a, const Graph& b) {
  std::vector<char> used(b.num_vertices(), 0);
  return MinMismatchOracle(a, b, 0, used, 0);
}

inline std::uint64_t BruteForceTriangles(const Graph& g) {
  std::uint64_t count = 0;
  const auto n = static_cast<Vertex>(g.num_vertices());
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!g.HasEdge(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (g.HasEdge(a, c) && g.HasEdge(b, c)) ++count;
      }
    }
  }
  return count;
}

}  // namespace localsym::testing

#endif  // LOCALSYM_TESTS_ORACLES_HPP_
