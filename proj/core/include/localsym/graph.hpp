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

#ifndef LOCALSYM_GRAPH_HPP_
#define LOCALSYM_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace localsym {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

enum class EdgePolicy {
  // Duplicate edges (in either orientation) and self-loops are errors.
  kStrict,
  // Duplicates and self-loops are silently dropped and counted.
  kLenient,
};

struct BuildStats {
  std::size_t dropped_duplicates = 0;
  std::size_t dropped_self_loops = 0;

  std::size_t dropped() const { return dropped_duplicates + dropped_self_loops; }
};

// Immutable simple undirected graph on vertices 0..n-1 in compressed
// adjacency form. Neighbor lists are sorted ascending.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  // Builds from an edge list. Throws EndpointOutOfRange for endpoints >= n;
  // in strict mode also DuplicateEdge and SelfLoop.
  static Graph FromEdgeList(std::span<const Edge> edges, std::size_t n,
                            EdgePolicy policy = EdgePolicy::kStrict,
                            BuildStats* stats = nullptr);

  // Builds from per-vertex neighbor lists that are already symmetric,
  // sorted, loop-free and duplicate-free. Checked only in debug builds.
  static Graph FromSortedAdjacency(std::vector<std::size_t> offsets,
                                   std::vector<Vertex> neighbors);

  std::size_t num_vertices() const { return offsets_.size() - 1; }
  std::size_t num_edges() const { return neighbors_.size() / 2; }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v], degree(v)};
  }

  // O(log deg) via binary search on the smaller list.
  bool HasEdge(Vertex u, Vertex v) const;

  // Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> Edges() const;

  // Relabels vertex v as perm[v]. perm must be a permutation of 0..n-1.
  Graph Permuted(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> neighbors_;
};

// Sorted duplicate-free set of vertex ids of some parent graph.
class VertexSet {
 public:
  VertexSet() = default;

  // Sorts and deduplicates. Throws VertexOutOfRange if any id >= n.
  static VertexSet Of(std::vector<Vertex> members, std::size_t n);
  static VertexSet Single(Vertex v, std::size_t n);
  static VertexSet All(std::size_t n);

  std::span<const Vertex> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool Contains(Vertex v) const;

  // Complement within 0..n-1.
  VertexSet Complement(std::size_t n) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

struct InducedSubgraph {
  Graph graph;
  // Original id of each new vertex; strictly increasing.
  std::vector<Vertex> vertex_map;

  // New id of an original vertex, or -1 if absent.
  std::int64_t LocalIndex(Vertex original) const;
};

// Subgraph induced by s.
InducedSubgraph Induced(const Graph& g, const VertexSet& s);

// All vertices at distance <= k from s (s included). k = 0 returns s.
VertexSet OpenKNeighborhood(const Graph& g, const VertexSet& s, std::size_t k);

// Subgraph induced by OpenKNeighborhood(g, s, k).
InducedSubgraph ClosedKNeighborhood(const Graph& g, const VertexSet& s,
                                    std::size_t k);

// Number of edges with exactly one endpoint in s.
std::size_t BoundaryEdgeCount(const Graph& g, const VertexSet& s);

inline constexpr std::size_t kInfiniteDistance =
    std::numeric_limits<std::size_t>::max();

// BFS distances from v; unreachable vertices get kInfiniteDistance.
std::vector<std::size_t> Distances(const Graph& g, Vertex v);

// Largest distance from v, kInfiniteDistance if g is disconnected.
std::size_t Eccentricity(const Graph& g, Vertex v);

// True iff some vertex lies at distance >= k from v (unreachable counts).
bool EccentricityAtLeast(const Graph& g, Vertex v, std::size_t k);

// All-pairs BFS. kInfiniteDistance for disconnected graphs, 0 for graphs
// with fewer than two vertices.
std::size_t Diameter(const Graph& g);

bool IsConnected(const Graph& g);

}  // namespace localsym

#endif  // LOCALSYM_GRAPH_HPP_
