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

#include "localsym/graph.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <string>

#include "localsym/errors.hpp"

namespace localsym {

Graph Graph::FromEdgeList(std::span<const Edge> edges, std::size_t n,
                          EdgePolicy policy, BuildStats* stats) {
  BuildStats local_stats;
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) {
      throw EndpointOutOfRange("edge (" + std::to_string(a) + ", " +
                               std::to_string(b) + ") has an endpoint >= n = " +
                               std::to_string(n));
    }
    if (a == b) {
      if (policy == EdgePolicy::kStrict) {
        throw SelfLoop("self-loop at vertex " + std::to_string(a));
      }
      ++local_stats.dropped_self_loops;
      continue;
    }
    normalized.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(normalized.begin(), normalized.end());
  auto last = std::unique(normalized.begin(), normalized.end());
  if (last != normalized.end()) {
    if (policy == EdgePolicy::kStrict) {
      auto dup = std::adjacent_find(normalized.begin(), normalized.end());
      throw DuplicateEdge("duplicate edge (" + std::to_string(dup->first) +
                          ", " + std::to_string(dup->second) + ")");
    }
    local_stats.dropped_duplicates =
        static_cast<std::size_t>(normalized.end() - last);
    normalized.erase(last, normalized.end());
  }
  if (stats != nullptr) *stats = local_stats;

  std::vector<std::size_t> offsets(n + 1, 0);
  for (const auto& [a, b] : normalized) {
    ++offsets[a + 1];
    ++offsets[b + 1];
  }
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  std::vector<Vertex> neighbors(offsets[n]);
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  // Sorted (a, b) pairs with a < b: pushing b onto a and a onto b keeps every
  // list ascending, because for fixed target the sources arrive in order.
  for (const auto& [a, b] : normalized) neighbors[fill[b]++] = a;
  for (const auto& [a, b] : normalized) neighbors[fill[a]++] = b;
  return FromSortedAdjacency(std::move(offsets), std::move(neighbors));
}

Graph Graph::FromSortedAdjacency(std::vector<std::size_t> offsets,
                                 std::vector<Vertex> neighbors) {
  Graph g;
  g.offsets_ = std::move(offsets);
  g.neighbors_ = std::move(neighbors);
#ifndef NDEBUG
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto nb = g.neighbors(v);
    assert(std::is_sorted(nb.begin(), nb.end()));
    assert(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
    for (Vertex w : nb) {
      assert(w != v);
      assert(std::binary_search(g.neighbors(w).begin(), g.neighbors(w).end(), v));
    }
  }
#endif
  return g;
}

bool Graph::HasEdge(Vertex u, Vertex v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> edges;
  edges.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

Graph Graph::Permuted(std::span<const Vertex> perm) const {
  std::vector<Edge> edges;
  edges.reserve(num_edges());
  for (const auto& [u, v] : Edges()) edges.emplace_back(perm[u], perm[v]);
  return FromEdgeList(edges, num_vertices());
}

VertexSet VertexSet::Of(std::vector<Vertex> members, std::size_t n) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!members.empty() && members.back() >= n) {
    throw VertexOutOfRange("vertex " + std::to_string(members.back()) +
                           " out of range for n = " + std::to_string(n));
  }
  VertexSet s;
  s.members_ = std::move(members);
  return s;
}

VertexSet VertexSet::Single(Vertex v, std::size_t n) { return Of({v}, n); }

VertexSet VertexSet::All(std::size_t n) {
  VertexSet s;
  s.members_.resize(n);
  for (std::size_t v = 0; v < n; ++v) s.members_[v] = static_cast<Vertex>(v);
  return s;
}

bool VertexSet::Contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::Complement(std::size_t n) const {
  VertexSet out;
  auto it = members_.begin();
  for (std::size_t v = 0; v < n; ++v) {
    if (it != members_.end() && *it == v) {
      ++it;
    } else {
      out.members_.push_back(static_cast<Vertex>(v));
    }
  }
  return out;
}

std::int64_t InducedSubgraph::LocalIndex(Vertex original) const {
  auto it = std::lower_bound(vertex_map.begin(), vertex_map.end(), original);
  if (it == vertex_map.end() || *it != original) return -1;
  return it - vertex_map.begin();
}

InducedSubgraph Induced(const Graph& g, const VertexSet& s) {
  const std::size_t n = g.num_vertices();
  if (!s.empty() && s.members().back() >= n) {
    throw VertexOutOfRange("vertex set exceeds graph of order " +
                           std::to_string(n));
  }
  InducedSubgraph sub;
  sub.vertex_map.assign(s.begin(), s.end());
  const std::size_t k = sub.vertex_map.size();

  // Dense old -> new index, reused across calls on the same thread and
  // restored to -1 before returning.
  thread_local std::vector<std::int64_t> local;
  if (local.size() < n) local.resize(n, -1);
  for (std::size_t i = 0; i < k; ++i) local[sub.vertex_map[i]] = static_cast<std::int64_t>(i);

  std::vector<std::size_t> offsets(k + 1, 0);
  std::vector<Vertex> neighbors;
  for (std::size_t i = 0; i < k; ++i) {
    // Original neighbor lists are sorted and vertex_map is increasing, so
    // the local ids come out sorted too.
    for (Vertex w : g.neighbors(sub.vertex_map[i])) {
      const std::int64_t j = local[w];
      if (j >= 0) neighbors.push_back(static_cast<Vertex>(j));
    }
    offsets[i + 1] = neighbors.size();
  }
  for (Vertex v : sub.vertex_map) local[v] = -1;
  sub.graph = Graph::FromSortedAdjacency(std::move(offsets), std::move(neighbors));
  return sub;
}

VertexSet OpenKNeighborhood(const Graph& g, const VertexSet& s, std::size_t k) {
  const std::size_t n = g.num_vertices();
  if (!s.empty() && s.members().back() >= n) {
    throw VertexOutOfRange("vertex set exceeds graph of order " +
                           std::to_string(n));
  }
  std::vector<Vertex> reached(s.begin(), s.end());
  std::vector<char> seen(n, 0);
  for (Vertex v : reached) seen[v] = 1;
  std::size_t frontier_begin = 0;
  for (std::size_t depth = 0; depth < k; ++depth) {
    const std::size_t frontier_end = reached.size();
    if (frontier_begin == frontier_end) break;
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (Vertex w : g.neighbors(reached[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          reached.push_back(w);
        }
      }
    }
    frontier_begin = frontier_end;
  }
  return VertexSet::Of(std::move(reached), n);
}

InducedSubgraph ClosedKNeighborhood(const Graph& g, const VertexSet& s,
                                    std::size_t k) {
  return Induced(g, OpenKNeighborhood(g, s, k));
}

std::size_t BoundaryEdgeCount(const Graph& g, const VertexSet& s) {
  std::vector<char> inside(g.num_vertices(), 0);
  for (Vertex v : s) {
    if (v >= g.num_vertices()) {
      throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range");
    }
    inside[v] = 1;
  }
  std::size_t count = 0;
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) count += inside[w] ? 0 : 1;
  }
  return count;
}

std::vector<std::size_t> Distances(const Graph& g, Vertex v) {
  std::vector<std::size_t> dist(g.num_vertices(), kInfiniteDistance);
  std::vector<Vertex> queue;
  queue.reserve(g.num_vertices());
  dist[v] = 0;
  queue.push_back(v);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kInfiniteDistance) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::size_t Eccentricity(const Graph& g, Vertex v) {
  const auto dist = Distances(g, v);
  return *std::max_element(dist.begin(), dist.end());
}

bool EccentricityAtLeast(const Graph& g, Vertex v, std::size_t k) {
  return Eccentricity(g, v) >= k;
}

std::size_t Diameter(const Graph& g) {
  std::size_t diameter = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    diameter = std::max(diameter, Eccentricity(g, v));
    if (diameter == kInfiniteDistance) break;
  }
  return diameter;
}

bool IsConnected(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  return Eccentricity(g, 0) != kInfiniteDistance;
}

}  // namespace localsym
