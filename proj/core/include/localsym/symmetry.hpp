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

// k-local and global symmetry of vertex pairs and graphs.
//
// Two vertices are k-locally symmetric when their closed k-neighborhoods,
// rooted at them, are isomorphic by a root-preserving map; globally
// symmetric when an automorphism of the whole graph maps one onto the other.
// Both reduce to canonical-code equality of rooted graphs.

#ifndef LOCALSYM_SYMMETRY_HPP_
#define LOCALSYM_SYMMETRY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "localsym/canonical.hpp"
#include "localsym/graph.hpp"

namespace localsym {

// Either a locality order k >= 0 or the global marker.
class Locality {
 public:
  static Locality Global() { return Locality(true, 0); }
  static Locality Order(std::size_t k) { return Locality(false, k); }

  bool is_global() const { return global_; }
  // Meaningless for the global marker.
  std::size_t k() const { return k_; }

  // "global" or the decimal order.
  std::string ToString() const;

  friend bool operator==(const Locality&, const Locality&) = default;

 private:
  Locality(bool global, std::size_t k) : global_(global), k_(k) {}

  bool global_;
  std::size_t k_;
};

enum class Verdict { kAsymmetric, kSymmetric, kUndecided };

// "asymmetric", "symmetric", "undecided".
std::string_view ToString(Verdict verdict);

struct SymmetryOptions {
  CanonicalOptions canonical;
  // For k = 1: two same-degree vertices whose egonets are stars are
  // reported as a witness without canonicalization.
  bool star_fast_path = true;
  // Workers for per-vertex canonicalization; 0 = hardware threads.
  unsigned threads = 1;
};

// Closed k-neighborhood of v rooted at v.
RootedGraph Egonet(const Graph& g, Vertex v, std::size_t k);

// The whole graph rooted at v.
RootedGraph RootedAt(const Graph& g, Vertex v);

// Throws InvalidArgument if v1 == v2, VertexOutOfRange for bad ids.
// Budget exhaustion yields Verdict::kUndecided.
Verdict KLocallySymmetric(const Graph& g, Vertex v1, Vertex v2, std::size_t k,
                          const SymmetryOptions& options = {});
Verdict GloballySymmetricPair(const Graph& g, Vertex v1, Vertex v2,
                              const SymmetryOptions& options = {});
Verdict PairSymmetry(const Graph& g, Vertex v1, Vertex v2, Locality locality,
                     const SymmetryOptions& options = {});

struct SymmetryClassPartition {
  Locality locality = Locality::Order(1);
  std::size_t n = 0;
  // Sorted by (size desc, smallest member asc); members ascending.
  std::vector<std::vector<Vertex>> classes;
  // One per class; empty for the singleton class of an undecided vertex.
  std::vector<std::optional<CanonicalCode>> codes;
  // Vertices whose canonicalization ran out of budget, ascending.
  std::vector<Vertex> undecided;

  // Class index of every vertex.
  std::vector<std::size_t> ClassOf() const;
};

SymmetryClassPartition SymmetryPartition(const Graph& g, Locality locality,
                                         const SymmetryOptions& options = {});

// {"k": int|"global", "n": int, "classes": [[...]], "undecided": [...],
//  "codes": ["v1:<hex>"|null, ...]} in exactly that field order.
std::string PartitionToJson(const SymmetryClassPartition& partition, int indent = -1);

struct SymmetryVerdict {
  Verdict status = Verdict::kAsymmetric;
  // Set iff status == kSymmetric; the two vertices are distinct.
  std::optional<std::pair<Vertex, Vertex>> witness;
  std::vector<Vertex> undecided_vertices;

  bool symmetric() const { return status == Verdict::kSymmetric; }
};

// Symmetric iff some two distinct vertices are k-locally symmetric. Vertices
// are grouped by a cheap invariant and groups are canonicalized in invariant
// order; the first group holding two equal codes supplies the witness (its
// two smallest such vertices). With the star fast path the witness is the
// first same-degree pair of star egonets in vertex order. After an early
// exit undecided_vertices lists only the vertices examined so far.
SymmetryVerdict GraphKLocallySymmetric(const Graph& g, std::size_t k,
                                       const SymmetryOptions& options = {});
// Symmetric iff the graph has a non-trivial automorphism.
SymmetryVerdict GraphGloballySymmetric(const Graph& g,
                                       const SymmetryOptions& options = {});
SymmetryVerdict GraphSymmetry(const Graph& g, Locality locality,
                              const SymmetryOptions& options = {});

}  // namespace localsym

#endif  // LOCALSYM_SYMMETRY_HPP_
