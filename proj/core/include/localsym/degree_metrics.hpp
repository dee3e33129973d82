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

#ifndef LOCALSYM_DEGREE_METRICS_HPP_
#define LOCALSYM_DEGREE_METRICS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "localsym/graph.hpp"

namespace localsym {

// Sparse map degree -> number of vertices with that degree. Only nonzero
// counts are stored, in ascending degree order.
class DegreeFunction {
 public:
  struct Entry {
    std::size_t degree;
    std::size_t count;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  DegreeFunction() = default;
  static DegreeFunction Of(const Graph& g);

  std::span<const Entry> entries() const { return entries_; }
  // 0 for degrees that do not occur.
  std::size_t operator()(std::size_t degree) const;
  // Sum of counts, i.e. the vertex count.
  std::size_t total() const;

  friend bool operator==(const DegreeFunction&, const DegreeFunction&) = default;

 private:
  std::vector<Entry> entries_;
};

inline DegreeFunction DegreeFunctionOf(const Graph& g) { return DegreeFunction::Of(g); }

// Degree-sequence edit distance: L1 distance between degree functions.
std::size_t Dsed(const DegreeFunction& a, const DegreeFunction& b);
std::size_t Dsed(const Graph& a, const Graph& b);

// Per-degree terms of Dsed for every degree present in either graph.
struct DsedTerm {
  std::size_t degree;
  std::size_t count_a;
  std::size_t count_b;
  std::size_t diff;
};
std::vector<DsedTerm> DsedTerms(const DegreeFunction& a, const DegreeFunction& b);

// Injective map from a subset of V(G) to a subset of V(G').
class PartialMapping {
 public:
  PartialMapping() = default;
  // Throws InvalidMapping if two pairs share a source or a target.
  explicit PartialMapping(std::vector<Edge> pairs);

  static PartialMapping Identity(std::size_t n);

  std::span<const Edge> pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }

 private:
  std::vector<Edge> pairs_;
};

// Vertices of either graph that are unmapped or mapped to a vertex of a
// different degree; mismatched pairs count once on each side. Throws
// InvalidMapping if a pair refers to a vertex outside its graph.
std::size_t DegreeMismatchCount(const Graph& a, const Graph& b, const PartialMapping& f);

inline constexpr std::size_t kDefaultMismatchCap = 12;

// Exact minimum of DegreeMismatchCount over every partial injective
// mapping, by exhaustive enumeration. Throws CapExceeded when
// |V(a)| + |V(b)| > cap.
std::size_t MinMismatchBruteForce(const Graph& a, const Graph& b,
                                  std::size_t cap = kDefaultMismatchCap);

struct SubgraphBound {
  std::size_t dsed;
  // |V \ S| + |C(S)|. Not a valid upper bound in general: a vertex of S
  // touching C(S) mismatches on both sides (K3 with |S| = 2 gives 5 > 3).
  std::size_t bound;
  // |V \ S| + 2 |C(S)|, which dsed never exceeds.
  std::size_t two_sided_bound;
};

// Dsed(g, g[S]) alongside both bounds.
SubgraphBound SubgraphBoundCheck(const Graph& g, const VertexSet& s);

}  // namespace localsym

#endif  // LOCALSYM_DEGREE_METRICS_HPP_
