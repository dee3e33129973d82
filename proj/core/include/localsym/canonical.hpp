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

// Canonical forms of rooted graphs.
//
// A rooted graph is canonicalized by individualization-refinement: the root
// gets its own initial color, colors are refined to the coarsest equitable
// partition, and the search tree branches on the vertices of the first
// largest non-singleton cell (in ascending vertex order). Every leaf is a
// discrete partition, i.e. a relabeling; the code is the upper-triangular
// adjacency bitstring of the minimal leaf, where leaves are compared first
// by their path of refinement invariants and then by the bitstring.
// Automorphisms discovered at equivalent leaves prune the tree.
//
// Two rooted graphs have equal codes iff a root-preserving isomorphism
// exists. The root always lands at position 0.

#ifndef LOCALSYM_CANONICAL_HPP_
#define LOCALSYM_CANONICAL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "localsym/graph.hpp"

namespace localsym {

class RootedGraph {
 public:
  // Throws VertexOutOfRange unless root < graph.num_vertices().
  RootedGraph(Graph graph, Vertex root);

  const Graph& graph() const { return graph_; }
  Vertex root() const { return root_; }
  std::size_t num_vertices() const { return graph_.num_vertices(); }

 private:
  Graph graph_;
  Vertex root_;
};

// Vertex coloring with color ids forming the contiguous range 0..c-1.
class Coloring {
 public:
  Coloring() = default;
  // Throws InvalidArgument if the ids are not contiguous from 0.
  explicit Coloring(std::vector<std::uint32_t> colors);

  std::span<const std::uint32_t> colors() const { return colors_; }
  std::uint32_t operator[](Vertex v) const { return colors_[v]; }
  std::size_t size() const { return colors_.size(); }
  std::size_t num_colors() const { return num_colors_; }
  bool IsDiscrete() const { return num_colors_ == colors_.size(); }

  // Members of each color class, ascending, indexed by color id.
  std::vector<std::vector<Vertex>> Classes() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<std::uint32_t> colors_;
  std::size_t num_colors_ = 0;
};

// Root gets color 0, every other vertex color 1.
Coloring RootColoring(const RootedGraph& rg);

// Coarsest stable refinement of `initial` by neighbor-color multisets.
// Color ids are assigned by sorting (old color, sorted neighbor colors), so
// the result is deterministic and the relative order of old classes is
// kept. Throws InvalidArgument unless the root is a singleton class.
Coloring Refine(const RootedGraph& rg, const Coloring& initial);

// Same refinement without the root requirement; used for unrooted
// invariants such as 1-WL colors of a whole graph.
Coloring RefineUnrooted(const Graph& g, const Coloring& initial);

// Certificate of a rooted graph up to root-preserving isomorphism. Ordered
// lexicographically by (vertex count, bitstring).
class CanonicalCode {
 public:
  static constexpr std::string_view kFormatVersion = "v1";

  CanonicalCode() = default;

  std::size_t num_vertices() const { return n_; }
  std::span<const std::uint64_t> words() const { return words_; }

  // Adjacency of canonical positions i != j.
  bool Adjacent(std::size_t i, std::size_t j) const;

  // The canonically labeled graph; the root is vertex 0.
  Graph ToGraph() const;

  // "v1:" followed by the vertex count as 8 hex digits and the bitstring
  // as whole bytes (trailing bits zero-padded), lowercase.
  std::string ToHex() const;
  // Throws ParseError on malformed input.
  static CanonicalCode FromHex(std::string_view text);

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  friend class CanonicalSearch;

  static std::size_t BitIndex(std::size_t n, std::size_t i, std::size_t j);

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct CanonicalOptions {
  // Search-tree nodes allowed per canonicalization.
  std::uint64_t node_budget = 1'000'000;
};

struct CanonicalStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t automorphisms = 0;
};

struct CanonicalForm {
  CanonicalCode code;
  // labeling[v] is the canonical position of vertex v; labeling[root] == 0.
  std::vector<Vertex> labeling;
};

// Throws BudgetExceeded when the search needs more than
// options.node_budget nodes.
CanonicalForm CanonicalLabeling(const RootedGraph& rg,
                                const CanonicalOptions& options = {},
                                CanonicalStats* stats = nullptr);

CanonicalCode ComputeCanonicalCode(const RootedGraph& rg,
                                   const CanonicalOptions& options = {},
                                   CanonicalStats* stats = nullptr);

// Cheap necessary conditions for rooted isomorphism: vertex count, edge
// count, root degree and sorted degree sequence.
bool PassesIsomorphismFilters(const RootedGraph& a, const RootedGraph& b);

// True iff a root-preserving isomorphism a -> b exists. Propagates
// BudgetExceeded.
bool RootedIsomorphic(const RootedGraph& a, const RootedGraph& b,
                      const CanonicalOptions& options = {});

}  // namespace localsym

#endif  // LOCALSYM_CANONICAL_HPP_
