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

// Plain-text edge lists: one edge per line as two whitespace-separated
// non-negative integers. Lines whose first non-blank character is '#' are
// comments. An optional "n <count>" line before the first edge fixes the
// vertex count; otherwise n = 1 + largest id seen (0 for an empty file).

#ifndef LOCALSYM_EDGE_LIST_IO_HPP_
#define LOCALSYM_EDGE_LIST_IO_HPP_

#include <filesystem>
#include <iosfwd>

#include "localsym/graph.hpp"

namespace localsym {

// Throws ParseError (with 1-based line) on malformed input, plus the
// Graph::FromEdgeList errors.
Graph ReadEdgeList(std::istream& in, EdgePolicy policy = EdgePolicy::kLenient,
                   BuildStats* stats = nullptr);
Graph ReadEdgeListFile(const std::filesystem::path& path,
                       EdgePolicy policy = EdgePolicy::kLenient,
                       BuildStats* stats = nullptr);

// Writes the "n" header followed by every edge (u < v) in sorted order.
void WriteEdgeList(std::ostream& out, const Graph& g);
void WriteEdgeListFile(const std::filesystem::path& path, const Graph& g);

}  // namespace localsym

#endif  // LOCALSYM_EDGE_LIST_IO_HPP_
