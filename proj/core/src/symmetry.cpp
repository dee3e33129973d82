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

#include "localsym/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <span>
#include <tuple>
#include <unordered_map>

#include "json.hpp"
#include "localsym/errors.hpp"
#include "localsym/parallel.hpp"
#include "localsym/random_models.hpp"

namespace localsym {
namespace {

RootedGraph Subject(const Graph& g, Vertex v, Locality locality) {
  return locality.is_global() ? RootedAt(g, v) : Egonet(g, v, locality.k());
}

std::vector<std::optional<CanonicalCode>> CodesFor(const Graph& g,
                                                   std::span<const Vertex> vertices,
                                                   Locality locality,
                                                   const SymmetryOptions& options) {
  std::vector<std::optional<CanonicalCode>> codes(vertices.size());
  ParallelFor(vertices.size(), options.threads, [&](std::size_t i) {
    try {
      codes[i] = ComputeCanonicalCode(Subject(g, vertices[i], locality), options.canonical);
    } catch (const BudgetExceeded&) {
      // Left empty: undecided.
    }
  });
  return codes;
}

struct Group {
  std::vector<Vertex> members;
  std::optional<CanonicalCode> code;
};

// Groups vertices with equal (key, code); undecided vertices become
// singleton groups. Output sorted by (size desc, smallest member asc).
template <typename Key>
std::vector<Group> GroupByCode(std::span<const Vertex> vertices, std::span<const Key> keys,
                               std::vector<std::optional<CanonicalCode>> codes,
                               std::vector<Vertex>* undecided) {
  std::vector<std::size_t> decided;
  std::vector<Group> groups;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (codes[i]) {
      decided.push_back(i);
    } else {
      undecided->push_back(vertices[i]);
      groups.push_back({{vertices[i]}, std::nullopt});
    }
  }
  std::sort(decided.begin(), decided.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(keys[a], *codes[a], vertices[a]) <
           std::tie(keys[b], *codes[b], vertices[b]);
  });
  for (std::size_t j = 0; j < decided.size(); ++j) {
    const std::size_t i = decided[j];
    if (j == 0 || keys[decided[j - 1]] != keys[i] || *codes[decided[j - 1]] != *codes[i]) {
      groups.push_back({{}, codes[i]});
    }
    groups.back().members.push_back(vertices[i]);
  }
  for (auto& group : groups) std::sort(group.members.begin(), group.members.end());
  std::sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
    if (a.members.size() != b.members.size()) return a.members.size() > b.members.size();
    return a.members.front() < b.members.front();
  });
  std::sort(undecided->begin(), undecided->end());
  return groups;
}

// Cheap rooted-isomorphism invariant of an egonet.
struct EgonetKey {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t root_degree = 0;
  std::vector<std::uint32_t> degrees;

  friend auto operator<=>(const EgonetKey&, const EgonetKey&) = default;
  friend bool operator==(const EgonetKey&, const EgonetKey&) = default;
};

EgonetKey KeyOf(const RootedGraph& rg) {
  const Graph& eg = rg.graph();
  EgonetKey key{eg.num_vertices(), eg.num_edges(), eg.degree(rg.root()), {}};
  key.degrees.resize(eg.num_vertices());
  for (Vertex v = 0; v < eg.num_vertices(); ++v) {
    key.degrees[v] = static_cast<std::uint32_t>(eg.degree(v));
  }
  std::sort(key.degrees.begin(), key.degrees.end());
  return key;
}

// Only vertices sharing a key can be symmetric. Key groups are examined in
// key order and the search stops at the first group holding two vertices
// with equal codes; the witness is that group's first such pair.
template <typename Key>
SymmetryVerdict VerdictFromKeys(const Graph& g, Locality locality, const std::vector<Key>& keys,
                                const SymmetryOptions& options) {
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return keys[a] < keys[b]; });

  SymmetryVerdict verdict;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i + 1;
    while (j < n && keys[order[j]] == keys[order[i]]) ++j;
    if (j - i >= 2) {
      const std::span<const Vertex> members(order.data() + i, j - i);
      const std::vector<Key> member_keys(j - i, keys[order[i]]);
      std::vector<Vertex> undecided;
      auto groups = GroupByCode<Key>(members, member_keys,
                                     CodesFor(g, members, locality, options), &undecided);
      verdict.undecided_vertices.insert(verdict.undecided_vertices.end(), undecided.begin(),
                                        undecided.end());
      if (groups.front().members.size() >= 2) {
        std::sort(verdict.undecided_vertices.begin(), verdict.undecided_vertices.end());
        verdict.status = Verdict::kSymmetric;
        verdict.witness = {groups.front().members[0], groups.front().members[1]};
        return verdict;
      }
    }
    i = j;
  }
  std::sort(verdict.undecided_vertices.begin(), verdict.undecided_vertices.end());
  if (!verdict.undecided_vertices.empty()) verdict.status = Verdict::kUndecided;
  return verdict;
}

void CheckPair(const Graph& g, Vertex v1, Vertex v2) {
  if (v1 >= g.num_vertices() || v2 >= g.num_vertices()) {
    throw VertexOutOfRange("vertex out of range for graph of order " +
                           std::to_string(g.num_vertices()));
  }
  if (v1 == v2) throw InvalidArgument("symmetry pair queries need distinct vertices");
}

}  // namespace

std::string Locality::ToString() const {
  return global_ ? "global" : std::to_string(k_);
}

std::string_view ToString(Verdict verdict) {
  switch (verdict) {
    case Verdict::kAsymmetric:
      return "asymmetric";
    case Verdict::kSymmetric:
      return "symmetric";
    case Verdict::kUndecided:
      return "undecided";
  }
  return "undecided";
}

RootedGraph Egonet(const Graph& g, Vertex v, std::size_t k) {
  auto sub = ClosedKNeighborhood(g, VertexSet::Single(v, g.num_vertices()), k);
  const auto root = static_cast<Vertex>(sub.LocalIndex(v));
  return RootedGraph(std::move(sub.graph), root);
}

RootedGraph RootedAt(const Graph& g, Vertex v) { return RootedGraph(g, v); }

Verdict PairSymmetry(const Graph& g, Vertex v1, Vertex v2, Locality locality,
                     const SymmetryOptions& options) {
  CheckPair(g, v1, v2);
  if (!locality.is_global() && locality.k() == 0) return Verdict::kSymmetric;
  try {
    const bool iso = RootedIsomorphic(Subject(g, v1, locality), Subject(g, v2, locality),
                                      options.canonical);
    return iso ? Verdict::kSymmetric : Verdict::kAsymmetric;
  } catch (const BudgetExceeded&) {
    return Verdict::kUndecided;
  }
}

Verdict KLocallySymmetric(const Graph& g, Vertex v1, Vertex v2, std::size_t k,
                          const SymmetryOptions& options) {
  return PairSymmetry(g, v1, v2, Locality::Order(k), options);
}

Verdict GloballySymmetricPair(const Graph& g, Vertex v1, Vertex v2,
                              const SymmetryOptions& options) {
  return PairSymmetry(g, v1, v2, Locality::Global(), options);
}

std::vector<std::size_t> SymmetryClassPartition::ClassOf() const {
  std::vector<std::size_t> class_of(n, 0);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (Vertex v : classes[c]) class_of[v] = c;
  }
  return class_of;
}

SymmetryClassPartition SymmetryPartition(const Graph& g, Locality locality,
                                         const SymmetryOptions& options) {
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  const std::vector<char> no_keys(n, 0);

  SymmetryClassPartition partition;
  partition.locality = locality;
  partition.n = n;
  auto groups = GroupByCode<char>(all, no_keys, CodesFor(g, all, locality, options),
                                  &partition.undecided);
  for (auto& group : groups) {
    partition.classes.push_back(std::move(group.members));
    partition.codes.push_back(std::move(group.code));
  }
  return partition;
}

std::string PartitionToJson(const SymmetryClassPartition& partition, int indent) {
  nlohmann::ordered_json doc;
  if (partition.locality.is_global()) {
    doc["k"] = "global";
  } else {
    doc["k"] = partition.locality.k();
  }
  doc["n"] = partition.n;
  doc["classes"] = partition.classes;
  doc["undecided"] = partition.undecided;
  auto codes = nlohmann::ordered_json::array();
  for (const auto& code : partition.codes) {
    if (code) {
      codes.push_back(code->ToHex());
    } else {
      codes.push_back(nullptr);
    }
  }
  doc["codes"] = std::move(codes);
  return doc.dump(indent);
}

SymmetryVerdict GraphKLocallySymmetric(const Graph& g, std::size_t k,
                                       const SymmetryOptions& options) {
  const std::size_t n = g.num_vertices();
  if (n < 2) return {};
  if (k == 0) return {Verdict::kSymmetric, std::pair<Vertex, Vertex>{0, 1}, {}};

  if (k == 1 && options.star_fast_path) {
    // Star egonets of equal size are rooted-isomorphic.
    std::unordered_map<std::size_t, Vertex> first_star_of_degree;
    for (Vertex v = 0; v < n; ++v) {
      if (!PeripheralEdgeFree(g, v)) continue;
      auto [it, inserted] = first_star_of_degree.emplace(g.degree(v), v);
      if (!inserted) return {Verdict::kSymmetric, std::pair<Vertex, Vertex>{it->second, v}, {}};
    }
  }

  std::vector<EgonetKey> keys(n);
  ParallelFor(n, options.threads, [&](std::size_t v) {
    keys[v] = KeyOf(Egonet(g, static_cast<Vertex>(v), k));
  });
  return VerdictFromKeys(g, Locality::Order(k), keys, options);
}

SymmetryVerdict GraphGloballySymmetric(const Graph& g, const SymmetryOptions& options) {
  const std::size_t n = g.num_vertices();
  if (n < 2) return {};
  // Stable 1-WL colors are preserved by automorphisms.
  const Coloring stable = RefineUnrooted(g, Coloring(std::vector<std::uint32_t>(n, 0)));
  const std::vector<std::uint32_t> keys(stable.colors().begin(), stable.colors().end());
  return VerdictFromKeys(g, Locality::Global(), keys, options);
}

SymmetryVerdict GraphSymmetry(const Graph& g, Locality locality,
                              const SymmetryOptions& options) {
  return locality.is_global() ? GraphGloballySymmetric(g, options)
                              : GraphKLocallySymmetric(g, locality.k(), options);
}

}  // namespace localsym
