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

#include "localsym/canonical.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "localsym/errors.hpp"

namespace localsym {
namespace {

constexpr std::uint64_t SplitMix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t Mix(std::uint64_t h, std::uint64_t x) {
  return SplitMix(h ^ SplitMix(x));
}

// 1-dimensional color refinement over a fixed graph, reusing scratch
// buffers across calls.
class Refiner {
 public:
  explicit Refiner(const Graph& g)
      : g_(g),
        order_(g.num_vertices()),
        sig_offsets_(g.num_vertices() + 1),
        sig_colors_(2 * g.num_edges()),
        next_(g.num_vertices()) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      sig_offsets_[v + 1] = sig_offsets_[v] + g.degree(v);
    }
  }

  // Refines `colors` (contiguous ids) in place to the coarsest equitable
  // refinement. Returns a hash of the refinement trace, which depends only
  // on the isomorphism class of (graph, coloring).
  std::uint64_t Run(std::vector<std::uint32_t>& colors, std::uint32_t& num_colors) {
    const std::size_t n = g_.num_vertices();
    std::uint64_t trace = Mix(0x6c6f63616c73796dULL, num_colors);
    while (true) {
      for (Vertex v = 0; v < n; ++v) {
        auto* first = sig_colors_.data() + sig_offsets_[v];
        std::size_t i = 0;
        for (Vertex w : g_.neighbors(v)) first[i++] = colors[w];
        std::sort(first, first + i);
      }
      std::iota(order_.begin(), order_.end(), Vertex{0});
      std::sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
        if (colors[a] != colors[b]) return colors[a] < colors[b];
        return std::lexicographical_compare(Sig(a).begin(), Sig(a).end(),
                                            Sig(b).begin(), Sig(b).end());
      });
      std::uint32_t count = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = order_[i];
        if (i == 0 || !SameSignature(order_[i - 1], v, colors)) {
          ++count;
          trace = Mix(trace, colors[v]);
          for (std::uint32_t c : Sig(v)) trace = Mix(trace, c);
        }
        next_[v] = count - 1;
      }
      trace = Mix(trace, count);
      const bool stable = count == num_colors;
      colors.swap(next_);
      num_colors = count;
      if (stable) return trace;
    }
  }

 private:
  std::span<const std::uint32_t> Sig(Vertex v) const {
    return {sig_colors_.data() + sig_offsets_[v],
            sig_offsets_[v + 1] - sig_offsets_[v]};
  }

  bool SameSignature(Vertex a, Vertex b,
                     const std::vector<std::uint32_t>& colors) const {
    if (colors[a] != colors[b]) return false;
    auto sa = Sig(a);
    auto sb = Sig(b);
    return std::equal(sa.begin(), sa.end(), sb.begin(), sb.end());
  }

  const Graph& g_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> sig_offsets_;
  std::vector<std::uint32_t> sig_colors_;
  std::vector<std::uint32_t> next_;
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Vertex{0});
  }
  Vertex Find(Vertex v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  void Union(Vertex a, Vertex b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<Vertex> parent_;
};

void CheckContiguous(std::span<const std::uint32_t> colors, std::size_t* num_colors) {
  std::uint32_t max_color = 0;
  for (auto c : colors) max_color = std::max(max_color, c);
  std::vector<char> used(colors.empty() ? 0 : max_color + 1, 0);
  for (auto c : colors) used[c] = 1;
  if (std::find(used.begin(), used.end(), 0) != used.end()) {
    throw InvalidArgument("coloring ids must form a contiguous range 0..c-1");
  }
  *num_colors = used.size();
}

}  // namespace

RootedGraph::RootedGraph(Graph graph, Vertex root)
    : graph_(std::move(graph)), root_(root) {
  if (root_ >= graph_.num_vertices()) {
    throw VertexOutOfRange("root " + std::to_string(root_) +
                           " out of range for graph of order " +
                           std::to_string(graph_.num_vertices()));
  }
}

Coloring::Coloring(std::vector<std::uint32_t> colors) : colors_(std::move(colors)) {
  CheckContiguous(colors_, &num_colors_);
}

std::vector<std::vector<Vertex>> Coloring::Classes() const {
  std::vector<std::vector<Vertex>> classes(num_colors_);
  for (Vertex v = 0; v < colors_.size(); ++v) classes[colors_[v]].push_back(v);
  return classes;
}

Coloring RootColoring(const RootedGraph& rg) {
  std::vector<std::uint32_t> colors(rg.num_vertices(), 1);
  colors[rg.root()] = 0;
  return Coloring(std::move(colors));
}

Coloring RefineUnrooted(const Graph& g, const Coloring& initial) {
  if (initial.size() != g.num_vertices()) {
    throw InvalidArgument("coloring size does not match graph order");
  }
  std::vector<std::uint32_t> colors(initial.colors().begin(), initial.colors().end());
  auto num_colors = static_cast<std::uint32_t>(initial.num_colors());
  Refiner refiner(g);
  refiner.Run(colors, num_colors);
  return Coloring(std::move(colors));
}

Coloring Refine(const RootedGraph& rg, const Coloring& initial) {
  if (initial.size() != rg.num_vertices()) {
    throw InvalidArgument("coloring size does not match graph order");
  }
  const auto root_color = initial[rg.root()];
  const auto& colors = initial.colors();
  if (std::count(colors.begin(), colors.end(), root_color) != 1) {
    throw InvalidArgument("root must have a singleton initial color");
  }
  return RefineUnrooted(rg.graph(), initial);
}

std::size_t CanonicalCode::BitIndex(std::size_t n, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

bool CanonicalCode::Adjacent(std::size_t i, std::size_t j) const {
  if (i == j || i >= n_ || j >= n_) return false;
  const std::size_t idx = BitIndex(n_, i, j);
  return (words_[idx >> 6] >> (63 - (idx & 63))) & 1U;
}

Graph CanonicalCode::ToGraph() const {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (Adjacent(i, j)) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph::FromEdgeList(edges, n_);
}

std::string CanonicalCode::ToHex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(kFormatVersion);
  out += ':';
  for (int shift = 28; shift >= 0; shift -= 4) out += kDigits[(n_ >> shift) & 0xF];
  const std::size_t bits = n_ < 2 ? 0 : n_ * (n_ - 1) / 2;
  const std::size_t bytes = (bits + 7) / 8;
  for (std::size_t b = 0; b < bytes; ++b) {
    const auto byte = static_cast<unsigned>((words_[b / 8] >> (56 - 8 * (b % 8))) & 0xFF);
    out += kDigits[byte >> 4];
    out += kDigits[byte & 0xF];
  }
  return out;
}

CanonicalCode CanonicalCode::FromHex(std::string_view text) {
  auto fail = [&](const std::string& why) {
    return ParseError("bad canonical code '" + std::string(text) + "': " + why, 0);
  };
  const std::string prefix = std::string(kFormatVersion) + ":";
  if (text.substr(0, prefix.size()) != prefix) throw fail("missing version prefix");
  text.remove_prefix(prefix.size());
  auto nibble = [&](char c) -> std::uint64_t {
    if (c >= '0' && c <= '9') return static_cast<std::uint64_t>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<std::uint64_t>(c - 'a' + 10);
    throw fail("invalid hex digit");
  };
  if (text.size() < 8) throw fail("truncated vertex count");
  CanonicalCode code;
  for (int i = 0; i < 8; ++i) code.n_ = (code.n_ << 4) | nibble(text[static_cast<std::size_t>(i)]);
  text.remove_prefix(8);
  const std::size_t bits = code.n_ < 2 ? 0 : code.n_ * (code.n_ - 1) / 2;
  const std::size_t bytes = (bits + 7) / 8;
  if (text.size() != 2 * bytes) throw fail("bitstring length does not match vertex count");
  code.words_.assign((bits + 63) / 64, 0);
  for (std::size_t b = 0; b < bytes; ++b) {
    const std::uint64_t byte = (nibble(text[2 * b]) << 4) | nibble(text[2 * b + 1]);
    code.words_[b / 8] |= byte << (56 - 8 * (b % 8));
  }
  if (bits % 64 != 0 && !code.words_.empty()) {
    const std::uint64_t tail_mask = ~std::uint64_t{0} >> (bits % 64);
    if (code.words_.back() & tail_mask) throw fail("nonzero padding bits");
  }
  return code;
}

// Depth-first individualization-refinement search.
class CanonicalSearch {
 public:
  CanonicalSearch(const RootedGraph& rg, const CanonicalOptions& options)
      : g_(rg.graph()), n_(g_.num_vertices()), refiner_(g_), options_(options) {}

  CanonicalForm Run(const RootedGraph& rg, CanonicalStats* stats) {
    std::vector<std::uint32_t> colors(n_, 1);
    colors[rg.root()] = 0;
    std::uint32_t num_colors = n_ > 1 ? 2 : 1;
    path_trace_.push_back(refiner_.Run(colors, num_colors));
    Visit(colors, num_colors);
    if (stats != nullptr) *stats = stats_;

    CanonicalForm form;
    form.code.n_ = n_;
    form.code.words_ = std::move(best_.bits);
    form.labeling = std::move(best_.labeling);
    return form;
  }

 private:
  static constexpr std::size_t kNoJump = std::numeric_limits<std::size_t>::max();

  struct Leaf {
    bool valid = false;
    std::vector<std::uint64_t> trace;
    std::vector<std::uint64_t> bits;
    std::vector<Vertex> labeling;  // vertex -> position
    std::vector<Vertex> inverse;   // position -> vertex
    std::vector<Vertex> sequence;
  };

  // Lexicographic comparison of the current path invariants against the
  // same-length prefix of the best leaf's.
  int ComparePathToBest() const {
    const std::size_t len = std::min(path_trace_.size(), best_.trace.size());
    for (std::size_t i = 0; i < len; ++i) {
      if (path_trace_[i] != best_.trace[i]) {
        return path_trace_[i] < best_.trace[i] ? -1 : 1;
      }
    }
    // A best path that is a proper prefix of ours sorts first.
    return path_trace_.size() > best_.trace.size() ? 1 : 0;
  }

  std::vector<std::uint64_t> LeafBits(const std::vector<std::uint32_t>& position) const {
    const std::size_t bits = n_ < 2 ? 0 : n_ * (n_ - 1) / 2;
    std::vector<std::uint64_t> words((bits + 63) / 64, 0);
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : g_.neighbors(u)) {
        if (u < v) {
          const std::size_t idx = CanonicalCode::BitIndex(n_, position[u], position[v]);
          words[idx >> 6] |= std::uint64_t{1} << (63 - (idx & 63));
        }
      }
    }
    return words;
  }

  std::size_t VisitLeaf(const std::vector<std::uint32_t>& position) {
    ++stats_.leaves;
    auto bits = LeafBits(position);
    int cmp = best_.valid ? ComparePathToBest() : -1;
    if (cmp == 0) cmp = bits < best_.bits ? -1 : (bits == best_.bits ? 0 : 1);
    if (cmp < 0) {
      best_.valid = true;
      best_.trace = path_trace_;
      best_.bits = std::move(bits);
      best_.labeling.assign(position.begin(), position.end());
      best_.inverse.assign(n_, 0);
      for (Vertex v = 0; v < n_; ++v) best_.inverse[position[v]] = v;
      best_.sequence = sequence_;
      return kNoJump;
    }
    if (cmp > 0) return kNoJump;

    // Equivalent leaf: position-matching gives an automorphism mapping this
    // branch onto the best leaf's branch, so everything below the deepest
    // common ancestor on our side is already covered.
    std::vector<Vertex> automorphism(n_);
    bool identity = true;
    for (Vertex v = 0; v < n_; ++v) {
      automorphism[v] = best_.inverse[position[v]];
      identity = identity && automorphism[v] == v;
    }
    if (!identity) {
      generators_.push_back(std::move(automorphism));
      ++stats_.automorphisms;
    }
    std::size_t common = 0;
    while (common < sequence_.size() && common < best_.sequence.size() &&
           sequence_[common] == best_.sequence[common]) {
      ++common;
    }
    return common;
  }

  bool FixesSequence(const std::vector<Vertex>& generator) const {
    for (Vertex s : sequence_) {
      if (generator[s] != s) return false;
    }
    return true;
  }

  // Swapping two cellmates with equal open or closed neighborhoods is an
  // automorphism that fixes every individualized vertex, so such twins share
  // an orbit without any search.
  void UnionTwins(const std::vector<Vertex>& cell, UnionFind* orbits) const {
    if (cell.size() < 2) return;
    std::vector<std::pair<std::vector<Vertex>, Vertex>> keys;
    keys.reserve(cell.size());
    for (int closed = 0; closed < 2; ++closed) {
      keys.clear();
      for (Vertex v : cell) {
        auto nb = g_.neighbors(v);
        std::vector<Vertex> key(nb.begin(), nb.end());
        if (closed) key.insert(std::lower_bound(key.begin(), key.end(), v), v);
        keys.emplace_back(std::move(key), v);
      }
      std::sort(keys.begin(), keys.end());
      for (std::size_t i = 1; i < keys.size(); ++i) {
        if (keys[i].first == keys[i - 1].first) {
          orbits->Union(keys[i].second, keys[i - 1].second);
        }
      }
    }
  }

  // Returns kNoJump, or the depth the search should unwind to.
  std::size_t Visit(const std::vector<std::uint32_t>& colors, std::uint32_t num_colors) {
    if (++stats_.nodes > options_.node_budget) {
      throw BudgetExceeded("canonical labeling exceeded node budget of " +
                           std::to_string(options_.node_budget));
    }
    if (best_.valid && ComparePathToBest() > 0) return kNoJump;
    if (num_colors == n_) return VisitLeaf(colors);

    const std::size_t depth = sequence_.size();
    std::vector<std::size_t> cell_size(num_colors, 0);
    for (auto c : colors) ++cell_size[c];
    std::uint32_t target = 0;
    for (std::uint32_t c = 1; c < num_colors; ++c) {
      if (cell_size[c] > cell_size[target]) target = c;
    }

    std::vector<Vertex> cell;
    for (Vertex v = 0; v < n_; ++v) {
      if (colors[v] == target) cell.push_back(v);
    }

    UnionFind orbits(n_);
    UnionTwins(cell, &orbits);
    std::size_t generators_seen = 0;
    std::vector<Vertex> explored;
    std::vector<std::uint32_t> child(n_);
    for (Vertex w : cell) {
      for (; generators_seen < generators_.size(); ++generators_seen) {
        const auto& gen = generators_[generators_seen];
        if (!FixesSequence(gen)) continue;
        for (Vertex v = 0; v < n_; ++v) orbits.Union(v, gen[v]);
      }
      const Vertex rep = orbits.Find(w);
      if (std::any_of(explored.begin(), explored.end(),
                      [&](Vertex e) { return orbits.Find(e) == rep; })) {
        continue;
      }
      explored.push_back(w);

      // Individualize w: it takes the cell's position, its cellmates move
      // one color up along with every later cell.
      for (Vertex v = 0; v < n_; ++v) {
        const auto c = colors[v];
        child[v] = c < target ? c : (c > target || v != w ? c + 1 : c);
      }
      std::uint32_t child_colors = num_colors + 1;
      const std::uint64_t trace = Mix(target, refiner_.Run(child, child_colors));

      sequence_.push_back(w);
      path_trace_.push_back(trace);
      const std::size_t jump = Visit(child, child_colors);
      sequence_.pop_back();
      path_trace_.pop_back();
      if (jump != kNoJump && jump < depth) return jump;
    }
    return kNoJump;
  }

  const Graph& g_;
  const std::size_t n_;
  Refiner refiner_;
  CanonicalOptions options_;
  CanonicalStats stats_;
  Leaf best_;
  std::vector<std::vector<Vertex>> generators_;
  std::vector<std::uint64_t> path_trace_;
  std::vector<Vertex> sequence_;
};

CanonicalForm CanonicalLabeling(const RootedGraph& rg, const CanonicalOptions& options,
                                CanonicalStats* stats) {
  CanonicalSearch search(rg, options);
  return search.Run(rg, stats);
}

CanonicalCode ComputeCanonicalCode(const RootedGraph& rg, const CanonicalOptions& options,
                                   CanonicalStats* stats) {
  return CanonicalLabeling(rg, options, stats).code;
}

bool PassesIsomorphismFilters(const RootedGraph& a, const RootedGraph& b) {
  const Graph& ga = a.graph();
  const Graph& gb = b.graph();
  if (ga.num_vertices() != gb.num_vertices()) return false;
  if (ga.num_edges() != gb.num_edges()) return false;
  if (ga.degree(a.root()) != gb.degree(b.root())) return false;
  auto degrees = [](const Graph& g) {
    std::vector<std::size_t> d(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
  };
  return degrees(ga) == degrees(gb);
}

bool RootedIsomorphic(const RootedGraph& a, const RootedGraph& b,
                      const CanonicalOptions& options) {
  if (!PassesIsomorphismFilters(a, b)) return false;
  return ComputeCanonicalCode(a, options) == ComputeCanonicalCode(b, options);
}

}  // namespace localsym
