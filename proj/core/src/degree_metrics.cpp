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

#include "localsym/degree_metrics.hpp"

#include <algorithm>
#include <string>

#include "localsym/errors.hpp"

namespace localsym {

DegreeFunction DegreeFunction::Of(const Graph& g) {
  std::vector<std::size_t> degrees(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) degrees[v] = g.degree(v);
  std::sort(degrees.begin(), degrees.end());
  DegreeFunction df;
  for (std::size_t d : degrees) {
    if (df.entries_.empty() || df.entries_.back().degree != d) {
      df.entries_.push_back({d, 0});
    }
    ++df.entries_.back().count;
  }
  return df;
}

std::size_t DegreeFunction::operator()(std::size_t degree) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), degree,
                             [](const Entry& e, std::size_t d) { return e.degree < d; });
  return it != entries_.end() && it->degree == degree ? it->count : 0;
}

std::size_t DegreeFunction::total() const {
  std::size_t sum = 0;
  for (const auto& e : entries_) sum += e.count;
  return sum;
}

std::vector<DsedTerm> DsedTerms(const DegreeFunction& a, const DegreeFunction& b) {
  std::vector<DsedTerm> terms;
  auto ia = a.entries().begin();
  auto ib = b.entries().begin();
  while (ia != a.entries().end() || ib != b.entries().end()) {
    DsedTerm t{};
    if (ib == b.entries().end() || (ia != a.entries().end() && ia->degree < ib->degree)) {
      t = {ia->degree, ia->count, 0, 0};
      ++ia;
    } else if (ia == a.entries().end() || ib->degree < ia->degree) {
      t = {ib->degree, 0, ib->count, 0};
      ++ib;
    } else {
      t = {ia->degree, ia->count, ib->count, 0};
      ++ia;
      ++ib;
    }
    t.diff = t.count_a > t.count_b ? t.count_a - t.count_b : t.count_b - t.count_a;
    terms.push_back(t);
  }
  return terms;
}

std::size_t Dsed(const DegreeFunction& a, const DegreeFunction& b) {
  std::size_t total = 0;
  for (const auto& t : DsedTerms(a, b)) total += t.diff;
  return total;
}

std::size_t Dsed(const Graph& a, const Graph& b) {
  return Dsed(DegreeFunction::Of(a), DegreeFunction::Of(b));
}

PartialMapping::PartialMapping(std::vector<Edge> pairs) : pairs_(std::move(pairs)) {
  auto check_unique = [&](auto project, const char* side) {
    std::vector<Vertex> ids;
    ids.reserve(pairs_.size());
    for (const auto& p : pairs_) ids.push_back(project(p));
    std::sort(ids.begin(), ids.end());
    auto dup = std::adjacent_find(ids.begin(), ids.end());
    if (dup != ids.end()) {
      throw InvalidMapping(std::string("mapping is not injective: ") + side + " vertex " +
                           std::to_string(*dup) + " appears twice");
    }
  };
  check_unique([](const Edge& e) { return e.first; }, "source");
  check_unique([](const Edge& e) { return e.second; }, "target");
}

PartialMapping PartialMapping::Identity(std::size_t n) {
  std::vector<Edge> pairs(n);
  for (std::size_t v = 0; v < n; ++v) pairs[v] = {static_cast<Vertex>(v), static_cast<Vertex>(v)};
  return PartialMapping(std::move(pairs));
}

std::size_t DegreeMismatchCount(const Graph& a, const Graph& b, const PartialMapping& f) {
  std::size_t mismatched = 0;
  for (const auto& [v, w] : f.pairs()) {
    if (v >= a.num_vertices() || w >= b.num_vertices()) {
      throw InvalidMapping("mapping pair (" + std::to_string(v) + ", " + std::to_string(w) +
                           ") refers to a vertex outside its graph");
    }
    if (a.degree(v) != b.degree(w)) ++mismatched;
  }
  // A mismatched pair is counted from both sides.
  return 2 * mismatched + (a.num_vertices() - f.size()) + (b.num_vertices() - f.size());
}

namespace {

// Depth-first enumeration of every partial injection: vertex i of `a` is
// either left unmapped or sent to an unused vertex of `b`.
class MismatchEnumerator {
 public:
  MismatchEnumerator(const Graph& a, const Graph& b)
      : a_(a), b_(b), used_(b.num_vertices(), 0) {}

  std::size_t Run() {
    best_ = a_.num_vertices() + b_.num_vertices();
    Recurse(0, 0, 0);
    return best_;
  }

 private:
  void Recurse(Vertex i, std::size_t mapped, std::size_t mismatched) {
    if (i == a_.num_vertices()) {
      const std::size_t delta = 2 * mismatched + (a_.num_vertices() - mapped) +
                                (b_.num_vertices() - mapped);
      best_ = std::min(best_, delta);
      return;
    }
    Recurse(i + 1, mapped, mismatched);
    for (Vertex w = 0; w < b_.num_vertices(); ++w) {
      if (used_[w]) continue;
      used_[w] = 1;
      Recurse(i + 1, mapped + 1, mismatched + (a_.degree(i) != b_.degree(w) ? 1 : 0));
      used_[w] = 0;
    }
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<char> used_;
  std::size_t best_ = 0;
};

}  // namespace

std::size_t MinMismatchBruteForce(const Graph& a, const Graph& b, std::size_t cap) {
  if (a.num_vertices() + b.num_vertices() > cap) {
    throw CapExceeded("brute-force mismatch search limited to " + std::to_string(cap) +
                      " total vertices, got " +
                      std::to_string(a.num_vertices() + b.num_vertices()));
  }
  return MismatchEnumerator(a, b).Run();
}

SubgraphBound SubgraphBoundCheck(const Graph& g, const VertexSet& s) {
  const auto sub = Induced(g, s);
  const std::size_t outside = g.num_vertices() - s.size();
  const std::size_t boundary = BoundaryEdgeCount(g, s);
  return {Dsed(g, sub.graph), outside + boundary, outside + 2 * boundary};
}

}  // namespace localsym
