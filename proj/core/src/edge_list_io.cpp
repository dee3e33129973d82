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

#include "localsym/edge_list_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "localsym/errors.hpp"

namespace localsym {
namespace {

bool IsBlank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Splits a line into whitespace-separated tokens, remembering 1-based
// columns for diagnostics.
struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> Tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && IsBlank(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !IsBlank(line[i])) ++i;
    if (i > start) tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

std::uint64_t ParseId(const Token& token, std::size_t line_no) {
  std::uint64_t value = 0;
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("line " + std::to_string(line_no) + ", column " +
                         std::to_string(token.column) +
                         ": expected a non-negative integer, got '" +
                         std::string(token.text) + "'",
                     line_no, token.column);
  }
  if (value > std::numeric_limits<Vertex>::max() - 1) {
    throw ParseError("line " + std::to_string(line_no) + ": vertex id " +
                         std::string(token.text) + " too large",
                     line_no, token.column);
  }
  return value;
}

}  // namespace

Graph ReadEdgeList(std::istream& in, EdgePolicy policy, BuildStats* stats) {
  std::vector<Edge> edges;
  std::optional<std::uint64_t> declared_n;
  std::uint64_t max_id_plus_one = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = Tokenize(line);
    if (tokens.empty() || tokens[0].text.front() == '#') continue;
    if (tokens[0].text == "n") {
      if (declared_n || !edges.empty()) {
        throw ParseError("line " + std::to_string(line_no) +
                             ": 'n' header must appear once, before any edge",
                         line_no, tokens[0].column);
      }
      if (tokens.size() != 2) {
        throw ParseError("line " + std::to_string(line_no) +
                             ": expected 'n <count>'",
                         line_no, tokens[0].column);
      }
      declared_n = ParseId(tokens[1], line_no);
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) +
                           ": expected two vertex ids, got " +
                           std::to_string(tokens.size()) + " fields",
                       line_no, tokens[0].column);
    }
    const auto a = ParseId(tokens[0], line_no);
    const auto b = ParseId(tokens[1], line_no);
    if (declared_n && (a >= *declared_n || b >= *declared_n)) {
      throw ParseError("line " + std::to_string(line_no) + ": vertex id >= n = " +
                           std::to_string(*declared_n),
                       line_no, a >= *declared_n ? tokens[0].column : tokens[1].column);
    }
    max_id_plus_one = std::max({max_id_plus_one, a + 1, b + 1});
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  const std::size_t n = declared_n ? *declared_n : max_id_plus_one;
  return Graph::FromEdgeList(edges, n, policy, stats);
}

Graph ReadEdgeListFile(const std::filesystem::path& path, EdgePolicy policy,
                       BuildStats* stats) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return ReadEdgeList(in, policy, stats);
}

void WriteEdgeList(std::ostream& out, const Graph& g) {
  out << "n " << g.num_vertices() << '\n';
  for (const auto& [u, v] : g.Edges()) out << u << ' ' << v << '\n';
}

void WriteEdgeListFile(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  WriteEdgeList(out, g);
  if (!out.flush()) throw Error("write failed for " + path.string());
}

}  // namespace localsym
