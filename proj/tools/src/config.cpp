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

#include "localsym_cli/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "localsym/errors.hpp"

namespace localsym::cli {
namespace {

// A value token with the column it starts at.
struct Token {
  std::string_view text;
  std::size_t column = 0;
};

struct Entry {
  std::vector<Token> values;
  std::size_t line = 0;
  std::size_t key_column = 0;
};

[[noreturn]] void Fail(std::size_t line, std::size_t column, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                       what,
                   line, column);
}

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Trims blanks, moving `column` (1-based, of text[0]) along.
std::string_view Trim(std::string_view text, std::size_t* column) {
  while (!text.empty() && IsSpace(text.front())) {
    text.remove_prefix(1);
    ++*column;
  }
  while (!text.empty() && IsSpace(text.back())) text.remove_suffix(1);
  return text;
}

std::vector<Token> SplitList(std::string_view text, std::size_t column, std::size_t line) {
  std::vector<Token> tokens;
  while (true) {
    const std::size_t comma = text.find(',');
    std::size_t token_column = column;
    const std::string_view piece = Trim(text.substr(0, comma), &token_column);
    if (piece.empty()) Fail(line, token_column, "empty value");
    tokens.push_back({piece, token_column});
    if (comma == std::string_view::npos) break;
    column += comma + 1;
    text.remove_prefix(comma + 1);
  }
  return tokens;
}

template <typename T>
T ParseNumber(const Token& token, std::size_t line) {
  T value{};
  const char* end = token.text.data() + token.text.size();
  auto [ptr, ec] = std::from_chars(token.text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    Fail(line, token.column, "invalid number '" + std::string(token.text) + "'");
  }
  return value;
}

bool ParseBool(const Token& token, std::size_t line) {
  if (token.text == "true") return true;
  if (token.text == "false") return false;
  Fail(line, token.column, "expected true or false, got '" + std::string(token.text) + "'");
}

class Section {
 public:
  Section(std::set<std::string_view> allowed, std::string name)
      : allowed_(std::move(allowed)), name_(std::move(name)) {}

  void Add(std::string_view key, Entry entry) {
    if (!allowed_.count(key)) {
      Fail(entry.line, entry.key_column, "unknown key '" + std::string(key) + "' in " + name_);
    }
    if (entries_.count(key)) {
      Fail(entry.line, entry.key_column, "duplicate key '" + std::string(key) + "' in " + name_);
    }
    entries_.emplace(key, std::move(entry));
  }

  const Entry* Find(std::string_view key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
  }

  // The single value of `key`, or nullptr when absent.
  const Token* Scalar(std::string_view key) const {
    const Entry* entry = Find(key);
    if (entry == nullptr) return nullptr;
    if (entry->values.size() != 1) {
      Fail(entry->line, entry->values[1].column, "'" + std::string(key) + "' takes one value");
    }
    return &entry->values.front();
  }

  const std::string& name() const { return name_; }
  std::size_t line = 0;

 private:
  std::set<std::string_view> allowed_;
  std::string name_;
  std::map<std::string_view, Entry, std::less<>> entries_;
};

const std::set<std::string_view> kTopKeys = {
    "mode", "samples", "k", "seed", "budget", "c", "delta", "epsilon",
    "star_fast_path", "threads", "n", "alpha", "p"};
const std::set<std::string_view> kCellKeys = {"n", "alpha", "p"};

// Checks a finished cell against the grid rules with a diagnostic at the
// cell's first key.
void CheckCell(const CellSpec& cell, double c, std::size_t line, std::size_t column) {
  try {
    ResolveP(cell, c);
  } catch (const InvalidArgument& e) {
    Fail(line, column, e.what());
  }
}

}  // namespace

ExperimentSpec ParseExperimentConfig(std::istream& in) {
  // Lines must outlive the string_views held in sections.
  std::vector<std::string> lines;
  for (std::string text; std::getline(in, text);) lines.push_back(std::move(text));

  Section top(kTopKeys, "top level");
  std::vector<Section> cells;
  std::set<std::string> section_names;

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line = i + 1;
    std::string_view text = lines[i];
    if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    std::size_t column = 1;
    text = Trim(text, &column);
    if (text.empty()) continue;

    if (text.front() == '[') {
      if (text.back() != ']') Fail(line, column + text.size() - 1, "expected ']'");
      std::size_t name_column = column + 1;
      const std::string_view name = Trim(text.substr(1, text.size() - 2), &name_column);
      const std::string_view suffix = name.substr(std::min<std::size_t>(5, name.size()));
      std::size_t index = 0;
      if (name.substr(0, 5) != "cell." || suffix.empty() ||
          std::from_chars(suffix.data(), suffix.data() + suffix.size(), index).ptr !=
              suffix.data() + suffix.size()) {
        Fail(line, name_column, "unknown section '" + std::string(name) + "', expected [cell.N]");
      }
      if (!section_names.insert(std::string(name)).second) {
        Fail(line, name_column, "duplicate section [" + std::string(name) + "]");
      }
      cells.emplace_back(kCellKeys, "[" + std::string(name) + "]");
      cells.back().line = line;
      continue;
    }

    const auto eq = text.find('=');
    if (eq == std::string_view::npos) Fail(line, column, "expected 'key = value'");
    std::size_t key_column = column;
    const std::string_view key = Trim(text.substr(0, eq), &key_column);
    if (key.empty()) Fail(line, column, "missing key before '='");
    Entry entry;
    entry.line = line;
    entry.key_column = key_column;
    entry.values = SplitList(text.substr(eq + 1), column + eq + 1, line);
    (cells.empty() ? top : cells.back()).Add(key, std::move(entry));
  }

  ExperimentSpec spec;
  if (const Token* t = top.Scalar("mode")) {
    const auto mode = ParseExperimentMode(t->text);
    if (!mode) Fail(top.Find("mode")->line, t->column, "unknown mode '" + std::string(t->text) + "'");
    spec.mode = *mode;
  }
  auto number = [&](std::string_view key, auto* target) {
    if (const Token* t = top.Scalar(key)) {
      *target = ParseNumber<std::remove_pointer_t<decltype(target)>>(*t, top.Find(key)->line);
    }
  };
  number("samples", &spec.samples);
  number("k", &spec.k);
  number("seed", &spec.base_seed);
  number("budget", &spec.budget);
  number("c", &spec.c);
  number("delta", &spec.delta);
  number("epsilon", &spec.epsilon);
  number("threads", &spec.threads);
  if (const Token* t = top.Scalar("star_fast_path")) {
    spec.star_fast_path = ParseBool(*t, top.Find("star_fast_path")->line);
  }

  auto at = [](const Entry* entry) { return std::pair{entry->line, entry->key_column}; };
  auto check_scalar = [&](bool ok, const Entry* entry, const std::string& what) {
    if (!ok) {
      const auto [l, c] = at(entry);
      Fail(l, c, what);
    }
  };
  auto spec_failure = [&](const Entry* entry, const char* what) {
    const auto [l, c] = at(entry);
    Fail(l, c, what);
  };
  if (spec.samples < 1) spec_failure(top.Find("samples"), "samples must be >= 1");
  if (spec.budget < 1) spec_failure(top.Find("budget"), "budget must be >= 1");
  if (top.Find("c") && !(spec.c > 0)) spec_failure(top.Find("c"), "c must be positive");
  if (top.Find("delta")) {
    check_scalar(spec.delta > 0 && spec.delta < 1, top.Find("delta"), "delta must lie in (0, 1)");
  }
  if (top.Find("epsilon")) {
    check_scalar(spec.epsilon > 0 && spec.epsilon < 0.5, top.Find("epsilon"),
                 "epsilon must lie in (0, 1/2)");
  }

  const Entry* ns = top.Find("n");
  const Entry* alphas = top.Find("alpha");
  const Entry* ps = top.Find("p");
  if (alphas && ps) spec_failure(ps, "give either alpha or p at top level, not both");
  if ((alphas || ps) && !ns) spec_failure(alphas ? alphas : ps, "grid needs an n list");
  if (ns && !alphas && !ps) spec_failure(ns, "grid needs an alpha or p list");
  if (ns) {
    const Entry* axis = alphas ? alphas : ps;
    for (const Token& nt : ns->values) {
      const auto n = ParseNumber<std::size_t>(nt, ns->line);
      for (const Token& vt : axis->values) {
        CellSpec cell;
        cell.n = n;
        const double value = ParseNumber<double>(vt, axis->line);
        (alphas ? cell.alpha : cell.p) = value;
        CheckCell(cell, spec.c, axis->line, vt.column);
        spec.cells.push_back(cell);
      }
    }
  }

  for (const Section& section : cells) {
    CellSpec cell;
    const Token* n = section.Scalar("n");
    if (n == nullptr) Fail(section.line, 1, section.name() + " needs n");
    cell.n = ParseNumber<std::size_t>(*n, section.Find("n")->line);
    if (const Token* a = section.Scalar("alpha")) {
      cell.alpha = ParseNumber<double>(*a, section.Find("alpha")->line);
    }
    if (const Token* p = section.Scalar("p")) cell.p = ParseNumber<double>(*p, section.Find("p")->line);
    CheckCell(cell, spec.c, section.Find("n")->line, n->column);
    spec.cells.push_back(cell);
  }

  spec.Validate();
  return spec;
}

ExperimentSpec ParseExperimentConfigFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file " + path.string());
  return ParseExperimentConfig(in);
}

}  // namespace localsym::cli
