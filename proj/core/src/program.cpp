// Copyright 2026 The combs Authors
//
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

#include <cctype>

#include "combs/cli/cli.hpp"

namespace combs::cli {

std::string trim(std::string_view text) {
  std::size_t a = 0, b = text.size();
  while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
  return std::string(text.substr(a, b - a));
}

namespace {

int depth_delta(char c) {
  if (c == '(' || c == '[' || c == '{') return 1;
  if (c == ')' || c == ']' || c == '}') return -1;
  return 0;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (depth == 0 && std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
      continue;
    }
    depth += depth_delta(c);
    cur += c;
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::vector<std::string> split_top(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  bool in_string = false;
  for (char c : text) {
    if (c == '"') in_string = !in_string;
    if (!in_string) depth += depth_delta(c);
    if (c == sep && depth == 0 && !in_string) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::pair<ObjectWord, ObjectWord> parse_pair(std::string_view text) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    fail(ErrorKind::ParseError, "expected a pair '(A, A')', got '" + t + "'");
  auto parts = split_top(std::string_view(t).substr(1, t.size() - 2), ',');
  if (parts.size() != 2)
    fail(ErrorKind::ParseError, "a pair has two components: '" + t + "'");
  return {ObjectWord::parse(parts[0]), ObjectWord::parse(parts[1])};
}

/// Logical lines: physical lines are joined while brackets are open, so
/// matrix literals may span several lines. Full-line '#' comments and blank
/// lines are dropped.
std::vector<std::pair<std::size_t, std::string>> logical_lines(
    std::string_view text, const std::string& source) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::string cur;
  std::size_t start = 0, line = 0;
  int depth = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++line;
    pos = end + 1;
    const std::string t = trim(raw);
    if (depth == 0 && (t.empty() || t[0] == '#')) {
      if (end == text.size()) break;
      continue;
    }
    if (depth == 0) start = line;
    if (!cur.empty()) cur += ' ';
    cur += t;
    for (char c : t) depth += depth_delta(c);
    if (depth < 0)
      fail(ErrorKind::ParseError,
           source + ":" + std::to_string(line) + ":1: unbalanced closing bracket");
    if (depth == 0) {
      out.emplace_back(start, std::move(cur));
      cur.clear();
    }
    if (end == text.size()) break;
  }
  if (depth != 0)
    fail(ErrorKind::ParseError,
         source + ":" + std::to_string(start) + ":1: unclosed bracket");
  return out;
}

std::vector<Statement> parse_program(std::string_view text,
                                     const std::string& source) {
  std::vector<Statement> out;
  for (auto& [line, t] : logical_lines(text, source)) {
    Statement s;
    s.line = line;
    s.text = t;
    auto halves = split_top(t, '=');
    if (halves.size() > 2)
      fail(ErrorKind::ParseError,
           source + ":" + std::to_string(line) + ":1: more than one '='");
    s.head = tokenize(halves[0]);
    if (halves.size() == 2) s.bodies = split_top(halves[1], '|');
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace combs::cli
