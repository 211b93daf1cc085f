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

#include <charconv>

#include "combs/cli/cli.hpp"

namespace combs::cli {

namespace {

std::size_t parse_count(const std::string& s, const std::string& what) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    fail(ErrorKind::ParseError, what + " must be a non-negative integer, got '" + s + "'");
  return v;
}

double parse_real(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used == s.size() && v >= 0) return v;
  } catch (const std::exception&) {
  }
  fail(ErrorKind::ParseError, what + " must be a non-negative number, got '" + s + "'");
}

AnyBackend make_backend(const std::vector<std::string>& tok) {
  const std::string kind = tok.size() > 1 ? tok[1] : "";
  if (kind == "matrix") {
    const std::string ring = tok.size() > 2 ? tok[2] : "";
    if (ring == "boolean") return BoolMatrices{};
    if (ring == "complex") return ComplexMatrices{};
    if (ring == "rational") return RationalMatrices{};
    fail(ErrorKind::ParseError, "matrix backends are boolean, complex or rational");
  }
  if (kind == "finfun") return FinFunBackend{};
  if (kind == "idempotent")
    return IdempotentBackend(tok.size() > 2 ? tok[2] : "A", tok.size() > 3 ? tok[3] : "f");
  if (kind == "pointed") return PointedBackend(tok.size() > 2 ? tok[2] : "A");
  if (kind == "unitary") return UnitaryBackend{};
  fail(ErrorKind::ParseError, "unknown backend '" + kind +
                                  "' (matrix, finfun, idempotent, pointed, unitary)");
}

/// `f : A -> A B = <literal>`
struct MorphismDecl {
  std::string name;
  ObjectWord dom, cod;
  nlohmann::json literal;
};

MorphismDecl parse_morphism(const std::string& rest) {
  auto halves = split_top(rest, '=');
  if (halves.size() != 2)
    fail(ErrorKind::ParseError, "expected 'morphism NAME : DOM -> COD = LITERAL'");
  const auto colon = halves[0].find(':');
  const auto arrow = halves[0].find("->");
  if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
    fail(ErrorKind::ParseError, "expected 'NAME : DOM -> COD'");
  MorphismDecl d;
  d.name = trim(halves[0].substr(0, colon));
  d.dom = ObjectWord::parse(halves[0].substr(colon + 1, arrow - colon - 1));
  d.cod = ObjectWord::parse(halves[0].substr(arrow + 2));
  try {
    d.literal = nlohmann::json::parse(halves[1]);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("bad literal: ") + e.what());
  }
  return d;
}

}  // namespace

Theory parse_theory(std::string_view text, const std::string& source) {
  std::optional<Theory> th;
  std::optional<double> tolerance;
  Bound bound;
  for (const auto& [line, t] : logical_lines(text, source)) {
    const auto tok = tokenize(t);
    const std::string& verb = tok[0];
    auto where = [&, line = line, t = t](const std::string& word) {
      const auto col = word.empty() ? std::string::npos : t.find(word);
      return source + ":" + std::to_string(line) + ":" +
             std::to_string(col == std::string::npos ? 1 : col + 1) + ": ";
    };
    try {
      auto need = [&](std::size_t n, const char* usage) {
        if (tok.size() != n) fail(ErrorKind::ParseError, std::string("usage: ") + usage);
      };
      if (verb == "backend") {
        if (th) fail(ErrorKind::ParseError, "backend declared twice");
        th = Theory{trim(t.substr(7)), make_backend(tok), {}};
        continue;
      }
      if (verb == "tolerance") {
        need(2, "tolerance X");
        tolerance = parse_real(tok[1], "tolerance");
        if (th)
          std::visit(
              [&](auto& b) {
                if constexpr (requires { b.set_tolerance(1.0); }) b.set_tolerance(*tolerance);
              },
              th->backend);
        continue;
      }
      if (verb == "bound") {
        need(2, "bound N");
        bound.word_length = parse_count(tok[1], "bound");
        continue;
      }
      if (verb == "hom-limit") {
        need(2, "hom-limit N");
        bound.hom_limit = parse_count(tok[1], "hom-limit");
        continue;
      }
      if (!th) fail(ErrorKind::ParseError, "the first declaration must be 'backend ...'");
      std::visit(
          [&](auto& b) {
            using B = std::decay_t<decltype(b)>;
            if (verb == "object") {
              if constexpr (requires { b.add_object(tok[1], std::size_t{}); }) {
                need(3, "object NAME SIZE");
                b.add_object(tok[1], parse_count(tok[2], "object size"));
              } else {
                fail(ErrorKind::ParseError, "this backend has a fixed object");
              }
            } else if (verb == "morphism") {
              if constexpr (requires(MorphismDecl d) {
                              b.add_morphism(d.name, d.dom, d.cod, d.literal);
                            }) {
                const auto d = parse_morphism(t.substr(8));
                b.add_morphism(d.name, d.dom, d.cod, d.literal);
              } else {
                fail(ErrorKind::ParseError, "this backend has fixed generators");
              }
            } else if (verb == "state" || verb == "effect" || verb == "rule") {
              if constexpr (std::is_same_v<B, PointedBackend>) {
                if (verb == "state") {
                  need(2, "state NAME");
                  b.add_state(tok[1]);
                } else if (verb == "effect") {
                  need(2, "effect NAME");
                  b.add_effect(tok[1]);
                } else if (tok.size() == 4 && tok[1] == "cancel") {
                  b.add_cancel(tok[2], tok[3]);
                } else if (tok.size() == 5 && tok[1] == "exchange") {
                  b.add_exchange(tok[2], tok[3], tok[4]);
                } else {
                  fail(ErrorKind::ParseError,
                       "usage: rule cancel EFFECT STATE | rule exchange EFFECT STATE STATE");
                }
              } else {
                fail(ErrorKind::ParseError, "'" + verb + "' needs the pointed backend");
              }
            } else {
              fail(ErrorKind::ParseError, "unknown declaration '" + verb + "'");
            }
          },
          th->backend);
    } catch (const CombsError& e) {
      const std::string at = tok.size() > 1 ? tok[1] : verb;
      fail(e.kind(), where(at) + e.message());
    }
  }
  if (!th) fail(ErrorKind::ParseError, source + ":1:1: missing 'backend' declaration");
  std::visit(
      [&](auto& b) {
        if constexpr (requires { b.set_tolerance(1.0); })
          if (tolerance) b.set_tolerance(*tolerance);
        if constexpr (std::is_same_v<std::decay_t<decltype(b)>, PointedBackend>) {
          try {
            b.check_confluence();
          } catch (const CombsError& e) {
            fail(e.kind(), source + ": " + e.message());
          }
        }
      },
      th->backend);
  th->bound = bound;
  return std::move(*th);
}

}  // namespace combs::cli
