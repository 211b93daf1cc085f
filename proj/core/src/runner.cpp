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

#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "combs/cli/cli.hpp"
#include "combs/comb.hpp"
#include "combs/cpm.hpp"
#include "combs/eval.hpp"
#include "combs/optic.hpp"
#include "combs/polycomb.hpp"

namespace combs::cli {

namespace {

const std::set<std::string> kDefinitions = {"comb", "dagger", "poly", "unit", "counit"};
const std::set<std::string> kQueries = {"compose", "tensor", "plug", "name", "lens",
                                        "cpm",     "equiv",  "eval"};

using Json = nlohmann::ordered_json;

std::string join(const std::vector<std::string>& tok, std::size_t from,
                 std::size_t to = std::string::npos) {
  std::string s;
  for (std::size_t i = from; i < std::min(to, tok.size()); ++i) {
    if (!s.empty()) s += ' ';
    s += tok[i];
  }
  return s;
}

template <SymmetricMonoidal B>
class Executor {
 public:
  using M = typename B::Morphism;

  Executor(const B& b, Bound bound, std::optional<Strategy> strategy)
      : b_(b), bound_(bound), strategy_(strategy) {}

  void define(const Statement& s) {
    const auto& h = s.head;
    const std::string& verb = h[0];
    if (h.size() < 2) fail(ErrorKind::ParseError, "'" + verb + "' needs a name");
    const std::string& name = h[1];
    if (combs_.count(name) || polys_.count(name))
      fail(ErrorKind::TypeError, "'" + name + "' is already defined");
    if (verb == "comb" || verb == "dagger") {
      ObjectWord env;
      if (h.size() > 2) {
        if (h[2] != "env") fail(ErrorKind::ParseError, "expected 'env' after the name");
        env = ObjectWord::parse(join(h, 3));
      }
      if (verb == "comb") {
        if (s.bodies.size() != 2)
          fail(ErrorKind::ParseError, "usage: comb NAME env E = F | G");
        combs_.emplace(name, make_comb(b_, env, term(s.bodies[0]), term(s.bodies[1])));
      } else {
        if (s.bodies.size() != 1)
          fail(ErrorKind::ParseError, "usage: dagger NAME env E = F");
        if constexpr (Dagger<B>) {
          const M f = term(s.bodies[0]);
          combs_.emplace(name, make_comb(b_, env, f, b_.dagger(f)));
        } else {
          fail(ErrorKind::NotDaggerBackend, "backend has no dagger");
        }
      }
      return;
    }
    if (verb == "unit" || verb == "counit") {
      if (h.size() != 3 || !s.bodies.empty())
        fail(ErrorKind::ParseError, "usage: " + verb + " NAME (A, A')");
      const auto [a, ap] = parse_pair(h[2]);
      polys_.emplace(name, verb == "unit" ? star_unit(b_, a, ap) : star_counit(b_, a, ap));
      return;
    }
    // poly NAME holes (..)* outer (..)* [env M1 | M2 ...] = s0 | s1 ...
    PolyObject holes, outer;
    std::vector<ObjectWord> envs;
    std::size_t i = 2;
    auto pairs = [&](PolyObject& into) {
      while (i < h.size() && !h[i].empty() && h[i][0] == '(') into.push_back(parse_pair(h[i++]));
    };
    if (i < h.size() && h[i] == "holes") ++i, pairs(holes);
    if (i < h.size() && h[i] == "outer") ++i, pairs(outer);
    if (i < h.size() && h[i] == "env") {
      for (const auto& w : split_top(join(h, i + 1), '|')) envs.push_back(ObjectWord::parse(w));
      i = h.size();
    }
    if (i != h.size())
      fail(ErrorKind::ParseError,
           "usage: poly NAME holes (A, A')... outer (B, B')... env M1 | ... = s0 | ...");
    std::vector<M> segments;
    for (const auto& body : s.bodies) segments.push_back(term(body));
    polys_.emplace(name, make_poly(b_, std::move(holes), std::move(outer),
                                   std::move(envs), std::move(segments)));
  }

  Json query(const Statement& s) {
    const auto& h = s.head;
    const std::string& verb = h[0];
    Json out;
    if (verb == "eval") {
      const std::string text = trim(std::string_view(s.text).substr(4));
      const M m = term(text);
      out["type"] = type_string(b_, m);
      out["value"] = render(b_, m);
      return out;
    }
    if (verb == "compose" || verb == "tensor") {
      expect(h, 5, 3, verb + " X Y as Z");
      const auto& x = comb(h[1]);
      const auto& y = comb(h[2]);
      auto c = verb == "compose" ? comb_compose(b_, x, y) : comb_tensor(b_, x, y);
      out["defines"] = h[4];
      out["comb"] = comb_json(c);
      store(h[4], std::move(c));
      return out;
    }
    if (verb == "plug") {
      // plug P Q at J [pair K] as R
      std::size_t pair = 1;
      if (h.size() == 9 && h[5] == "pair") pair = count(h[6]);
      if (!((h.size() == 7 && h[3] == "at" && h[5] == "as") ||
            (h.size() == 9 && h[3] == "at" && h[5] == "pair" && h[7] == "as")))
        fail(ErrorKind::ParseError, "usage: plug P Q at J [pair K] as R");
      const std::size_t at = count(h[4]);
      if (at == 0 || pair == 0) fail(ErrorKind::ParseError, "hole and pair indices start at 1");
      auto p = poly_compose_at(b_, poly(h[1]), poly(h[2]), at - 1, pair - 1);
      const std::string& as = h.back();
      out["defines"] = as;
      out["poly"] = poly_json(p);
      if (combs_.count(as) || polys_.count(as))
        fail(ErrorKind::TypeError, "'" + as + "' is already defined");
      polys_.emplace(as, std::move(p));
      return out;
    }
    if (verb == "name") {
      expect(h, 2, 2, "name X");
      if (combs_.count(h[1])) {
        const M m = braid_eval(b_, comb(h[1]));
        out["type"] = type_string(b_, m);
        out["name"] = render(b_, m);
      } else {
        const M m = poly_name(b_, poly(h[1]));
        out["type"] = type_string(b_, m);
        out["name"] = render(b_, m);
      }
      return out;
    }
    if (verb == "lens") {
      expect(h, 2, 2, "lens X");
      const auto p = lens_pair(b_, comb(h[1]));
      out["get"] = render(b_, p.get);
      out["put"] = render(b_, p.put);
      out["inhabited"] = comb_inhabited(b_, comb(h[1]));
      return out;
    }
    if (verb == "cpm") {
      expect(h, 2, 2, "cpm X");
      if constexpr (std::is_same_v<B, ComplexMatrices>) {
        const auto t = to_cpm(b_, as_dagger_comb(b_, comb(h[1])));
        const auto cp = is_completely_positive(t, b_.tolerance());
        out["vectorization"] = "entry a*d+a' holds rho[a'][a]; transfer = sum_x conj(K_x) (x) K_x";
        out["transfer"] = t.transfer.to_json();
        out["choi_min_eigenvalue"] = cp.min_eigenvalue;
        out["completely_positive"] = cp.completely_positive;
        out["trace_preserving"] = is_trace_preserving(t, b_.tolerance());
        return out;
      } else {
        fail(ErrorKind::NotDaggerBackend, "cpm needs the complex matrix backend");
      }
    }
    // equiv REL X Y [using STRATEGY]
    if (!(h.size() == 4 || (h.size() == 6 && h[4] == "using")))
      fail(ErrorKind::ParseError, "usage: equiv RELATION X Y [using STRATEGY]");
    const std::string& rel = h[1];
    out["relation"] = rel;
    if (rel == "poly") {
      out["decision"] = decision_json(poly_equiv(b_, poly(h[2]), poly(h[3]), bound_));
      return out;
    }
    const auto& x = comb(h[2]);
    const auto& y = comb(h[3]);
    Decision d;
    if (rel == "sigma") {
      d = equiv_sigma(b_, x, y);
    } else if (rel == "tau") {
      d = equiv_tau(b_, x, y, bound_);
    } else if (rel == "comb") {
      const Strategy st = h.size() == 6 ? parse_strategy(h[5]) : strategy();
      out["strategy"] = to_string(st);
      d = equiv_comb(b_, x, y, ProbeSpec{st, bound_});
    } else if (rel == "optic") {
      d = equiv_optic(b_, x, y, bound_);
    } else if (rel == "cpm" || rel == "cpinf") {
      if constexpr (std::is_same_v<B, ComplexMatrices>) {
        const auto dx = as_dagger_comb(b_, x), dy = as_dagger_comb(b_, y);
        d = rel == "cpm" ? cpm_equal(b_, dx, dy) : cpinf_equiv(b_, dx, dy, bound_);
      } else {
        fail(ErrorKind::NotDaggerBackend, rel + " needs the complex matrix backend");
      }
    } else {
      fail(ErrorKind::ParseError, "unknown relation '" + rel +
                                      "' (sigma, tau, comb, optic, cpm, cpinf, poly)");
    }
    out["decision"] = decision_json(d);
    return out;
  }

 private:
  M term(const std::string& text) { return eval(Term::parse(text), b_); }

  const CombRep<B>& comb(const std::string& name) const {
    auto it = combs_.find(name);
    if (it == combs_.end()) fail(ErrorKind::UnknownGenerator, "no comb named '" + name + "'");
    return it->second;
  }

  /// Polymorphisms by name; a 1-comb is read as a polymorphism.
  PolyCombRep<B> poly(const std::string& name) const {
    if (auto it = polys_.find(name); it != polys_.end()) return it->second;
    if (auto it = combs_.find(name); it != combs_.end()) return comb_as_poly(it->second);
    fail(ErrorKind::UnknownGenerator, "no polymorphism named '" + name + "'");
  }

  void store(const std::string& name, CombRep<B> c) {
    if (combs_.count(name) || polys_.count(name))
      fail(ErrorKind::TypeError, "'" + name + "' is already defined");
    combs_.emplace(name, std::move(c));
  }

  Strategy strategy() const {
    if (strategy_) return *strategy_;
    const auto caps = b_.capabilities();
    if (caps.braid_complete) return Strategy::BraidOnly;
    if (caps.cartesian) return Strategy::CartesianPair;
    return Strategy::Enumerate;
  }

  static void expect(const std::vector<std::string>& h, std::size_t n,
                     std::size_t as_at, const std::string& usage) {
    if (h.size() != n || (n == 5 && h[as_at] != "as"))
      fail(ErrorKind::ParseError, "usage: " + usage);
  }

  static std::size_t count(const std::string& s) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(s, &used);
      if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    fail(ErrorKind::ParseError, "expected an index, got '" + s + "'");
  }

  Json comb_json(const CombRep<B>& c) const {
    Json j;
    j["boundary"] = c.boundary.str();
    j["env"] = c.env.str();
    j["f"] = render(b_, c.f);
    j["g"] = render(b_, c.g);
    return j;
  }

  Json poly_json(const PolyCombRep<B>& p) const {
    Json j;
    j["holes"] = to_string(p.holes);
    j["outer"] = to_string(p.outer);
    j["envs"] = Json::array();
    for (const auto& e : p.envs) j["envs"].push_back(e.str());
    j["segments"] = Json::array();
    for (const auto& s : p.segments) j["segments"].push_back(render(b_, s));
    return j;
  }

  const B& b_;
  Bound bound_;
  std::optional<Strategy> strategy_;
  std::map<std::string, CombRep<B>> combs_;
  std::map<std::string, PolyCombRep<B>> polys_;
};

std::string location(const std::string& source, const Statement& s) {
  return source + ":" + std::to_string(s.line) + ":1: ";
}

}  // namespace

RunResult run(std::string_view theory_text, const std::string& theory_name,
              std::string_view program_text, const std::string& program_name,
              const RunOptions& options) {
  RunResult result;
  std::optional<Theory> theory;
  std::vector<Statement> program;
  std::optional<Strategy> strategy;
  try {
    if (options.format != "text" && options.format != "json")
      fail(ErrorKind::ParseError, "--format is text or json");
    if (options.strategy) strategy = parse_strategy(*options.strategy);
    theory = parse_theory(theory_text, theory_name);
    program = parse_program(program_text, program_name);
    for (const auto& s : program) {
      const std::string& verb = s.head.empty() ? std::string() : s.head[0];
      if (!kDefinitions.count(verb) && !kQueries.count(verb))
        fail(ErrorKind::ParseError,
             location(program_name, s) + "unknown statement '" + verb + "'");
    }
  } catch (const CombsError& e) {
    result.exit_code = kInputError;
    result.diagnostics = std::string(e.what()) + "\n";
    return result;
  }
  Bound bound = theory->bound;
  if (options.bound) bound.word_length = *options.bound;
  if (options.hom_limit) bound.hom_limit = *options.hom_limit;

  std::vector<QueryReport> reports;
  bool query_failed = false;
  const bool fatal = std::visit(
      [&](auto& backend) -> bool {
        if constexpr (requires { backend.set_tolerance(1.0); })
          if (options.tolerance) backend.set_tolerance(*options.tolerance);
        Executor ex(backend, bound, strategy);
        for (const auto& s : program) {
          if (kDefinitions.count(s.head[0])) {
            try {
              ex.define(s);
            } catch (const CombsError& e) {
              result.diagnostics += location(program_name, s) + e.what() + "\n";
              return true;
            }
            continue;
          }
          QueryReport r;
          r.line = s.line;
          r.query = s.text;
          const auto start = std::chrono::steady_clock::now();
          try {
            r.result = ex.query(s);
          } catch (const CombsError& e) {
            query_failed = true;
            r.result["error"] = {{"kind", to_string(e.kind())}, {"message", e.message()}};
            result.diagnostics += location(program_name, s) + e.what() + "\n";
          }
          if (options.timing)
            r.elapsed_ms = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - start)
                               .count();
          reports.push_back(std::move(r));
        }
        return false;
      },
      theory->backend);
  if (fatal) {
    result.exit_code = kInputError;
    return result;
  }
  result.output = options.format == "json" ? render_json(reports, theory->kind)
                                           : render_text(reports);
  result.exit_code = query_failed ? kQueryError : kOk;
  return result;
}

RunResult run_files(const std::string& theory_path, const std::string& program_path,
                    const RunOptions& options) {
  auto slurp = [](const std::string& path) -> std::optional<std::string> {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const auto theory = slurp(theory_path);
  const auto program = slurp(program_path);
  if (!theory || !program) {
    RunResult r;
    r.exit_code = kUsage;
    r.diagnostics = "cannot read " + (theory ? program_path : theory_path) + "\n";
    return r;
  }
  return run(*theory, theory_path, *program, program_path, options);
}

}  // namespace combs::cli
