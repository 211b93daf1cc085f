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

#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "combs/cli/cli.hpp"
#include "combs/comb.hpp"
#include "combs/eval.hpp"

using namespace combs;
using namespace combs::cli;
using Json = nlohmann::json;

namespace {

const char* kIdempotent = "backend idempotent A f\n";

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunOptions json_options() {
  RunOptions o;
  o.format = "json";
  return o;
}

Json run_json(const std::string& theory, const std::string& program,
              RunOptions o = json_options()) {
  const auto r = run(theory, "theory", program, "program", o);
  REQUIRE_MESSAGE(r.exit_code == kOk, r.diagnostics);
  return Json::parse(r.output);
}

const std::vector<std::string> kSamples = {"idempotent", "pointed",  "pointed_exchange",
                                           "cpm_qubit",  "lens",     "unitary",
                                           "boolean"};

// Witness fields holding something other than a morphism expression.
const std::set<std::string> kPlainFields = {"size", "env", "component", "residual", "C", "D"};

bool is_plain(const std::string& key) {
  if (kPlainFields.count(key)) return true;
  const auto dot = key.find('.');
  if (dot == std::string::npos) return false;
  const auto field = key.substr(dot + 1);
  return field == "direction" || field == "env" || field == "C" || field == "D";
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("empty program") {
    const auto r = run(kIdempotent, "t", "", "p", RunOptions{});
    CHECK(r.exit_code == kOk);
    CHECK(r.output.empty());
    const auto j = run_json(kIdempotent, "# only a comment\n");
    CHECK(j["schema"] == "combs-report/1");
    CHECK(j["queries"].empty());
  }

  TEST_CASE("counterexample from the command language") {
    const auto j = run_json(kIdempotent,
                            "comb c1 env I = id(A) | f\n"
                            "comb c2 env I = f | id(A)\n"
                            "equiv comb c1 c2\n"
                            "equiv optic c1 c2\n");
    REQUIRE(j["queries"].size() == 2);
    CHECK(j["queries"][0]["line"] == 3);
    CHECK(j["queries"][0]["query"] == "equiv comb c1 c2");
    CHECK(j["queries"][0]["result"]["decision"]["verdict"] == "Equivalent");
    CHECK(j["queries"][1]["result"]["decision"]["verdict"] == "Distinct");
    CHECK(j["queries"][1]["result"]["decision"]["certified"] == true);
    CHECK_FALSE(j["queries"][0].contains("elapsed_ms"));
  }

  TEST_CASE("decision schema") {
    const auto r = run(kIdempotent, "t", "comb c1 env I = id(A) | f\nequiv optic c1 c1\n", "p",
                       json_options());
    const auto j = nlohmann::ordered_json::parse(r.output);
    const auto& d = j["queries"][0]["result"]["decision"];
    std::vector<std::string> keys;
    for (const auto& [k, v] : d.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"verdict", "method", "certified", "tolerance",
                                           "coverage", "witness"});
    CHECK(d["coverage"].contains("probes"));
    CHECK(d["coverage"].contains("truncated"));
  }

  TEST_CASE("flags override the theory") {
    RunOptions o = json_options();
    o.timing = true;
    o.bound = 1;
    const auto j = run_json(kIdempotent,
                            "comb c1 env I = id(A) | f\n"
                            "equiv comb c1 c1\n",
                            o);
    CHECK(j["queries"][0].contains("elapsed_ms"));
    // Word length 1 gives the extensions I and A only: hom(A, A) and
    // hom(A A, A A) have two elements each.
    CHECK(j["queries"][0]["result"]["decision"]["coverage"]["probes"] == 4);
    o.strategy = "braid";
    const auto r = run(kIdempotent, "t", "comb c1 env I = id(A) | f\nequiv comb c1 c1\n", "p", o);
    CHECK(r.exit_code == kQueryError);
    CHECK(Json::parse(r.output)["queries"][0]["result"]["error"]["kind"] ==
          "IncompatibleStrategy");
  }

  TEST_CASE("errors and exit codes") {
    auto check = [](const std::string& theory, const std::string& program, int code,
                    const std::string& where) {
      CAPTURE(program);
      const auto r = run(theory, "theory", program, "program", RunOptions{});
      CHECK(r.exit_code == code);
      CHECK(r.diagnostics.find(where) != std::string::npos);
    };
    check("backend matrix boolean\nobject X 2\nmorphism n : X -> X = [[0, 1]]\n", "", kInputError,
          "theory:3:");
    check("backend matrix octonion\n", "", kInputError, "theory:1:");
    check("object X 2\n", "", kInputError, "theory:");
    check(kIdempotent, "frobnicate c1\n", kInputError, "program:1:");
    check(kIdempotent, "\ncomb c1 env A A = id(A) | f\n", kInputError, "program:2:");
    check(kIdempotent, "comb c1 env I = id(A) | (f\n", kInputError, "program:1:");
    check(kIdempotent, "comb c1 env I = id(A) | f\nequiv optic c1 nope\n", kQueryError,
          "program:2:");
    check(kIdempotent, "comb c1 env I = id(A) | f\ncpm c1\n", kQueryError, "NotDaggerBackend");
    check("backend pointed A\nstate p\nstate q\neffect e\nrule cancel e p\n"
          "rule exchange e p q\n",
          "", kInputError, "theory");
    const auto usage = run_files("/nonexistent.theory", "/nonexistent.program", RunOptions{});
    CHECK(usage.exit_code == kUsage);
  }

  TEST_CASE("multi-line literals and comments") {
    const auto j = run_json(
        "backend matrix boolean\n"
        "object X 2\n"
        "# a relation\n"
        "morphism r : X -> X = [[1, 0],\n"
        "                       [1, 1]]\n",
        "eval r ; r\n");
    CHECK(j["queries"][0]["result"]["value"] == "lit(X -> X)[[1,0],[1,1]]");
  }

  TEST_CASE("every sample runs cleanly and deterministically") {
    for (const auto& name : kSamples) {
      CAPTURE(name);
      const std::string t = COMBS_SAMPLES_DIR "/" + name + ".theory";
      const std::string p = COMBS_SAMPLES_DIR "/" + name + ".program";
      const auto first = run_files(t, p, json_options());
      const auto second = run_files(t, p, json_options());
      CHECK_MESSAGE(first.exit_code == kOk, first.diagnostics);
      CHECK(first.output == second.output);
    }
  }

  TEST_CASE("witness expressions re-parse and re-evaluate to themselves") {
    std::size_t checked = 0;
    for (const auto& name : kSamples) {
      CAPTURE(name);
      const std::string t = COMBS_SAMPLES_DIR "/" + name + ".theory";
      const std::string p = COMBS_SAMPLES_DIR "/" + name + ".program";
      const auto theory = parse_theory(slurp(t), t);
      const auto report = Json::parse(run_files(t, p, json_options()).output);
      for (const auto& q : report["queries"]) {
        const auto& d = q["result"].value("decision", Json());
        if (!d.is_object() || d["witness"].is_null()) continue;
        for (const auto& [key, value] : d["witness"]["fields"].items()) {
          if (is_plain(key)) continue;
          const auto text = value.get<std::string>();
          CAPTURE(key);
          CAPTURE(text);
          std::visit(
              [&](const auto& b) {
                CHECK(render(b, eval(Term::parse(text), b)) == text);
              },
              theory.backend);
          ++checked;
        }
      }
    }
    CHECK(checked >= 10);
  }

  TEST_CASE("braid witnesses are the names of the compared combs") {
    const std::string t = COMBS_SAMPLES_DIR "/pointed.theory";
    const std::string p = COMBS_SAMPLES_DIR "/pointed.program";
    const auto j = Json::parse(run_files(t, p, json_options()).output);
    Json sigma, name1, name2;
    for (const auto& q : j["queries"]) {
      if (q["query"] == "equiv sigma c1 c2") sigma = q["result"]["decision"];
      if (q["query"] == "name c1") name1 = q["result"]["name"];
      if (q["query"] == "name c2") name2 = q["result"]["name"];
    }
    CHECK(sigma["verdict"] == "Distinct");
    CHECK(sigma["witness"]["fields"]["left"] == name1);
    CHECK(sigma["witness"]["fields"]["right"] == name2);
  }
}
