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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace combs {

enum class Verdict { Equivalent, Distinct, Unknown };

const char* to_string(Verdict v);

/// Evidence attached to a verdict. Fields hold morphism expressions in the
/// term syntax (see term.hpp) so that they can be parsed back and checked.
struct Witness {
  std::string kind;  // "probe", "braid", "slide-path", "factorization", ...
  std::vector<std::pair<std::string, std::string>> fields;

  void add(std::string key, std::string value) {
    fields.emplace_back(std::move(key), std::move(value));
  }
  const std::string* find(const std::string& key) const;
};

struct Coverage {
  std::size_t probes = 0;
  bool truncated = false;
};

/// Three valued answer of every equivalence check.
///
/// Distinct always carries a witness on which the two sides disagree.
/// Equivalent is only reported when `certified` holds, i.e. the strategy is
/// complete for the backend; a probe strategy that ran out of budget reports
/// Unknown together with its coverage.
struct Decision {
  Verdict verdict = Verdict::Unknown;
  std::string method;
  bool certified = false;
  double tolerance = 0.0;
  std::optional<Witness> witness;
  Coverage coverage;
  std::string note;

  static Decision equivalent(std::string method, double tol) {
    Decision d;
    d.verdict = Verdict::Equivalent;
    d.method = std::move(method);
    d.certified = true;
    d.tolerance = tol;
    return d;
  }
  static Decision distinct(std::string method, double tol, Witness w) {
    Decision d;
    d.verdict = Verdict::Distinct;
    d.method = std::move(method);
    d.certified = true;
    d.tolerance = tol;
    d.witness = std::move(w);
    return d;
  }
  static Decision unknown(std::string method, double tol, std::string note) {
    Decision d;
    d.method = std::move(method);
    d.tolerance = tol;
    d.note = std::move(note);
    return d;
  }
};

}  // namespace combs
