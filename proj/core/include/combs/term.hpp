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

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include <json.hpp>

#include "combs/word.hpp"

namespace combs {

class Term;

namespace term {
struct Generator { std::string name; };
struct Identity { ObjectWord object; };
struct Symmetry { ObjectWord left, right; };
struct Compose;  // first, then second
struct Tensor;
/// A backend specific value, e.g. a dense matrix or a function table.
struct Literal { ObjectWord dom, cod; nlohmann::json data; };
struct Dagger;
struct Cup { ObjectWord object; };      // I -> X* X
struct Cap { ObjectWord object; };      // X X* -> I
struct Copy { ObjectWord object; };     // X -> X X
struct Discard { ObjectWord object; };  // X -> I
}  // namespace term

/// Closed morphism expression. Immutable, cheap to copy.
///
/// Text syntax: `t1 ; t2` is diagrammatic composition (t1 first), `t1 * t2`
/// is tensor and binds tighter. Atoms are generator names, `id(W)`,
/// `sym(W, W)`, `dag(t)`, `cup(W)`, `cap(W)`, `copy(W)`, `del(W)`,
/// `lit(W -> W)<json>` and parenthesised terms. Words are "I" or
/// space separated factor names.
class Term {
 public:
  using Node = std::variant<term::Generator, term::Identity, term::Symmetry,
                            term::Compose, term::Tensor, term::Literal,
                            term::Dagger, term::Cup, term::Cap, term::Copy,
                            term::Discard>;

  static Term generator(std::string name);
  static Term identity(ObjectWord w);
  static Term symmetry(ObjectWord a, ObjectWord b);
  static Term compose(Term first, Term second);
  static Term tensor(Term left, Term right);
  static Term literal(ObjectWord dom, ObjectWord cod, nlohmann::json data);
  static Term dagger(Term inner);
  static Term cup(ObjectWord w);
  static Term cap(ObjectWord w);
  static Term copy(ObjectWord w);
  static Term discard(ObjectWord w);

  static Term parse(std::string_view text);

  const Node& node() const;
  std::string str() const;

 private:
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

namespace term {
struct Compose { Term first, second; };
struct Tensor { Term left, right; };
struct Dagger { Term inner; };
}  // namespace term

inline const Term::Node& Term::node() const { return *node_; }

inline Term operator>>(Term first, Term second) {
  return Term::compose(std::move(first), std::move(second));
}
inline Term operator*(Term left, Term right) {
  return Term::tensor(std::move(left), std::move(right));
}

/// Generator typing table used to compute dom/cod without evaluation.
struct Signature {
  std::map<std::string, std::pair<ObjectWord, ObjectWord>> generators;
  /// Backend word normalisation (identity unless the backend is commutative).
  std::function<ObjectWord(const ObjectWord&)> normalize =
      [](const ObjectWord& w) { return w; };
};

/// Returns (dom, cod). Throws UnknownGenerator or TypeMismatch naming the
/// offending sub-term.
std::pair<ObjectWord, ObjectWord> infer_type(const Term& t,
                                             const Signature& sig);

/// Adjacent-swap decomposition of a block permutation. The result maps
/// blocks[0] ... blocks[n-1] to blocks[order[0]] ... blocks[order[n-1]].
Term permutation_term(const std::vector<ObjectWord>& blocks,
                      const std::vector<std::size_t>& order);

}  // namespace combs
