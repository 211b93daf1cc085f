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

#include <map>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "combs/backend.hpp"

namespace combs {

/// The free symmetric monoidal category on one object A, a set of states
/// I -> A and a set of effects A -> I, modulo two kinds of equations:
///
///   cancel(e, s):        e ∘ s = 1_I
///   exchange(e, s, s'):  s ∘ e = s' ∘ e   (as maps A -> A)
///
/// A morphism Aⁿ -> Aᵐ is stored in normal form: every output is fed by a
/// distinct input or by a state, every unused input ends in an effect, and
/// the closed scalars e ∘ s without a cancel rule are kept as a sorted
/// multiset. An exchange rule lets a state be replaced by its partner
/// whenever an e-node sits elsewhere in the diagram; normal forms pick the
/// least state of the resulting class.
class PointedBackend {
 public:
  struct Morphism {
    std::size_t inputs = 0;
    /// Per output: an input index or a state name.
    std::vector<std::variant<std::size_t, std::string>> outputs;
    /// Per input: the effect ending it, or empty when it is wired through.
    std::vector<std::string> effects;
    /// Sorted (effect, state) scalars.
    std::vector<std::pair<std::string, std::string>> scalars;

    friend bool operator==(const Morphism&, const Morphism&) = default;
  };

  explicit PointedBackend(std::string object = "A") : object_(std::move(object)) {}

  void add_state(const std::string& name);
  void add_effect(const std::string& name);
  void add_cancel(const std::string& effect, const std::string& state);
  void add_exchange(const std::string& effect, const std::string& s1,
                    const std::string& s2);
  /// Overlaps between the rules that would make normal forms ambiguous.
  /// Empty means the rule set is confluent.
  std::vector<std::string> critical_pairs() const;
  /// Throws TypeError listing the critical pairs when there are any.
  void check_confluence() const;

  const std::string& object_name() const { return object_; }
  const std::set<std::string>& states() const { return states_; }
  const std::set<std::string>& effects() const { return effects_; }

  ObjectWord normalize(const ObjectWord& w) const { return w; }
  ObjectWord dom(const Morphism& m) const { return power(m.inputs); }
  ObjectWord cod(const Morphism& m) const { return power(m.outputs.size()); }
  double tolerance() const { return 0.0; }

  Morphism identity(const ObjectWord& w) const;
  Morphism compose(const Morphism& first, const Morphism& second) const;
  Morphism tensor(const Morphism& a, const Morphism& b) const;
  Morphism symmetry(const ObjectWord& x, const ObjectWord& y) const;
  bool equal(const Morphism& a, const Morphism& b) const { return a == b; }
  Capabilities capabilities() const;

  Morphism generator(const std::string& name) const;
  /// Literal data: {"outputs": [index | state, ...],
  ///                "effects": [effect | null, ...],
  ///                "scalars": [[effect, state], ...]}
  Morphism from_literal(const ObjectWord& dom, const ObjectWord& cod,
                        const nlohmann::json& j) const;
  nlohmann::json to_json(const Morphism& m) const;
  Term to_term(const Morphism& m) const;
  Signature signature() const;
  std::string render(const Morphism& m) const;

  /// Canonical representative; every constructor above returns one.
  Morphism canonical(Morphism m) const;

  ObjectEnumeration enumerate_objects(const Bound& bound) const;
  /// Complete exactly when every effect/state pair has a cancel rule, so
  /// no closed scalar survives and hom-sets are finite.
  HomEnumeration<Morphism> enumerate_hom(const ObjectWord& x,
                                         const ObjectWord& y,
                                         const Bound& bound) const;

 private:
  std::size_t arity(const ObjectWord& w) const;
  ObjectWord power(std::size_t n) const;
  bool cancels(const std::string& e, const std::string& s) const {
    return cancel_.count({e, s}) > 0;
  }
  /// The least state reachable from `s` through exchange rules keyed by
  /// any effect in `keys`.
  std::string least_partner(const std::string& s,
                            const std::multiset<std::string>& keys,
                            const std::string& consumer) const;

  std::string object_;
  std::set<std::string> states_;
  std::set<std::string> effects_;
  std::set<std::pair<std::string, std::string>> cancel_;
  /// effect -> undirected exchange edges between states
  std::map<std::string, std::set<std::pair<std::string, std::string>>> exchange_;
};

}  // namespace combs
