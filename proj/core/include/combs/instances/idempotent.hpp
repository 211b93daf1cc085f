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

#include <string>

#include "combs/backend.hpp"

namespace combs {

/// The free commutative monoidal category on one object A and one
/// idempotent f: A -> A. Symmetry is the identity, so naturality of σ
/// forces f ⊗ 1 = 1 ⊗ f and the whole category collapses: an endomorphism
/// of Aⁿ is either the identity or "f somewhere". Words are multisets.
class IdempotentBackend {
 public:
  struct Morphism {
    std::size_t arity = 0;
    bool touched = false;
  };

  explicit IdempotentBackend(std::string object = "A", std::string idem = "f")
      : object_(std::move(object)), idem_(std::move(idem)) {}

  const std::string& object_name() const { return object_; }
  const std::string& idempotent_name() const { return idem_; }

  ObjectWord normalize(const ObjectWord& w) const;
  ObjectWord dom(const Morphism& m) const { return power(m.arity); }
  ObjectWord cod(const Morphism& m) const { return power(m.arity); }
  double tolerance() const { return 0.0; }

  Morphism identity(const ObjectWord& w) const { return {arity(w), false}; }
  Morphism compose(const Morphism& first, const Morphism& second) const;
  Morphism tensor(const Morphism& a, const Morphism& b) const {
    return {a.arity + b.arity, a.touched || b.touched};
  }
  Morphism symmetry(const ObjectWord& x, const ObjectWord& y) const {
    return {arity(x) + arity(y), false};
  }
  bool equal(const Morphism& a, const Morphism& b) const {
    return a.arity == b.arity && a.touched == b.touched;
  }
  Capabilities capabilities() const;

  Morphism generator(const std::string& name) const;
  /// Literal data: true/false for "touched", typed by dom = cod.
  Morphism from_literal(const ObjectWord& dom, const ObjectWord& cod,
                        const nlohmann::json& j) const;
  Term to_term(const Morphism& m) const;
  Signature signature() const;

  ObjectEnumeration enumerate_objects(const Bound& bound) const;
  HomEnumeration<Morphism> enumerate_hom(const ObjectWord& x,
                                         const ObjectWord& y,
                                         const Bound& bound) const;

 private:
  std::size_t arity(const ObjectWord& w) const;
  ObjectWord power(std::size_t n) const;

  std::string object_;
  std::string idem_;
};

}  // namespace combs
