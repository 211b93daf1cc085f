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
#include <optional>
#include <string>
#include <vector>

#include "combs/backend.hpp"
#include "combs/instances/matrix_backend.hpp"

namespace combs {

/// Finite sets and functions with the cartesian product as tensor.
/// Elements of a word are indexed in mixed radix, first factor most
/// significant; a morphism is its function table.
class FinFunBackend {
 public:
  struct Morphism {
    ObjectWord dom;
    ObjectWord cod;
    std::vector<std::size_t> table;
  };

  void add_object(const std::string& name, std::size_t size);
  void add_morphism(const std::string& name, const ObjectWord& dom,
                    const ObjectWord& cod, const nlohmann::json& table);

  std::size_t size(const ObjectWord& w) const;
  std::vector<std::string> object_generators() const;
  Morphism make(const ObjectWord& dom, const ObjectWord& cod,
                std::vector<std::size_t> table) const;

  ObjectWord normalize(const ObjectWord& w) const { return w; }
  const ObjectWord& dom(const Morphism& m) const { return m.dom; }
  const ObjectWord& cod(const Morphism& m) const { return m.cod; }
  double tolerance() const { return 0.0; }

  Morphism identity(const ObjectWord& w) const;
  Morphism compose(const Morphism& first, const Morphism& second) const;
  Morphism tensor(const Morphism& a, const Morphism& b) const;
  Morphism symmetry(const ObjectWord& x, const ObjectWord& y) const;
  bool equal(const Morphism& a, const Morphism& b) const {
    return a.dom == b.dom && a.cod == b.cod && a.table == b.table;
  }
  Capabilities capabilities() const;

  Morphism generator(const std::string& name) const;
  Morphism from_literal(const ObjectWord& dom, const ObjectWord& cod,
                        const nlohmann::json& j) const;
  Term to_term(const Morphism& m) const;
  Signature signature() const;

  /// X -> X X, x |-> (x, x)
  Morphism copy(const ObjectWord& x) const;
  /// X -> I, the unique map to the one-element set
  Morphism discard(const ObjectWord& x) const;
  /// X Y -> X and X Y -> Y
  Morphism project_left(const ObjectWord& x, const ObjectWord& y) const;
  Morphism project_right(const ObjectWord& x, const ObjectWord& y) const;
  /// The first element as a state I -> X, or nothing when X is empty.
  std::optional<Morphism> inhabitant(const ObjectWord& x) const;

  ObjectEnumeration enumerate_objects(const Bound& bound) const;
  HomEnumeration<Morphism> enumerate_hom(const ObjectWord& x,
                                         const ObjectWord& y,
                                         const Bound& bound) const;

 private:
  std::map<std::string, std::size_t> sizes_;
  std::map<std::string, Morphism> generators_;
};

/// The linearisation functor FinFun -> Boolean matrices: a function becomes
/// its 0/1 graph matrix. Strict symmetric monoidal; objects keep their
/// names with dim = size.
class Linearization {
 public:
  Linearization(const FinFunBackend& source, const BoolMatrices& target)
      : source_(&source), target_(&target) {}

  ObjectWord map_object(const ObjectWord& w) const { return w; }
  BoolMatrices::Morphism map(const FinFunBackend::Morphism& m) const;

 private:
  const FinFunBackend* source_;
  const BoolMatrices* target_;
};

}  // namespace combs
