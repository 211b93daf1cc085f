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

#include "combs/comb_rep.hpp"

namespace combs {

/// The two canonical components of a comb in a cartesian category:
/// get: A -> B and put: A B′ -> A′.
template <SymmetricMonoidal B>
struct LensPair {
  typename B::Morphism get;
  typename B::Morphism put;
};

/// get = (!_E ⊗ 1_B) f and put = g (1_E ⊗ !_B ⊗ 1_B′)(f ⊗ 1_B′).
/// Representative independent: sliding v along E is absorbed by !_E on
/// the get side and cancels on the put side.
template <SymmetricMonoidal B>
LensPair<B> lens_pair(const B& b, const CombRep<B>& c) {
  if constexpr (Cartesian<B>) {
    const auto& bd = c.boundary;
    auto get = b.compose(c.f, b.tensor(b.discard(c.env), b.identity(bd.b)));
    auto put = b.compose(b.tensor(c.f, b.identity(bd.b_prime)),
                         whisker(b, c.env, b.discard(bd.b), bd.b_prime));
    put = b.compose(put, c.g);
    return LensPair<B>{std::move(get), std::move(put)};
  } else {
    fail(ErrorKind::NotCartesian, "lens pairs need copy and discard");
  }
}

/// Whether every object the comb passes through has a global element, the
/// hypothesis under which lens pairs classify combs.
template <SymmetricMonoidal B>
bool comb_inhabited(const B& b, const CombRep<B>& c) {
  if constexpr (Cartesian<B>) {
    const auto& bd = c.boundary;
    for (const auto* w : {&bd.a, &bd.a_prime, &bd.b, &bd.b_prime, &c.env})
      if (!b.inhabitant(*w)) return false;
    return true;
  } else {
    return false;
  }
}

}  // namespace combs
