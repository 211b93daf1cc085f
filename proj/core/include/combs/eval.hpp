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

#include <type_traits>
#include <variant>

#include "combs/backend.hpp"
#include "combs/term.hpp"

namespace combs {

/// Denotation of a closed term in a backend. Functorial by construction:
/// compose and tensor nodes evaluate to compose and tensor of values.
/// Throws UnknownGenerator, or TypeMismatch naming the offending sub-term.
template <SymmetricMonoidal B>
typename B::Morphism eval(const Term& t, const B& b) {
  using M = typename B::Morphism;
  const auto& node = t.node();
  if (auto g = std::get_if<term::Generator>(&node)) return b.generator(g->name);
  if (auto i = std::get_if<term::Identity>(&node)) return b.identity(i->object);
  if (auto s = std::get_if<term::Symmetry>(&node))
    return b.symmetry(s->left, s->right);
  if (auto c = std::get_if<term::Compose>(&node)) {
    M first = eval(c->first, b);
    M second = eval(c->second, b);
    if (!same_object(b, b.cod(first), b.dom(second)))
      fail(ErrorKind::TypeMismatch,
           "in '" + t.str() + "': codomain " + b.cod(first).str() +
               " of '" + c->first.str() + "' does not match domain " +
               b.dom(second).str() + " of '" + c->second.str() + "'");
    return b.compose(first, second);
  }
  if (auto p = std::get_if<term::Tensor>(&node))
    return b.tensor(eval(p->left, b), eval(p->right, b));
  if (auto l = std::get_if<term::Literal>(&node))
    return b.from_literal(l->dom, l->cod, l->data);
  if (auto d = std::get_if<term::Dagger>(&node)) {
    if constexpr (Dagger<B>) {
      return b.dagger(eval(d->inner, b));
    } else {
      fail(ErrorKind::NotDaggerBackend, "'" + t.str() + "' needs a dagger");
    }
  }
  if (auto c = std::get_if<term::Cup>(&node)) {
    if constexpr (CompactClosed<B>) {
      return b.cup(c->object);
    } else {
      fail(ErrorKind::NotCompactClosed, "'" + t.str() + "'");
    }
  }
  if (auto c = std::get_if<term::Cap>(&node)) {
    if constexpr (CompactClosed<B>) {
      return b.cap(c->object);
    } else {
      fail(ErrorKind::NotCompactClosed, "'" + t.str() + "'");
    }
  }
  if (auto c = std::get_if<term::Copy>(&node)) {
    if constexpr (Cartesian<B>) {
      return b.copy(c->object);
    } else {
      fail(ErrorKind::NotCartesian, "'" + t.str() + "'");
    }
  }
  if (auto d = std::get_if<term::Discard>(&node)) {
    if constexpr (Cartesian<B>) {
      return b.discard(d->object);
    } else if constexpr (requires { b.discard(d->object); }) {
      return b.discard(d->object);
    } else {
      fail(ErrorKind::NotCartesian, "'" + t.str() + "'");
    }
  }
  fail(ErrorKind::TypeMismatch, "unhandled term '" + t.str() + "'");
}

}  // namespace combs
