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

#include <optional>
#include <string>

#include "combs/backend.hpp"

namespace combs {

/// Boundary of a comb (A, A′) -> (B, B′): the outer pair and the hole.
struct Boundary {
  ObjectWord a, a_prime;
  ObjectWord b, b_prime;

  std::string str() const {
    return "(" + a.str() + ", " + a_prime.str() + ") -> (" + b.str() + ", " +
           b_prime.str() + ")";
  }
};

/// A representative (f, g)_E with f: A -> E B and g: E B′ -> A′.
template <SymmetricMonoidal B>
struct CombRep {
  using M = typename B::Morphism;
  ObjectWord env;
  M f;
  M g;
  Boundary boundary;
};

template <SymmetricMonoidal B>
bool same_boundary(const B& b, const Boundary& x, const Boundary& y) {
  return same_object(b, x.a, y.a) && same_object(b, x.a_prime, y.a_prime) &&
         same_object(b, x.b, y.b) && same_object(b, x.b_prime, y.b_prime);
}

template <SymmetricMonoidal B>
void require_same_boundary(const B& b, const CombRep<B>& c1,
                           const CombRep<B>& c2) {
  if (!same_boundary(b, c1.boundary, c2.boundary))
    fail(ErrorKind::BoundaryMismatch,
         c1.boundary.str() + " vs " + c2.boundary.str());
}

/// Builds a representative, reading B off cod(f) and B′ off dom(g) by
/// removing the environment prefix. Throws BoundaryMismatch when either
/// side does not start with `env`.
template <SymmetricMonoidal B>
CombRep<B> make_comb(const B& b, const ObjectWord& env,
                     const typename B::Morphism& f,
                     const typename B::Morphism& g) {
  auto hole_in = strip_prefix(b, b.cod(f), env);
  auto hole_out = strip_prefix(b, b.dom(g), env);
  if (!hole_in)
    fail(ErrorKind::BoundaryMismatch, "codomain " + b.cod(f).str() +
                                          " of f does not start with " + env.str());
  if (!hole_out)
    fail(ErrorKind::BoundaryMismatch, "domain " + b.dom(g).str() +
                                          " of g does not start with " + env.str());
  return CombRep<B>{env, f, g,
                    Boundary{b.dom(f), b.cod(g), *hole_in, *hole_out}};
}

/// Same, with the hole given explicitly (needed when the environment
/// cannot be read off, e.g. on commutative backends).
template <SymmetricMonoidal B>
CombRep<B> make_comb(const B& b, const ObjectWord& env,
                     const typename B::Morphism& f,
                     const typename B::Morphism& g, const Boundary& boundary) {
  require_type(b, f, boundary.a, env * boundary.b, "f", ErrorKind::BoundaryMismatch);
  require_type(b, g, env * boundary.b_prime, boundary.a_prime, "g",
               ErrorKind::BoundaryMismatch);
  return CombRep<B>{env, f, g, boundary};
}

/// (1_A, 1_A′)_I : (A, A′) -> (A, A′)
template <SymmetricMonoidal B>
CombRep<B> identity_comb(const B& b, const ObjectWord& a,
                         const ObjectWord& a_prime) {
  return CombRep<B>{ObjectWord{}, b.identity(a), b.identity(a_prime),
                    Boundary{a, a_prime, a, a_prime}};
}

/// c1 : (A, A′) -> (B, B′) followed by c2 : (B, B′) -> (C, C′).
template <SymmetricMonoidal B>
CombRep<B> comb_compose(const B& b, const CombRep<B>& c1, const CombRep<B>& c2) {
  if (!same_object(b, c1.boundary.b, c2.boundary.a) ||
      !same_object(b, c1.boundary.b_prime, c2.boundary.a_prime))
    fail(ErrorKind::BoundaryMismatch, "cannot compose " + c1.boundary.str() +
                                          " with " + c2.boundary.str());
  auto f = b.compose(c1.f, b.tensor(b.identity(c1.env), c2.f));
  auto g = b.compose(b.tensor(b.identity(c1.env), c2.g), c1.g);
  return CombRep<B>{c1.env * c2.env, std::move(f), std::move(g),
                    Boundary{c1.boundary.a, c1.boundary.a_prime, c2.boundary.b,
                             c2.boundary.b_prime}};
}

/// Parallel combs: environments are gathered in front, legs interleaved.
template <SymmetricMonoidal B>
CombRep<B> comb_tensor(const B& b, const CombRep<B>& c1, const CombRep<B>& c2) {
  const auto& x = c1.boundary;
  const auto& y = c2.boundary;
  auto f = b.compose(b.tensor(c1.f, c2.f),
                     permute_blocks(b, {c1.env, x.b, c2.env, y.b}, {0, 2, 1, 3}));
  auto g = b.compose(
      permute_blocks(b, {c1.env, c2.env, x.b_prime, y.b_prime}, {0, 2, 1, 3}),
      b.tensor(c1.g, c2.g));
  return CombRep<B>{c1.env * c2.env, std::move(f), std::move(g),
                    Boundary{x.a * y.a, x.a_prime * y.a_prime, x.b * y.b,
                             x.b_prime * y.b_prime}};
}

/// Plugs λ: C B -> D B′ into the hole and returns C A -> D A′:
/// (1_D ⊗ g)(σ_{E,D} ⊗ 1)(1_E ⊗ λ)(σ_{C,E} ⊗ 1)(1_C ⊗ f).
template <SymmetricMonoidal B>
typename B::Morphism extended_eval(const B& b, const CombRep<B>& c,
                                   const typename B::Morphism& lambda,
                                   const ObjectWord& cw, const ObjectWord& dw) {
  const auto& bd = c.boundary;
  require_type(b, lambda, cw * bd.b, dw * bd.b_prime, "probe");
  auto m = b.tensor(b.identity(cw), c.f);
  m = b.compose(m, b.tensor(b.symmetry(cw, c.env), b.identity(bd.b)));
  m = b.compose(m, b.tensor(b.identity(c.env), lambda));
  m = b.compose(m, b.tensor(b.symmetry(c.env, dw), b.identity(bd.b_prime)));
  return b.compose(m, b.tensor(b.identity(dw), c.g));
}

/// As above with C and D read off the probe's type.
template <SymmetricMonoidal B>
typename B::Morphism extended_eval(const B& b, const CombRep<B>& c,
                                   const typename B::Morphism& lambda) {
  auto cw = strip_suffix(b, b.dom(lambda), c.boundary.b);
  auto dw = strip_suffix(b, b.cod(lambda), c.boundary.b_prime);
  if (!cw || !dw)
    fail(ErrorKind::TypeMismatch, "probe " + type_string(b, lambda) +
                                      " does not fit the hole " +
                                      c.boundary.b.str() + " -> " +
                                      c.boundary.b_prime.str());
  return extended_eval(b, c, lambda, *cw, *dw);
}

/// The hole bent round by a symmetry: A B′ -> A′ B,
/// (g ⊗ 1_B)(1_E ⊗ σ_{B,B′})(f ⊗ 1_{B′}).
template <SymmetricMonoidal B>
typename B::Morphism braid_eval(const B& b, const CombRep<B>& c) {
  const auto& bd = c.boundary;
  auto m = b.tensor(c.f, b.identity(bd.b_prime));
  m = b.compose(m, b.tensor(b.identity(c.env), b.symmetry(bd.b, bd.b_prime)));
  return b.compose(m, b.tensor(c.g, b.identity(bd.b)));
}

/// A strict symmetric monoidal functor between two backends.
template <class F, class S, class T>
concept MonoidalFunctor =
    SymmetricMonoidal<S> && SymmetricMonoidal<T> &&
    requires(const F& fn, const typename S::Morphism& m, const ObjectWord& w) {
      { fn.map_object(w) } -> std::same_as<ObjectWord>;
      { fn.map(m) } -> std::same_as<typename T::Morphism>;
    };

template <SymmetricMonoidal B>
struct IdentityFunctor {
  ObjectWord map_object(const ObjectWord& w) const { return w; }
  typename B::Morphism map(const typename B::Morphism& m) const { return m; }
};

/// (f, g)_E |-> (F f, F g)_{F E}. Throws IllTypedFunctor when the images do
/// not form a comb on the image boundary.
template <SymmetricMonoidal S, SymmetricMonoidal T, class F>
  requires MonoidalFunctor<F, S, T>
CombRep<T> lift_functor(const S&, const T& target, const F& fn,
                        const CombRep<S>& c) {
  Boundary bd{fn.map_object(c.boundary.a), fn.map_object(c.boundary.a_prime),
              fn.map_object(c.boundary.b), fn.map_object(c.boundary.b_prime)};
  const ObjectWord env = fn.map_object(c.env);
  try {
    return make_comb(target, env, fn.map(c.f), fn.map(c.g), bd);
  } catch (const CombsError& e) {
    fail(ErrorKind::IllTypedFunctor, e.what());
  }
}

}  // namespace combs
