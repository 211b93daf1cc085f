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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "combs/comb.hpp"

namespace combs {

/// An ordered list of object pairs (A, A′).
using PolyObject = std::vector<std::pair<ObjectWord, ObjectWord>>;

/// (A, A′)* = (A′, A), pairwise.
PolyObject dual(const PolyObject& p);
std::string to_string(const PolyObject& p);
/// ⊗ of the first, respectively second, components.
ObjectWord inputs_of(const PolyObject& p);
ObjectWord outputs_of(const PolyObject& p);

/// An n-comb with holes (A₁, A₁′) ... (Aₙ, Aₙ′) and outer pairs
/// (B₁, B₁′) ... (B_m, B_m′), as the chain
///
///   s₀: ⊗B -> M₁ A₁,  sᵢ: Mᵢ Aᵢ′ -> Mᵢ₊₁ Aᵢ₊₁,  sₙ: Mₙ Aₙ′ -> ⊗B′.
///
/// With no holes it is a single morphism ⊗B -> ⊗B′.
template <SymmetricMonoidal B>
struct PolyCombRep {
  PolyObject holes;
  PolyObject outer;
  std::vector<ObjectWord> envs;
  std::vector<typename B::Morphism> segments;
};

/// Checks the typing chain; throws HoleMismatch naming the first bad
/// segment.
template <SymmetricMonoidal B>
PolyCombRep<B> make_poly(const B& b, PolyObject holes, PolyObject outer,
                         std::vector<ObjectWord> envs,
                         std::vector<typename B::Morphism> segments) {
  const std::size_t n = holes.size();
  if (envs.size() != n || segments.size() != n + 1)
    fail(ErrorKind::HoleMismatch,
         std::to_string(n) + " holes need " + std::to_string(n) +
             " environments and " + std::to_string(n + 1) + " segments");
  for (std::size_t i = 0; i <= n; ++i) {
    const ObjectWord dom = i == 0 ? inputs_of(outer) : envs[i - 1] * holes[i - 1].second;
    const ObjectWord cod = i == n ? outputs_of(outer) : envs[i] * holes[i].first;
    require_type(b, segments[i], dom, cod, "segment " + std::to_string(i),
                 ErrorKind::HoleMismatch);
  }
  return PolyCombRep<B>{std::move(holes), std::move(outer), std::move(envs),
                        std::move(segments)};
}

/// A 1-comb (f, g)_E : (A, A′) -> (B, B′) seen as a polymorphism with outer
/// pair (A, A′) and hole (B, B′).
template <SymmetricMonoidal B>
PolyCombRep<B> comb_as_poly(const CombRep<B>& c) {
  const auto& bd = c.boundary;
  return PolyCombRep<B>{{{bd.b, bd.b_prime}}, {{bd.a, bd.a_prime}}, {c.env},
                        {c.f, c.g}};
}

/// A filler λᵢ: Cᵢ Aᵢ -> Dᵢ Aᵢ′ for hole i.
template <SymmetricMonoidal B>
struct Filler {
  typename B::Morphism lambda;
  ObjectWord c;
  ObjectWord d;
};

/// Runs the chain with every hole filled. Input C₁..Cₙ ⊗B, output
/// D₁..Dₙ ⊗B′. Before filler i the wires are D₍<ᵢ₎ Cᵢ C₍>ᵢ₎ Mᵢ Aᵢ; Cᵢ is
/// moved next to Aᵢ, λᵢ applied, and Dᵢ moved back behind D₍<ᵢ₎ — the
/// same routing as extended_eval for a single hole.
template <SymmetricMonoidal B>
typename B::Morphism poly_extended_eval(const B& b, const PolyCombRep<B>& p,
                                        const std::vector<Filler<B>>& fillers) {
  const std::size_t n = p.holes.size();
  if (fillers.size() != n)
    fail(ErrorKind::TypeMismatch, std::to_string(fillers.size()) +
                                      " fillers for " + std::to_string(n) + " holes");
  ObjectWord done, pending;
  for (const auto& fl : fillers) pending = pending * fl.c;
  auto m = b.tensor(b.identity(pending), p.segments[0]);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& fl = fillers[i];
    const auto& [a, ap] = p.holes[i];
    require_type(b, fl.lambda, fl.c * a, fl.d * ap, "filler " + std::to_string(i + 1));
    ObjectWord later;
    for (std::size_t k = i + 1; k < n; ++k) later = later * fillers[k].c;
    const ObjectWord& env = p.envs[i];
    m = b.compose(m, b.tensor(permute_blocks(b, {done, fl.c, later, env}, {0, 2, 3, 1}),
                              b.identity(a)));
    m = b.compose(m, whisker(b, done * later * env, fl.lambda, ObjectWord{}));
    m = b.compose(m, b.tensor(permute_blocks(b, {done, later, env, fl.d}, {0, 3, 1, 2}),
                              b.identity(ap)));
    done = done * fl.d;
    m = b.compose(m, b.tensor(b.identity(done * later), p.segments[i + 1]));
  }
  return m;
}

namespace detail {

/// The name without the compact closure check: every hole is filled with
/// the symmetry σ_{Aᵢ′, Aᵢ}, then the outer inputs are moved to the front.
template <SymmetricMonoidal B>
typename B::Morphism poly_name_unchecked(const B& b, const PolyCombRep<B>& p) {
  std::vector<Filler<B>> fillers;
  ObjectWord primes;
  for (const auto& [a, ap] : p.holes) {
    fillers.push_back(Filler<B>{b.symmetry(ap, a), ap, a});
    primes = primes * ap;
  }
  return b.compose(b.symmetry(inputs_of(p.outer), primes),
                   poly_extended_eval(b, p, fillers));
}

}  // namespace detail

/// The full-bend normal form (⊗B)(⊗A′) -> (⊗A)(⊗B′). On compact closed
/// backends it classifies polymorphisms up to equivalence. For n = 1 it is
/// braid_eval followed by σ_{A′, B}.
template <SymmetricMonoidal B>
typename B::Morphism poly_name(const B& b, const PolyCombRep<B>& p) {
  if (!b.capabilities().compact_closed)
    fail(ErrorKind::NotCompactClosed, "names classify polymorphisms only with duals");
  return detail::poly_name_unchecked(b, p);
}

template <SymmetricMonoidal B>
bool same_pairs(const B& b, const PolyObject& x, const PolyObject& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!same_object(b, x[i].first, y[i].first) ||
        !same_object(b, x[i].second, y[i].second))
      return false;
  return true;
}

/// Plugs outer pair `k` of `inner` into hole `j` of `outer` (0-based).
/// The inner chain runs inside hole j while the other inner pairs are
/// carried along in the outer environments. Holes of the result: outer
/// holes before j, the inner holes, outer holes after j. Outer pairs:
/// inner pairs before k, the outer pairs, inner pairs after k.
template <SymmetricMonoidal B>
PolyCombRep<B> poly_compose_at(const B& b, const PolyCombRep<B>& outer,
                               const PolyCombRep<B>& inner, std::size_t j,
                               std::size_t k = 0) {
  using M = typename B::Morphism;
  if (j >= outer.holes.size())
    fail(ErrorKind::HoleMismatch, "no hole " + std::to_string(j + 1));
  if (k >= inner.outer.size())
    fail(ErrorKind::HoleMismatch, "no outer pair " + std::to_string(k + 1));
  const auto& [aj, ajp] = outer.holes[j];
  if (!same_object(b, aj, inner.outer[k].first) ||
      !same_object(b, ajp, inner.outer[k].second))
    fail(ErrorKind::HoleMismatch,
         "hole (" + aj.str() + ", " + ajp.str() + ") does not match (" +
             inner.outer[k].first.str() + ", " + inner.outer[k].second.str() + ")");
  const PolyObject pre(inner.outer.begin(), inner.outer.begin() + k);
  const PolyObject post(inner.outer.begin() + k + 1, inner.outer.end());
  const ObjectWord bpre = inputs_of(pre), bpost = inputs_of(post);
  const ObjectWord bpre_p = outputs_of(pre), bpost_p = outputs_of(post);
  const ObjectWord carry = bpre * bpost, carry_p = bpre_p * bpost_p;
  const ObjectWord bo = inputs_of(outer.outer), bo_p = outputs_of(outer.outer);
  const ObjectWord& mj = outer.envs[j];

  PolyCombRep<B> r;
  r.holes.assign(outer.holes.begin(), outer.holes.begin() + j);
  r.holes.insert(r.holes.end(), inner.holes.begin(), inner.holes.end());
  r.holes.insert(r.holes.end(), outer.holes.begin() + j + 1, outer.holes.end());
  r.outer = pre;
  r.outer.insert(r.outer.end(), outer.outer.begin(), outer.outer.end());
  r.outer.insert(r.outer.end(), post.begin(), post.end());

  // Build the chain piece by piece; a hole closes the current segment.
  std::optional<M> cur;
  auto append = [&](M piece) {
    cur = cur ? b.compose(*cur, piece) : std::move(piece);
  };
  auto close = [&](ObjectWord env) {
    r.segments.push_back(*cur);
    r.envs.push_back(std::move(env));
    cur.reset();
  };

  append(permute_blocks(b, {bpre, bo, bpost}, {0, 2, 1}));
  for (std::size_t i = 0; i < j; ++i) {
    append(b.tensor(b.identity(carry), outer.segments[i]));
    close(carry * outer.envs[i]);
  }
  append(b.tensor(b.identity(carry), outer.segments[j]));
  append(permute_blocks(b, {bpre, bpost, mj, aj}, {2, 0, 3, 1}));
  for (std::size_t i = 0; i < inner.holes.size(); ++i) {
    append(b.tensor(b.identity(mj), inner.segments[i]));
    close(mj * inner.envs[i]);
  }
  append(b.tensor(b.identity(mj), inner.segments.back()));
  append(permute_blocks(b, {mj, bpre_p, ajp, bpost_p}, {1, 3, 0, 2}));
  for (std::size_t i = j + 1; i < outer.segments.size(); ++i) {
    append(b.tensor(b.identity(carry_p), outer.segments[i]));
    if (i < outer.holes.size()) close(carry_p * outer.envs[i]);
  }
  append(permute_blocks(b, {bpre_p, bpost_p, bo_p}, {0, 2, 1}));
  r.segments.push_back(*cur);
  return make_poly(b, std::move(r.holes), std::move(r.outer), std::move(r.envs),
                   std::move(r.segments));
}

/// Extensional equivalence of polymorphisms: names on compact closed
/// backends; otherwise filler tuples enumerated up to the bound.
template <SymmetricMonoidal B>
Decision poly_equiv(const B& b, const PolyCombRep<B>& p1, const PolyCombRep<B>& p2,
                    const Bound& bound) {
  if (!same_pairs(b, p1.holes, p2.holes) || !same_pairs(b, p1.outer, p2.outer))
    fail(ErrorKind::BoundaryMismatch, to_string(p1.holes) + " -> " +
                                          to_string(p1.outer) + " vs " +
                                          to_string(p2.holes) + " -> " +
                                          to_string(p2.outer));
  if (b.capabilities().compact_closed) {
    auto l = detail::poly_name_unchecked(b, p1);
    auto r = detail::poly_name_unchecked(b, p2);
    Decision d;
    if (b.equal(l, r)) {
      d = Decision::equivalent("poly/name", b.tolerance());
    } else {
      Witness w{"name", {}};
      w.add("left", render(b, l));
      w.add("right", render(b, r));
      d = Decision::distinct("poly/name", b.tolerance(), std::move(w));
    }
    d.coverage.probes = 1;
    return d;
  }
  if constexpr (Enumerable<B>) {
    const auto caps = b.capabilities();
    const auto words = b.enumerate_objects(bound);
    const std::size_t n = p1.holes.size();
    std::vector<Filler<B>> chosen;
    std::size_t probes = 0;
    bool settled = true, budget = false;
    std::optional<Witness> witness;
    std::function<void(std::size_t)> go = [&](std::size_t i) {
      if (witness || budget) return;
      if (i == n) {
        if (++probes > bound.hom_limit) {
          budget = true;
          return;
        }
        auto l = poly_extended_eval(b, p1, chosen);
        auto r = poly_extended_eval(b, p2, chosen);
        if (!b.equal(l, r)) {
          Witness w{"fillers", {}};
          for (std::size_t h = 0; h < n; ++h) {
            const std::string key = "hole" + std::to_string(h + 1) + ".";
            w.add(key + "C", chosen[h].c.str());
            w.add(key + "D", chosen[h].d.str());
            w.add(key + "lambda", render(b, chosen[h].lambda));
          }
          w.add("left", render(b, l));
          w.add("right", render(b, r));
          witness = std::move(w);
        }
        return;
      }
      const auto& [a, ap] = p1.holes[i];
      for (const auto& cw : words.words)
        for (const auto& dw : words.words) {
          if (caps.length_graded && cw.size() + a.size() != dw.size() + ap.size())
            continue;
          auto hom = b.enumerate_hom(cw * a, dw * ap, bound);
          settled = settled && detail::settles(b, hom) && hom.complete;
          for (const auto& lambda : hom.morphisms) {
            chosen.push_back(Filler<B>{lambda, cw, dw});
            go(i + 1);
            chosen.pop_back();
            if (witness || budget) return;
          }
        }
    };
    go(0);
    Decision d;
    if (witness) {
      d = Decision::distinct("poly/enumerate", b.tolerance(), std::move(*witness));
    } else {
      const bool certified =
          !budget && settled &&
          (words.complete || (caps.extension_saturation &&
                              *caps.extension_saturation <= bound.word_length));
      d = certified ? Decision::equivalent("poly/enumerate", b.tolerance())
                    : Decision::unknown("poly/enumerate", b.tolerance(),
                                        "all probed filler tuples agree");
      d.coverage.truncated = !certified;
    }
    d.coverage.probes = std::min(probes, bound.hom_limit);
    return d;
  } else {
    return Decision::unknown("poly", b.tolerance(),
                             "backend is neither compact closed nor enumerable");
  }
}

/// η: [] -> [(A, A′), (A′, A)], the symmetry A A′ -> A′ A.
template <SymmetricMonoidal B>
PolyCombRep<B> star_unit(const B& b, const ObjectWord& a, const ObjectWord& ap) {
  if (!b.capabilities().compact_closed)
    fail(ErrorKind::NotCompactClosed, "the *-structure needs duals");
  return make_poly(b, {}, {{a, ap}, {ap, a}}, {}, {b.symmetry(a, ap)});
}

/// ε: [(A, A′), (A′, A)] -> [], feeding hole 1's output into hole 2 and
/// hole 2's output back round into hole 1 through a cup and a cap.
template <SymmetricMonoidal B>
PolyCombRep<B> star_counit(const B& b, const ObjectWord& a, const ObjectWord& ap) {
  if constexpr (CompactClosed<B>) {
    if (!b.capabilities().compact_closed)
      fail(ErrorKind::NotCompactClosed, "the *-structure needs duals");
    const ObjectWord as = a.dual();
    return make_poly(b, {{a, ap}, {ap, a}}, {}, {as, as},
                     {b.cup(a), b.identity(as * ap),
                      b.compose(b.symmetry(as, a), b.cap(a))});
  } else {
    fail(ErrorKind::NotCompactClosed, "the *-structure needs duals");
  }
}

/// The identity polymorphism on one pair: holes [(A, A′)], outer [(A, A′)].
template <SymmetricMonoidal B>
PolyCombRep<B> identity_poly(const B& b, const ObjectWord& a, const ObjectWord& ap) {
  return comb_as_poly(identity_comb(b, a, ap));
}

}  // namespace combs
