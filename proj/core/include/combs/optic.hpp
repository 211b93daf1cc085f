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

#include <algorithm>
#include <cstdio>
#include <deque>
#include <type_traits>
#include <optional>
#include <string>
#include <vector>

#include "combs/comb.hpp"
#include "combs/instances/unitary.hpp"

namespace combs {

/// An optic shares its carrier with a comb; only the equivalence differs.
template <SymmetricMonoidal B>
using OpticRep = CombRep<B>;

/// One instance of ((v ⊗ 1) f, g)_{E′} ∼ (f, g (v ⊗ 1))_E with v: E -> E′.
///
/// PushDown moves v off the bottom: the current f must equal (v ⊗ 1) f₀
/// and the result is (f₀, g (v ⊗ 1))_E. PushUp moves v off the top: the
/// current g must equal g₀ (v ⊗ 1) and the result is ((v ⊗ 1) f, g₀)_{E′}.
/// `factor` is f₀ or g₀ respectively.
enum class SlideDirection { PushDown, PushUp };

const char* to_string(SlideDirection d);

template <SymmetricMonoidal B>
struct SlideMove {
  SlideDirection direction;
  typename B::Morphism v;
  typename B::Morphism factor;
};

/// Applies a slide. Throws NonComposableMove when v or the factorisation
/// does not fit the representative.
template <SymmetricMonoidal B>
OpticRep<B> slide(const B& b, const OpticRep<B>& r, const SlideMove<B>& move) {
  const auto& bd = r.boundary;
  const auto& v = move.v;
  if (move.direction == SlideDirection::PushDown) {
    // v : E₀ -> E, f = (v ⊗ 1) f₀
    if (!same_object(b, b.cod(v), r.env))
      fail(ErrorKind::NonComposableMove,
           "v ends in " + b.cod(v).str() + ", environment is " + r.env.str());
    const ObjectWord e0 = b.dom(v);
    if (!same_object(b, b.dom(move.factor), bd.a) ||
        !same_object(b, b.cod(move.factor), e0 * bd.b))
      fail(ErrorKind::NonComposableMove,
           "factor has type " + type_string(b, move.factor) + ", expected " +
               bd.a.str() + " -> " + (e0 * bd.b).str());
    if (!b.equal(b.compose(move.factor, b.tensor(v, b.identity(bd.b))), r.f))
      fail(ErrorKind::NonComposableMove, "f does not factor through v");
    return OpticRep<B>{e0, move.factor,
                       b.compose(b.tensor(v, b.identity(bd.b_prime)), r.g), bd};
  }
  // v : E -> E′, g = g₀ (v ⊗ 1)
  if (!same_object(b, b.dom(v), r.env))
    fail(ErrorKind::NonComposableMove,
         "v starts at " + b.dom(v).str() + ", environment is " + r.env.str());
  const ObjectWord e1 = b.cod(v);
  if (!same_object(b, b.dom(move.factor), e1 * bd.b_prime) ||
      !same_object(b, b.cod(move.factor), bd.a_prime))
    fail(ErrorKind::NonComposableMove,
         "factor has type " + type_string(b, move.factor) + ", expected " +
             (e1 * bd.b_prime).str() + " -> " + bd.a_prime.str());
  if (!b.equal(b.compose(b.tensor(v, b.identity(bd.b_prime)), move.factor), r.g))
    fail(ErrorKind::NonComposableMove, "g does not factor through v");
  return OpticRep<B>{e1, b.compose(r.f, b.tensor(v, b.identity(bd.b))),
                     move.factor, bd};
}

/// The quotient functor Optic -> Comb is the identity on carriers.
template <SymmetricMonoidal B>
CombRep<B> optic_to_comb(const OpticRep<B>& r) {
  return r;
}

template <SymmetricMonoidal B>
bool same_rep(const B& b, const OpticRep<B>& x, const OpticRep<B>& y) {
  return same_object(b, x.env, y.env) && b.equal(x.f, y.f) && b.equal(x.g, y.g);
}

/// Outcome of a breadth-first zigzag search from one representative.
template <SymmetricMonoidal B>
struct ZigzagResult {
  bool connected = false;
  /// Every slide from every reached representative was explored.
  bool exhausted = false;
  std::size_t visited = 0;
  std::vector<std::pair<SlideMove<B>, OpticRep<B>>> path;
};

/// Breadth-first search over slide moves, environments and hom-sets
/// enumerated up to the bound. Finds shortest paths.
template <Enumerable B>
ZigzagResult<B> zigzag_search(const B& b, const OpticRep<B>& from,
                              const OpticRep<B>& to, const Bound& bound,
                              std::size_t max_states = 4096) {
  struct Node {
    OpticRep<B> rep;
    std::optional<std::size_t> parent;
    std::optional<SlideMove<B>> move;
  };
  const auto& bd = from.boundary;
  const auto objects = b.enumerate_objects(bound);
  bool complete = objects.complete;
  const auto caps = b.capabilities();
  std::vector<Node> nodes{{from, std::nullopt, std::nullopt}};
  std::deque<std::size_t> frontier{0};
  ZigzagResult<B> out;

  auto seen = [&](const OpticRep<B>& r) {
    for (const auto& n : nodes)
      if (same_rep(b, n.rep, r)) return true;
    return false;
  };
  auto finish = [&](std::size_t idx) {
    out.connected = true;
    for (std::size_t k = idx; nodes[k].parent; k = *nodes[k].parent)
      out.path.emplace_back(*nodes[k].move, nodes[k].rep);
    std::reverse(out.path.begin(), out.path.end());
  };
  if (same_rep(b, from, to)) {
    finish(0);
    out.visited = 1;
    return out;
  }
  bool budget_hit = false;
  // With length graded hom-sets, environments reachable by slides keep
  // their length, so the enumerated words cover them when the starting
  // environment is short enough.
  if (caps.length_graded && from.env.size() <= bound.word_length) complete = true;

  while (!frontier.empty()) {
    const std::size_t cur = frontier.front();
    frontier.pop_front();
    const OpticRep<B> rep = nodes[cur].rep;
    auto consider = [&](SlideMove<B> move, OpticRep<B> next) -> bool {
      if (seen(next)) return false;
      if (nodes.size() >= max_states) {
        budget_hit = true;
        return false;
      }
      nodes.push_back({std::move(next), cur, std::move(move)});
      if (same_rep(b, nodes.back().rep, to)) {
        finish(nodes.size() - 1);
        return true;
      }
      frontier.push_back(nodes.size() - 1);
      return false;
    };
    for (const auto& other : objects.words) {
      // Push down: f = (v ⊗ 1) f₀ with v: other -> E.
      auto vs = b.enumerate_hom(other, rep.env, bound);
      auto f0s = b.enumerate_hom(bd.a, other * bd.b, bound);
      complete = complete && vs.complete && f0s.complete;
      for (const auto& v : vs.morphisms)
        for (const auto& f0 : f0s.morphisms)
          if (b.equal(b.compose(f0, b.tensor(v, b.identity(bd.b))), rep.f)) {
            SlideMove<B> m{SlideDirection::PushDown, v, f0};
            if (consider(m, slide(b, rep, m))) {
              out.visited = nodes.size();
              return out;
            }
          }
      // Push up: g = g₀ (v ⊗ 1) with v: E -> other.
      auto ws = b.enumerate_hom(rep.env, other, bound);
      auto g0s = b.enumerate_hom(other * bd.b_prime, bd.a_prime, bound);
      complete = complete && ws.complete && g0s.complete;
      for (const auto& v : ws.morphisms)
        for (const auto& g0 : g0s.morphisms)
          if (b.equal(b.compose(b.tensor(v, b.identity(bd.b_prime)), g0), rep.g)) {
            SlideMove<B> m{SlideDirection::PushUp, v, g0};
            if (consider(m, slide(b, rep, m))) {
              out.visited = nodes.size();
              return out;
            }
          }
    }
  }
  out.visited = nodes.size();
  out.exhausted = complete && !budget_hit;
  return out;
}

/// Decides optic equivalence of two unitary combs by factoring
/// U = f₂ f₁† and V = g₁† g₂ as U′ ⊗ 1 and V′ ⊗ 1 and checking V′ U′ = 1.
/// The witness (U′, V′) is the slide realising the equivalence.
inline Decision unitary_comb_factor(const UnitaryBackend& u,
                                    const CombRep<UnitaryBackend>& c1,
                                    const CombRep<UnitaryBackend>& c2) {
  require_same_boundary(u, c1, c2);
  const auto& bd = c1.boundary;
  const std::size_t e1 = u.dim(c1.env), e2 = u.dim(c2.env);
  if (e1 != e2)
    fail(ErrorKind::DimensionMismatch, "environments of dims " +
                                           std::to_string(e1) + " and " +
                                           std::to_string(e2));
  const double tol = u.tolerance();
  const CMatrix uu = c2.f.mat * c1.f.mat.adjoint();
  const CMatrix vv = c1.g.mat.adjoint() * c2.g.mat;
  auto su = tensor_separate(uu, u.dim(bd.b), 10 * tol);
  auto sv = tensor_separate(vv, u.dim(bd.b_prime), 10 * tol);
  if (su && sv) {
    const double inverse =
        (sv->factor * su->factor).distance(CMatrix::identity(e1));
    if (inverse <= 10 * tol) {
      auto d = Decision::equivalent("optic/unitary-factor", tol);
      Witness w{"factorization", {}};
      w.add("U'", Term::literal(c1.env, c2.env, su->factor.to_json()).str());
      w.add("V'", Term::literal(c2.env, c1.env, sv->factor.to_json()).str());
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.3e", std::max(su->residual, sv->residual));
      w.add("residual", buf);
      d.witness = std::move(w);
      return d;
    }
  }
  auto braid = equiv_sigma(u, c1, c2);
  if (braid.verdict == Verdict::Distinct) {
    braid.method = "optic/unitary-factor";
    braid.note = "no separable factorisation; the braid probe differs";
    return braid;
  }
  return Decision::unknown("optic/unitary-factor", tol,
                           "braids agree but the factorisation did not separate "
                           "within tolerance");
}

/// r1 ∼opt r2. Compact closed backends compare names, inhabited cartesian
/// backends compare lens pairs (both complete by the isomorphisms with
/// combs); elsewhere a zigzag of slides is searched for.
template <SymmetricMonoidal B>
Decision equiv_optic(const B& b, const OpticRep<B>& r1, const OpticRep<B>& r2,
                     const Bound& bound) {
  require_same_boundary(b, r1, r2);
  const auto caps = b.capabilities();
  if constexpr (std::is_same_v<B, UnitaryBackend>) {
    return unitary_comb_factor(b, r1, r2);
  }
  if (caps.compact_closed) {
    auto d = equiv_sigma(b, r1, r2);
    d.method = "optic/name";
    if (d.witness) d.witness->kind = "name";
    return d;
  }
  if constexpr (Cartesian<B>) {
    if (comb_inhabited(b, r1) && comb_inhabited(b, r2)) {
      auto d = detail::comb_cartesian(b, r1, r2);
      d.method = "optic/lens";
      return d;
    }
  }
  if constexpr (Enumerable<B>) {
    auto z = zigzag_search(b, r1, r2, bound);
    Decision d;
    if (z.connected) {
      d = Decision::equivalent("optic/zigzag", b.tolerance());
      Witness w{"slide-path", {}};
      for (std::size_t k = 0; k < z.path.size(); ++k) {
        const auto& [m, rep] = z.path[k];
        const std::string p = "step" + std::to_string(k + 1) + ".";
        w.add(p + "direction", to_string(m.direction));
        w.add(p + "v", render(b, m.v));
        w.add(p + "env", rep.env.str());
        w.add(p + "f", render(b, rep.f));
        w.add(p + "g", render(b, rep.g));
      }
      d.witness = std::move(w);
    } else if (z.exhausted) {
      Witness w{"exhausted-component", {}};
      w.add("size", std::to_string(z.visited));
      w.add("env", r1.env.str());
      w.add("f", render(b, r1.f));
      w.add("g", render(b, r1.g));
      d = Decision::distinct("optic/zigzag", b.tolerance(), std::move(w));
      d.note = "the slide class of the left representative is finite and "
               "does not contain the right one";
    } else {
      d = Decision::unknown("optic/zigzag", b.tolerance(),
                            "no slide path found within the bound");
      d.coverage.truncated = true;
    }
    d.coverage.probes = z.visited;
    return d;
  } else {
    return Decision::unknown("optic", b.tolerance(),
                             "backend offers no complete optic invariant and "
                             "cannot enumerate slides");
  }
}

}  // namespace combs
