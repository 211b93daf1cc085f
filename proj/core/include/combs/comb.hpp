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
#include <vector>

#include "combs/comb_rep.hpp"
#include "combs/decision.hpp"
#include "combs/lens.hpp"

namespace combs {

enum class Strategy { BraidOnly, CartesianPair, Enumerate, PositiveOnly };

const char* to_string(Strategy s);
Strategy parse_strategy(const std::string& text);

/// How equiv_comb probes the hole. `bound` is used by the enumerating
/// strategies only.
struct ProbeSpec {
  Strategy strategy = Strategy::BraidOnly;
  Bound bound;
};

template <SymmetricMonoidal B>
std::string render(const B& b, const typename B::Morphism& m) {
  return b.to_term(m).str();
}

/// Backends that can produce positive probes h†h on an object, together with
/// whether they span its endomorphisms.
template <class B>
concept PositiveProbing =
    SymmetricMonoidal<B> && requires(const B& b, const ObjectWord& w,
                                     const Bound& bound) {
      {
        b.positive_probes(w, bound)
      } -> std::same_as<HomEnumeration<typename B::Morphism>>;
    };

/// c1 ∼σ c2: the braid probe alone.
template <SymmetricMonoidal B>
Decision equiv_sigma(const B& b, const CombRep<B>& c1, const CombRep<B>& c2) {
  require_same_boundary(b, c1, c2);
  auto l = braid_eval(b, c1);
  auto r = braid_eval(b, c2);
  if (b.equal(l, r)) {
    auto d = Decision::equivalent("sigma", b.tolerance());
    d.coverage.probes = 1;
    return d;
  }
  Witness w{"braid", {}};
  w.add("left", render(b, l));
  w.add("right", render(b, r));
  auto d = Decision::distinct("sigma", b.tolerance(), std::move(w));
  d.coverage.probes = 1;
  return d;
}

namespace detail {

struct ProbeOutcome {
  bool distinct = false;
  Witness witness;
};

template <SymmetricMonoidal B>
std::optional<Witness> probe_once(const B& b, const CombRep<B>& c1,
                                  const CombRep<B>& c2,
                                  const typename B::Morphism& lambda,
                                  const ObjectWord& cw, const ObjectWord& dw) {
  auto l = extended_eval(b, c1, lambda, cw, dw);
  auto r = extended_eval(b, c2, lambda, cw, dw);
  if (b.equal(l, r)) return std::nullopt;
  Witness w{"probe", {}};
  w.add("C", cw.str());
  w.add("D", dw.str());
  w.add("lambda", render(b, lambda));
  w.add("left", render(b, l));
  w.add("right", render(b, r));
  return w;
}

/// A hom enumeration settles a "for all λ" when it is exhaustive, or spans
/// the hom-set and the quantity probed is linear in λ.
template <SymmetricMonoidal B>
bool settles(const B& b, const HomEnumeration<typename B::Morphism>& h) {
  return h.complete || (h.spanning && b.capabilities().linear);
}

}  // namespace detail

/// c1 ∼τ c2: every plain probe λ: B -> B′ (no extension).
template <SymmetricMonoidal B>
Decision equiv_tau(const B& b, const CombRep<B>& c1, const CombRep<B>& c2,
                   const Bound& bound) {
  require_same_boundary(b, c1, c2);
  if constexpr (Enumerable<B>) {
    const auto& bd = c1.boundary;
    auto hom = b.enumerate_hom(bd.b, bd.b_prime, bound);
    std::size_t probes = 0;
    for (const auto& lambda : hom.morphisms) {
      ++probes;
      if (auto w = detail::probe_once(b, c1, c2, lambda, {}, {})) {
        auto d = Decision::distinct("tau", b.tolerance(), std::move(*w));
        d.coverage.probes = probes;
        return d;
      }
    }
    Decision d = detail::settles(b, hom)
                     ? Decision::equivalent("tau", b.tolerance())
                     : Decision::unknown("tau", b.tolerance(),
                                         "all " + std::to_string(probes) +
                                             " sampled probes agree; hom(" +
                                             bd.b.str() + ", " + bd.b_prime.str() +
                                             ") was not exhausted");
    d.coverage.probes = probes;
    d.coverage.truncated = !d.certified;
    return d;
  } else {
    fail(ErrorKind::NotEnumerable, "backend cannot enumerate hom-sets");
  }
}

namespace detail {

template <SymmetricMonoidal B>
Decision comb_braid_only(const B& b, const CombRep<B>& c1, const CombRep<B>& c2) {
  if (!b.capabilities().braid_complete)
    fail(ErrorKind::IncompatibleStrategy,
         "the braid probe is only complete on compact closed or unitary backends");
  auto d = equiv_sigma(b, c1, c2);
  d.method = "comb/braid";
  return d;
}

template <SymmetricMonoidal B>
Decision comb_cartesian(const B& b, const CombRep<B>& c1, const CombRep<B>& c2) {
  if constexpr (Cartesian<B>) {
    auto p1 = lens_pair(b, c1);
    auto p2 = lens_pair(b, c2);
    const bool inhabited = comb_inhabited(b, c1) && comb_inhabited(b, c2);
    const bool same = b.equal(p1.get, p2.get) && b.equal(p1.put, p2.put);
    Decision d;
    if (!inhabited) {
      d = Decision::unknown("comb/lens", b.tolerance(),
                            "lens pairs only classify combs over inhabited types");
    } else if (same) {
      d = Decision::equivalent("comb/lens", b.tolerance());
    } else {
      Witness w{"lens", {}};
      const bool get_differs = !b.equal(p1.get, p2.get);
      w.add("component", get_differs ? "get" : "put");
      w.add("left", render(b, get_differs ? p1.get : p1.put));
      w.add("right", render(b, get_differs ? p2.get : p2.put));
      d = Decision::distinct("comb/lens", b.tolerance(), std::move(w));
    }
    d.coverage.probes = 2;
    return d;
  } else {
    fail(ErrorKind::IncompatibleStrategy, "backend is not cartesian");
  }
}

/// Runs the extended probes over every (C, D) pair of enumerated words.
/// `positive` restricts to D = C and positive λ.
template <SymmetricMonoidal B>
Decision comb_enumerate(const B& b, const CombRep<B>& c1, const CombRep<B>& c2,
                        const Bound& bound, bool positive) {
  const std::string method = positive ? "comb/positive" : "comb/enumerate";
  if constexpr (Enumerable<B>) {
    const auto caps = b.capabilities();
    const auto& bd = c1.boundary;
    const auto objects = b.enumerate_objects(bound);
    std::size_t probes = 0;
    bool every_hom_settled = true;
    bool braid_hom_settled = false;
    for (const auto& cw : objects.words) {
      for (const auto& dw : objects.words) {
        if (positive && cw != dw) continue;
        HomEnumeration<typename B::Morphism> hom;
        if (positive) {
          if constexpr (PositiveProbing<B>) {
            hom = b.positive_probes(cw * bd.b, bound);
          }
        } else {
          if (caps.length_graded && cw.size() + bd.b.size() != dw.size() + bd.b_prime.size())
            continue;
          hom = b.enumerate_hom(cw * bd.b, dw * bd.b_prime, bound);
        }
        for (const auto& lambda : hom.morphisms) {
          ++probes;
          if (auto w = probe_once(b, c1, c2, lambda, cw, dw)) {
            auto d = Decision::distinct(method, b.tolerance(), std::move(*w));
            d.coverage.probes = probes;
            return d;
          }
        }
        const bool ok = settles(b, hom);
        every_hom_settled = every_hom_settled && ok;
        if (same_object(b, cw, bd.b_prime) && same_object(b, dw, bd.b))
          braid_hom_settled = ok;
      }
    }
    // Agreement everywhere probed is conclusive when either the probed
    // extensions exhaust all that matter, or the backend is compact closed
    // and the probes span the hom-set containing the braid.
    const bool extensions_exhausted =
        objects.complete || (caps.extension_saturation &&
                             *caps.extension_saturation <= bound.word_length);
    const bool certified = (extensions_exhausted && every_hom_settled) ||
                           (caps.compact_closed && caps.linear && braid_hom_settled);
    Decision d = certified
                     ? Decision::equivalent(method, b.tolerance())
                     : Decision::unknown(method, b.tolerance(),
                                         "all " + std::to_string(probes) +
                                             " probes agree within the bound");
    d.coverage.probes = probes;
    d.coverage.truncated = !certified;
    return d;
  } else {
    fail(ErrorKind::IncompatibleStrategy, "backend cannot enumerate probes");
  }
}

}  // namespace detail

/// c1 ∼comb c2 decided with the given strategy. Throws IncompatibleStrategy
/// when the backend lacks what the strategy relies on.
template <SymmetricMonoidal B>
Decision equiv_comb(const B& b, const CombRep<B>& c1, const CombRep<B>& c2,
                    const ProbeSpec& spec) {
  require_same_boundary(b, c1, c2);
  switch (spec.strategy) {
    case Strategy::BraidOnly:
      return detail::comb_braid_only(b, c1, c2);
    case Strategy::CartesianPair:
      return detail::comb_cartesian(b, c1, c2);
    case Strategy::Enumerate:
      return detail::comb_enumerate(b, c1, c2, spec.bound, false);
    case Strategy::PositiveOnly:
      if constexpr (PositiveProbing<B>) {
        if (!same_object(b, c1.boundary.b, c1.boundary.b_prime))
          fail(ErrorKind::IncompatibleStrategy,
               "positive probes need a hole of the form (B, B)");
        return detail::comb_enumerate(b, c1, c2, spec.bound, true);
      } else {
        fail(ErrorKind::IncompatibleStrategy, "backend has no positive probes");
      }
  }
  fail(ErrorKind::IncompatibleStrategy, "unknown strategy");
}

/// Every representative on `boundary` whose environment is one of `envs`,
/// in enumeration order (environment, then f, then g).
template <Enumerable B>
std::vector<CombRep<B>> enumerate_combs(const B& b, const Boundary& boundary,
                                        const std::vector<ObjectWord>& envs,
                                        const Bound& bound,
                                        std::size_t limit = 4096) {
  std::vector<CombRep<B>> out;
  for (const auto& e : envs) {
    const auto fs = b.enumerate_hom(boundary.a, e * boundary.b, bound);
    const auto gs = b.enumerate_hom(e * boundary.b_prime, boundary.a_prime, bound);
    for (const auto& f : fs.morphisms)
      for (const auto& g : gs.morphisms) {
        if (out.size() >= limit) return out;
        out.push_back(CombRep<B>{e, f, g, boundary});
      }
  }
  return out;
}

/// c1 ∼σ c1′ and d ∼σ d′ while their composites are not ∼σ related: ∼σ is
/// not a congruence.
template <SymmetricMonoidal B>
struct SigmaCongruenceFailure {
  CombRep<B> c1, c1_prime, d, d_prime;
  typename B::Morphism left, right;
};

/// Bounded search for a congruence failure of ∼σ. Boundaries range over
/// words of length at most `word_length`, environments likewise; d′ = d
/// suffices whenever a failure exists with it, which the search tries
/// first.
template <Enumerable B>
std::optional<SigmaCongruenceFailure<B>> find_sigma_congruence_failure(
    const B& b, const Bound& bound, std::size_t word_length = 1) {
  Bound small = bound;
  small.word_length = word_length;
  const auto words = b.enumerate_objects(small).words;
  for (const auto& a : words)
    for (const auto& ap : words)
      for (const auto& x : words)
        for (const auto& xp : words) {
          const Boundary outer{a, ap, x, xp};
          const auto cs = enumerate_combs(b, outer, words, bound, 256);
          for (std::size_t i = 0; i < cs.size(); ++i)
            for (std::size_t j = i + 1; j < cs.size(); ++j) {
              if (!b.equal(braid_eval(b, cs[i]), braid_eval(b, cs[j]))) continue;
              for (const auto& y : words)
                for (const auto& yp : words) {
                  const auto ds = enumerate_combs(b, Boundary{x, xp, y, yp},
                                                  words, bound, 256);
                  for (const auto& d : ds) {
                    auto l = braid_eval(b, comb_compose(b, cs[i], d));
                    auto r = braid_eval(b, comb_compose(b, cs[j], d));
                    if (!b.equal(l, r))
                      return SigmaCongruenceFailure<B>{cs[i], cs[j], d, d, l, r};
                  }
                }
            }
        }
  return std::nullopt;
}

}  // namespace combs
