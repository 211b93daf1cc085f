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

#include <doctest.h>

#include <random>

#include "combs/instances/unitary.hpp"
#include "combs/polycomb.hpp"

using namespace combs;

namespace {

const ObjectWord I{}, Q{"Q"}, R{"R"};
using CM = ComplexMatrices;

CM hilbert() {
  CM b;
  b.add_object("Q", 2);
  b.add_object("R", 3);
  return b;
}

CM::Morphism random_map(const CM& b, const ObjectWord& dom, const ObjectWord& cod,
                        std::mt19937_64& rng) {
  return b.make(dom, cod, random_matrix(b.dim(cod), b.dim(dom), rng));
}

}  // namespace

TEST_SUITE("polycomb") {
  TEST_CASE("snake equations for the unit and counit") {
    const auto b = hilbert();
    const auto eta = star_unit(b, Q, R);
    const auto eps = star_counit(b, Q, R);
    const auto s1 = poly_compose_at(b, eps, eta, 1, 1);
    CHECK(to_string(s1.holes) == to_string(PolyObject{{Q, R}}));
    CHECK(poly_equiv(b, s1, identity_poly(b, Q, R), Bound{}).verdict == Verdict::Equivalent);
    const auto s2 = poly_compose_at(b, eps, eta, 0, 0);
    CHECK(poly_equiv(b, s2, identity_poly(b, R, Q), Bound{}).verdict == Verdict::Equivalent);
    // Names agree entrywise, not just as verdicts.
    CHECK(b.equal(poly_name(b, s1), poly_name(b, identity_poly(b, Q, R))));
  }

  TEST_CASE("a one-hole polymorphism is a comb") {
    const auto b = hilbert();
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 10; ++trial) {
      const auto c = make_comb(b, R, random_map(b, Q, R * Q, rng), random_map(b, R * R, Q, rng),
                               Boundary{Q, Q, Q, R});
      const auto p = comb_as_poly(c);
      CHECK(b.equal(poly_name(b, p), b.compose(braid_eval(b, c), b.symmetry(Q, Q))));
      const auto lambda = random_map(b, R * Q, Q * R, rng);
      CHECK(b.equal(poly_extended_eval(b, p, {Filler<CM>{lambda, R, Q}}),
                    extended_eval(b, c, lambda, R, Q)));
      CHECK(poly_equiv(b, poly_compose_at(b, p, identity_poly(b, Q, R), 0), p, Bound{})
                .verdict == Verdict::Equivalent);
      CHECK(poly_equiv(b, poly_compose_at(b, identity_poly(b, Q, Q), p, 0), p, Bound{})
                .verdict == Verdict::Equivalent);
    }
  }

  TEST_CASE("plugging a comb into one hole of a two-hole comb") {
    const auto b = hilbert();
    std::mt19937_64 rng(52);
    // Holes (Q, Q) and (Q, R), outer (R, Q), memories R then Q.
    const auto p = make_poly(
        b, PolyObject{{Q, Q}, {Q, R}}, PolyObject{{R, Q}}, {R, Q},
        {random_map(b, R, R * Q, rng), random_map(b, R * Q, Q * Q, rng),
         random_map(b, Q * R, Q, rng)});
    // A comb with outer (Q, R) and hole (R, R).
    const auto c = make_comb(b, Q, random_map(b, Q, Q * R, rng), random_map(b, Q * R, R, rng),
                             Boundary{Q, R, R, R});
    const auto plugged = poly_compose_at(b, p, comb_as_poly(c), 1);
    CHECK(to_string(plugged.holes) == to_string(PolyObject{{Q, Q}, {R, R}}));
    const auto l1 = random_map(b, Q, Q, rng);
    const auto l2 = random_map(b, R, R, rng);
    const auto direct = poly_extended_eval(
        b, plugged, {Filler<CM>{l1, I, I}, Filler<CM>{l2, I, I}});
    const auto nested = poly_extended_eval(
        b, p, {Filler<CM>{l1, I, I}, Filler<CM>{extended_eval(b, c, l2, I, I), I, I}});
    CHECK(b.equal(direct, nested));

    // Agreement with comb composition in the single-hole case.
    const auto c1 = make_comb(b, R, random_map(b, Q, R * Q, rng), random_map(b, R * R, Q, rng),
                              Boundary{Q, Q, Q, R});
    const auto c2 = make_comb(b, Q, random_map(b, Q, Q * Q, rng), random_map(b, Q * Q, R, rng),
                              Boundary{Q, R, Q, Q});
    CHECK(b.equal(poly_name(b, poly_compose_at(b, comb_as_poly(c1), comb_as_poly(c2), 0)),
                  poly_name(b, comb_as_poly(comb_compose(b, c1, c2)))));
  }

  TEST_CASE("typing errors") {
    const auto b = hilbert();
    std::mt19937_64 rng(53);
    try {
      (void)make_poly(b, PolyObject{{Q, Q}}, PolyObject{{Q, Q}}, {R},
                      {random_map(b, Q, Q * Q, rng), random_map(b, R * Q, Q, rng)});
      FAIL("no error");
    } catch (const CombsError& e) {
      CHECK(e.kind() == ErrorKind::HoleMismatch);
    }
    CHECK_THROWS_AS(poly_compose_at(b, identity_poly(b, Q, Q), identity_poly(b, R, R), 0),
                    CombsError);
    CHECK_THROWS_AS(poly_compose_at(b, identity_poly(b, Q, Q), identity_poly(b, Q, Q), 1),
                    CombsError);
  }
}
