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

#include "combs/eval.hpp"
#include "combs/instances/finfun.hpp"
#include "combs/instances/idempotent.hpp"
#include "combs/instances/matrix_backend.hpp"
#include "combs/instances/pointed.hpp"
#include "combs/instances/unitary.hpp"
#include "combs/optic.hpp"

using namespace combs;

namespace {

const ObjectWord I{}, A{"A"}, Q{"Q"}, E{"E"};

}  // namespace

TEST_SUITE("optic") {
  TEST_CASE("slides preserve every extended evaluation") {
    ComplexMatrices b;
    b.add_object("Q", 2);
    b.add_object("E", 3);
    std::mt19937_64 rng(31);
    const Boundary bd{Q, Q, Q, Q};
    for (int trial = 0; trial < 20; ++trial) {
      const auto v = b.make(Q, E, random_matrix(3, 2, rng));
      const auto f0 = b.make(Q, Q * Q, random_matrix(4, 2, rng));
      const auto g = b.make(E * Q, Q, random_matrix(2, 6, rng));
      const OpticRep<ComplexMatrices> r{
          E, b.compose(f0, b.tensor(v, b.identity(Q))), g, bd};
      const auto s = slide(b, r, SlideMove<ComplexMatrices>{SlideDirection::PushDown, v, f0});
      CHECK(s.env == Q);
      const auto lambda = b.make(Q * Q, Q * Q, random_matrix(4, 4, rng));
      CHECK(b.equal(extended_eval(b, r, lambda, Q, Q), extended_eval(b, s, lambda, Q, Q)));

      // And back up again.
      const auto u = slide(b, s, SlideMove<ComplexMatrices>{SlideDirection::PushUp, v, g});
      CHECK(same_rep(b, u, r));
    }
  }

  TEST_CASE("ill-fitting slides are rejected") {
    BoolMatrices b;
    b.add_object("Q", 2);
    const auto r = OpticRep<BoolMatrices>{Q, b.identity(Q * Q), b.identity(Q * Q),
                                          Boundary{Q * Q, Q * Q, Q, Q}};
    const auto wrong = b.identity(Q * Q);
    try {
      (void)slide(b, r, SlideMove<BoolMatrices>{SlideDirection::PushUp, wrong,
                                                b.identity(Q * Q * Q)});
      FAIL("no error");
    } catch (const CombsError& e) {
      CHECK(e.kind() == ErrorKind::NonComposableMove);
    }
  }

  TEST_CASE("idempotent counterexample: optics differ, certified") {
    IdempotentBackend b;
    const auto c1 = make_comb(b, I, b.identity(A), b.generator("f"));
    const auto c2 = make_comb(b, I, b.generator("f"), b.identity(A));
    const auto d = equiv_optic(b, c1, c2, Bound{});
    CHECK(d.verdict == Verdict::Distinct);
    CHECK(d.certified);
    CHECK(d.method == "optic/zigzag");
    REQUIRE(d.witness);
    CHECK(d.witness->kind == "exhausted-component");
    CHECK(*d.witness->find("size") == "1");
    CHECK(equiv_optic(b, c1, c1, Bound{}).verdict == Verdict::Equivalent);
  }

  TEST_CASE("a slide path is reported step by step and replays") {
    PointedBackend p;
    p.add_state("phi");
    p.add_effect("!");
    p.add_cancel("!", "phi");
    const Boundary bd{I, I, I, I};
    const auto r1 = make_comb(p, A, p.generator("phi"), p.generator("!"), bd);
    const auto r2 = make_comb(p, I, p.identity(I), p.identity(I), bd);
    const auto d = equiv_optic(p, r1, r2, Bound{1, 1u << 12});
    REQUIRE(d.verdict == Verdict::Equivalent);
    REQUIRE(d.witness);
    CHECK(d.witness->kind == "slide-path");
    CHECK(d.witness->find("step2.direction") == nullptr);
    // Replaying the reported move reaches the target. The factor of a
    // push-down is the new bottom, of a push-up the new top.
    const bool down = *d.witness->find("step1.direction") == "push-down";
    const auto v = eval(Term::parse(*d.witness->find("step1.v")), p);
    const auto env = ObjectWord::parse(*d.witness->find("step1.env"));
    const auto factor = eval(Term::parse(*d.witness->find(down ? "step1.f" : "step1.g")), p);
    const auto next = slide(
        p, r1,
        SlideMove<PointedBackend>{down ? SlideDirection::PushDown : SlideDirection::PushUp, v,
                                  factor});
    CHECK(next.env == env);
    CHECK(same_rep(p, next, r2));
  }

  TEST_CASE("compact closed optics are decided by names") {
    BoolMatrices b;
    b.add_object("Q", 2);
    std::mt19937_64 rng(3);
    const Boundary bd{Q, Q, Q, Q};
    const auto hom_f = b.enumerate_hom(Q, Q * Q, Bound{}).morphisms;
    const auto hom_g = b.enumerate_hom(Q * Q, Q, Bound{}).morphisms;
    std::uniform_int_distribution<std::size_t> pick_f(0, hom_f.size() - 1),
        pick_g(0, hom_g.size() - 1);
    for (int trial = 0; trial < 50; ++trial) {
      const auto c1 = make_comb(b, Q, hom_f[pick_f(rng)], hom_g[pick_g(rng)], bd);
      const auto c2 = make_comb(b, Q, hom_f[pick_f(rng)], hom_g[pick_g(rng)], bd);
      const auto o = equiv_optic(b, c1, c2, Bound{});
      CHECK(o.method == "optic/name");
      CHECK(o.verdict == equiv_comb(b, c1, c2, ProbeSpec{Strategy::BraidOnly, Bound{}}).verdict);
    }
  }

  TEST_CASE("unitary combs factor through the environment") {
    UnitaryBackend u;
    u.add_object("Q", 2);
    u.add_object("E", 2);
    std::mt19937_64 rng(7);
    const Boundary bd{E * Q, E * Q, Q, Q};
    const auto f = u.make(E * Q, E * Q, random_unitary(4, rng));
    const auto g = u.make(E * Q, E * Q, random_unitary(4, rng));
    const auto c = make_comb(u, E, f, g, bd);
    const auto w = u.make(E, E, random_unitary(2, rng));
    const auto c2 = make_comb(u, E, u.compose(f, u.tensor(w, u.identity(Q))),
                              u.compose(u.tensor(u.dagger(w), u.identity(Q)), g), bd);
    const auto d = equiv_optic(u, c, c2, Bound{});
    REQUIRE(d.verdict == Verdict::Equivalent);
    CHECK(d.method == "optic/unitary-factor");
    REQUIRE(d.witness);
    CHECK(std::stod(*d.witness->find("residual")) <= 1e-8);
    // The recovered U′ equals the inserted unitary up to a global phase.
    const auto up = eval(Term::parse(*d.witness->find("U'")), u.hilbert());
    const auto ov = u.hilbert().compose(up, u.hilbert().dagger(w));
    const auto phase = ov.mat(0, 0);
    CHECK(std::abs(std::abs(phase) - 1.0) < 1e-8);

    // E and Q have equal dimension, so the swap can be retyped E Q -> E Q.
    const auto swap = u.make(E * Q, E * Q, u.symmetry(E, Q).mat);
    const auto twisted = make_comb(u, E, u.compose(f, swap), u.compose(swap, g), bd);
    CHECK(equiv_optic(u, c, twisted, Bound{}).verdict == Verdict::Distinct);
  }

  TEST_CASE("cartesian optics are decided by lens pairs") {
    FinFunBackend f;
    f.add_object("S", 2);
    const ObjectWord S{"S"};
    const auto l1 = make_comb(f, S, f.copy(S), f.project_right(S, S));
    const auto l2 = make_comb(f, S * S, f.compose(f.copy(S), f.tensor(f.copy(S), f.identity(S))),
                              f.compose(f.tensor(f.discard(S), f.identity(S * S)),
                                        f.project_right(S, S)));
    const auto d = equiv_optic(f, l1, l2, Bound{});
    CHECK(d.method == "optic/lens");
    CHECK(d.verdict == Verdict::Equivalent);
  }

  TEST_CASE("slide direction names") {
    CHECK(std::string(to_string(SlideDirection::PushDown)) == "push-down");
    CHECK(std::string(to_string(SlideDirection::PushUp)) == "push-up");
  }
}
