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

// Acceptance run: one line per criterion, "[PASS]" or "[FAIL]", followed by
// the measured quantities. Exit status is nonzero when any criterion fails.
// Tolerances and sample sizes are fixed here; every random draw is seeded.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "../unit/oracles.hpp"
#include "combs/cli/cli.hpp"
#include "combs/cpm.hpp"
#include "combs/eval.hpp"
#include "combs/optic.hpp"
#include "combs/polycomb.hpp"

using namespace combs;

namespace {

constexpr double kNumericTol = 1e-9;    // snake equations, CPM functoriality
constexpr double kResidualTol = 1e-8;   // unitary factorisation residual
constexpr double kAc1Seconds = 1.0;
constexpr double kAc2Seconds = 60.0;

const ObjectWord I{}, A{"A"}, X{"X"}, U{"U"}, Q{"Q"}, T{"T"}, S{"S"};

int failures = 0;

void report(const char* id, bool ok, const std::string& what) {
  std::printf("[%s] %s %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// -- random generators -------------------------------------------------------

BoolMatrices::Morphism random_bool(const BoolMatrices& b, const ObjectWord& dom,
                                   const ObjectWord& cod, std::mt19937_64& rng) {
  BoolMatrices::Mat m(b.dim(cod), b.dim(dom));
  std::bernoulli_distribution coin(0.5);
  for (auto& x : m.data) x = coin(rng) ? 1 : 0;
  return b.make(dom, cod, std::move(m));
}

ComplexMatrices::Morphism random_complex(const ComplexMatrices& b, const ObjectWord& dom,
                                         const ObjectWord& cod, std::mt19937_64& rng) {
  return b.make(dom, cod, random_matrix(b.dim(cod), b.dim(dom), rng));
}

template <class T>
const T& pick(const std::vector<T>& xs, std::mt19937_64& rng) {
  return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
}

// -- AC1 ---------------------------------------------------------------------

void ac1() {
  const auto t0 = std::chrono::steady_clock::now();
  IdempotentBackend b;
  const auto c1 = make_comb(b, I, b.identity(A), b.generator("f"));
  const auto c2 = make_comb(b, I, b.generator("f"), b.identity(A));
  const auto comb = equiv_comb(b, c1, c2, ProbeSpec{Strategy::Enumerate, Bound{}});
  const auto optic = equiv_optic(b, c1, c2, Bound{});
  const double secs = seconds_since(t0);
  const bool ok = comb.verdict == Verdict::Equivalent && comb.certified &&
                  optic.verdict == Verdict::Distinct && optic.certified && secs < kAc1Seconds;
  report("AC1", ok,
         fmt("idempotent (1_A,f)_I vs (f,1_A)_I: comb=%s%s optic=%s%s, %.3f s (limit %.0f s)",
             to_string(comb.verdict), comb.certified ? " certified" : "",
             to_string(optic.verdict), optic.certified ? " certified" : "", secs, kAc1Seconds));
}

// -- AC2 ---------------------------------------------------------------------

void ac2() {
  const auto t0 = std::chrono::steady_clock::now();
  BoolMatrices b;
  b.add_object("X", 2);
  b.add_object("U", 1);
  const std::vector<ObjectWord> small = {I, U, X};  // dims 1, 1, 2
  std::mt19937_64 rng(2002);
  std::size_t pairs = 0, disagreements = 0, oracle_mismatch = 0, equivalent = 0;
  while (pairs < 1000) {
    const Boundary bd{pick(small, rng), pick(small, rng), pick(small, rng), pick(small, rng)};
    const auto e1 = pick(small, rng), e2 = pick(small, rng);
    const auto c1 = make_comb(b, e1, random_bool(b, bd.a, e1 * bd.b, rng),
                              random_bool(b, e1 * bd.b_prime, bd.a_prime, rng), bd);
    CombRep<BoolMatrices> c2;
    if (pairs % 2 == 0) {
      // Slide a random v: e2 -> e1 off the bottom of a random factor.
      const auto v = random_bool(b, e2, e1, rng);
      const auto f0 = random_bool(b, bd.a, e2 * bd.b, rng);
      const auto r = make_comb(b, e1, b.compose(f0, b.tensor(v, b.identity(bd.b))), c1.g, bd);
      c2 = slide(b, r, SlideMove<BoolMatrices>{SlideDirection::PushDown, v, f0});
      const auto back = slide(b, c2, SlideMove<BoolMatrices>{SlideDirection::PushUp, v, c1.g});
      if (!same_rep(b, back, r)) ++oracle_mismatch;
      // Compare c2 against r, a slide away.
      const auto o = equiv_optic(b, r, c2, Bound{});
      const auto c = equiv_comb(b, r, c2, ProbeSpec{Strategy::BraidOnly, Bound{}});
      if (o.verdict != c.verdict) ++disagreements;
      if (o.verdict != Verdict::Equivalent) ++oracle_mismatch;
      equivalent += o.verdict == Verdict::Equivalent;
    } else {
      c2 = make_comb(b, e2, random_bool(b, bd.a, e2 * bd.b, rng),
                     random_bool(b, e2 * bd.b_prime, bd.a_prime, rng), bd);
      const auto o = equiv_optic(b, c1, c2, Bound{});
      const auto c = equiv_comb(b, c1, c2, ProbeSpec{Strategy::BraidOnly, Bound{}});
      if (o.verdict != c.verdict) ++disagreements;
      equivalent += o.verdict == Verdict::Equivalent;
      // Independent name computation by index sums over {0, 1}.
      auto name = [&](const CombRep<BoolMatrices>& k) {
        auto d = oracle::braid_name(oracle::dense(k.f.mat), oracle::dense(k.g.mat),
                                    b.dim(k.env), b.dim(bd.b), b.dim(bd.b_prime));
        for (auto& x : d.v) x = x.real() > 0 ? 1.0 : 0.0;
        return d;
      };
      const bool same = oracle::distance(name(c1), name(c2)) == 0.0;
      if (same != (o.verdict == Verdict::Equivalent)) ++oracle_mismatch;
    }
    ++pairs;
  }
  const double secs = seconds_since(t0);
  report("AC2", disagreements == 0 && oracle_mismatch == 0 && secs < kAc2Seconds,
         fmt("boolean dims<=2 env<=2: %zu pairs (%zu equivalent), %zu optic/comb "
             "disagreements, %zu oracle mismatches, %.2f s (limit %.0f s)",
             pairs, equivalent, disagreements, oracle_mismatch, secs, kAc2Seconds));
}

// -- AC3 ---------------------------------------------------------------------

template <class B, class Gen>
std::pair<std::size_t, std::size_t> slide_soundness(const B& b, const std::vector<ObjectWord>& holes,
                                                    const std::vector<ObjectWord>& envs,
                                                    std::size_t moves, const Bound& bound,
                                                    std::mt19937_64& rng, Gen random) {
  std::size_t failures_here = 0, probes = 0;
  const auto words = b.enumerate_objects(bound).words;
  for (std::size_t k = 0; k < moves; ++k) {
    const Boundary bd{pick(holes, rng), pick(holes, rng), pick(holes, rng), pick(holes, rng)};
    const auto e = pick(envs, rng), e0 = pick(envs, rng);
    const auto v = random(b, e0, e, rng);
    OpticRep<B> source, target;
    if (k % 2 == 0) {
      const auto f0 = random(b, bd.a, e0 * bd.b, rng);
      source = make_comb(b, e, b.compose(f0, b.tensor(v, b.identity(bd.b))),
                         random(b, e * bd.b_prime, bd.a_prime, rng), bd);
      target = slide(b, source, SlideMove<B>{SlideDirection::PushDown, v, f0});
    } else {
      // Push up with v: e0 -> e, starting from environment e0.
      const auto g0 = random(b, e * bd.b_prime, bd.a_prime, rng);
      source = make_comb(b, e0, random(b, bd.a, e0 * bd.b, rng),
                         b.compose(b.tensor(v, b.identity(bd.b_prime)), g0), bd);
      target = slide(b, source, SlideMove<B>{SlideDirection::PushUp, v, g0});
    }
    for (const auto& c : words)
      for (const auto& d : words) {
        const auto hom = b.enumerate_hom(c * bd.b, d * bd.b_prime, bound);
        for (const auto& lambda : hom.morphisms) {
          ++probes;
          if (!b.equal(extended_eval(b, source, lambda, c, d),
                       extended_eval(b, target, lambda, c, d)))
            ++failures_here;
        }
      }
  }
  return {failures_here, probes};
}

void ac3() {
  std::mt19937_64 rng(3003);
  BoolMatrices bb;
  bb.add_object("X", 2);
  bb.add_object("U", 1);
  ComplexMatrices cb;
  cb.add_object("Q", 2);
  cb.add_object("T", 3);
  const auto [bf, bp] = slide_soundness(bb, {I, U, X}, {I, U, X}, 250, Bound{1, 256}, rng,
                                        random_bool);
  const auto [cf, cp] = slide_soundness(cb, {I, Q, T}, {I, Q, T}, 250, Bound{1, 1u << 16}, rng,
                                        random_complex);
  report("AC3", bf + cf == 0,
         fmt("500 slide moves (250 boolean, 250 complex): %zu + %zu probes, %zu failures",
             bp, cp, bf + cf));
}

// -- AC4 ---------------------------------------------------------------------

void ac4() {
  PointedBackend p;
  p.add_state("phi");
  p.add_state("psi");
  p.add_effect("!");
  p.add_cancel("!", "phi");
  p.add_cancel("!", "psi");
  p.check_confluence();
  const auto c1 = make_comb(p, I, p.generator("psi"), p.generator("!"));
  const auto c2 = make_comb(p, I, p.generator("phi"), p.generator("!"));
  const auto sigma = equiv_sigma(p, c1, c2);
  const auto tau = equiv_tau(p, c1, c2, Bound{});
  const std::string left = sigma.witness ? *sigma.witness->find("left") : "";
  const std::string right = sigma.witness ? *sigma.witness->find("right") : "";
  // ψ∘! and φ∘! as maps A -> A, computed independently of the witness.
  const auto psi_bang = p.compose(p.generator("!"), p.generator("psi"));
  const auto phi_bang = p.compose(p.generator("!"), p.generator("phi"));
  const bool forms = sigma.witness && p.equal(eval(Term::parse(left), p), psi_bang) &&
                     p.equal(eval(Term::parse(right), p), phi_bang) &&
                     !p.equal(psi_bang, phi_bang);
  report("AC4", sigma.verdict == Verdict::Distinct && tau.verdict == Verdict::Equivalent && forms,
         fmt("pointed (psi,!)_I vs (phi,!)_I: sigma=%s [%s | %s], tau=%s over %zu probes",
             to_string(sigma.verdict), left.c_str(), right.c_str(), to_string(tau.verdict),
             tau.coverage.probes));
}

// -- AC5 ---------------------------------------------------------------------

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void ac5() {
  std::mt19937_64 rng(5005);
  BoolMatrices b;
  b.add_object("X", 2);
  b.add_object("U", 1);
  const std::vector<ObjectWord> small = {I, U, X};
  std::size_t pairs = 0, broken = 0;
  const auto braid = ProbeSpec{Strategy::BraidOnly, Bound{}};
  while (pairs < 200) {
    const Boundary bd{pick(small, rng), pick(small, rng), pick(small, rng), pick(small, rng)};
    const auto e = pick(small, rng), e0 = pick(small, rng);
    const auto v = random_bool(b, e0, e, rng);
    const auto f0 = random_bool(b, bd.a, e0 * bd.b, rng);
    const auto c = make_comb(b, e, b.compose(f0, b.tensor(v, b.identity(bd.b))),
                             random_bool(b, e * bd.b_prime, bd.a_prime, rng), bd);
    const auto c_prime = slide(b, c, SlideMove<BoolMatrices>{SlideDirection::PushDown, v, f0});
    const auto base = equiv_comb(b, c, c_prime, braid);
    if (base.verdict != Verdict::Equivalent || !base.certified) {
      ++broken;
      ++pairs;
      continue;
    }
    // A random comb plugged into the hole, one around the outside, one beside.
    const auto inner_e = pick(small, rng), outer_e = pick(small, rng);
    const Boundary ib{bd.b, bd.b_prime, pick(small, rng), pick(small, rng)};
    const auto d = make_comb(b, inner_e, random_bool(b, ib.a, inner_e * ib.b, rng),
                             random_bool(b, inner_e * ib.b_prime, ib.a_prime, rng), ib);
    const Boundary ob{pick(small, rng), pick(small, rng), bd.a, bd.a_prime};
    const auto o = make_comb(b, outer_e, random_bool(b, ob.a, outer_e * ob.b, rng),
                             random_bool(b, outer_e * ob.b_prime, ob.a_prime, rng), ob);
    const bool ok =
        equiv_comb(b, comb_compose(b, c, d), comb_compose(b, c_prime, d), braid).verdict ==
            Verdict::Equivalent &&
        equiv_comb(b, comb_compose(b, o, c), comb_compose(b, o, c_prime), braid).verdict ==
            Verdict::Equivalent &&
        equiv_comb(b, comb_tensor(b, c, d), comb_tensor(b, c_prime, d), braid).verdict ==
            Verdict::Equivalent &&
        equiv_comb(b, comb_tensor(b, d, c), comb_tensor(b, d, c_prime), braid).verdict ==
            Verdict::Equivalent;
    broken += !ok;
    ++pairs;
  }

  // The sigma congruence failure, checked against the stored fixture.
  PointedBackend q;
  q.add_state("phi");
  q.add_state("psi");
  q.add_effect("!");
  q.add_exchange("!", "phi", "psi");
  const auto w = find_sigma_congruence_failure(q, Bound{});
  bool fixture_ok = false;
  if (w) {
    const auto fx = nlohmann::json::parse(slurp(COMBS_FIXTURE_DIR "/sigma_congruence_failure.json"));
    fixture_ok = render(q, w->c1.f) == fx["c1"]["f"] && render(q, w->c1.g) == fx["c1"]["g"] &&
                 render(q, w->c1_prime.f) == fx["c1_prime"]["f"] &&
                 render(q, w->d.f) == fx["d"]["f"] && render(q, w->d.g) == fx["d"]["g"] &&
                 w->d.env.str() == fx["d"]["env"] && render(q, w->left) == fx["left"] &&
                 render(q, w->right) == fx["right"] &&
                 equiv_sigma(q, w->c1, w->c1_prime).verdict == Verdict::Equivalent &&
                 !q.equal(w->left, w->right);
  }
  report("AC5", broken == 0 && fixture_ok,
         fmt("%zu certified-equivalent pairs under compose (both sides) and tensor (both "
             "sides): %zu failures; sigma congruence failure %s [%s vs %s]",
             pairs, broken, fixture_ok ? "found, matches fixture" : "MISSING or changed",
             w ? render(q, w->left).c_str() : "-", w ? render(q, w->right).c_str() : "-"));
}

// -- AC6 ---------------------------------------------------------------------

void ac6() {
  ComplexMatrices b;
  b.add_object("Q", 2);
  b.add_object("T", 3);
  b.add_object("E1", 1);
  b.add_object("E2", 2);
  b.add_object("E3", 3);
  b.add_object("E4", 4);
  const std::vector<ObjectWord> sys = {Q, T};
  const std::vector<ObjectWord> envs = {ObjectWord{"E1"}, ObjectWord{"E2"}, ObjectWord{"E3"},
                                        ObjectWord{"E4"}};
  std::mt19937_64 rng(6006);
  std::size_t pairs = 0, disagreements = 0, related_not_equiv = 0, distinct = 0;
  double functor_err = 0;
  auto isometry = [&](const ObjectWord& a, const ObjectWord& e, const ObjectWord& bb) {
    return b.make(a, e * bb, random_isometry(b.dim(e * bb), b.dim(a), rng));
  };
  while (pairs < 500) {
    const auto a = pick(sys, rng), out = pick(sys, rng);
    const auto e1 = pick(envs, rng);
    // Stinespring needs dim(E B) >= dim(A).
    if (b.dim(e1 * out) < b.dim(a)) continue;
    const auto d1 = make_dagger_comb(b, e1, isometry(a, e1, out));
    DaggerCombRep d2;
    const bool related = pairs % 2 == 0;
    if (related) {
      // Push the environment through an isometry E -> E′ with dim E′ >= dim E.
      ObjectWord e2 = pick(envs, rng);
      while (b.dim(e2) < b.dim(e1)) e2 = pick(envs, rng);
      const auto w = b.make(e1, e2, random_isometry(b.dim(e2), b.dim(e1), rng));
      d2 = make_dagger_comb(b, e2, b.compose(d1.comb.f, b.tensor(w, b.identity(out))));
    } else {
      const auto e2 = pick(envs, rng);
      if (b.dim(e2 * out) < b.dim(a)) continue;
      d2 = make_dagger_comb(b, e2, isometry(a, e2, out));
    }
    const auto v1 = cpm_equal(b, d1, d2).verdict;
    const auto v2 = equiv_comb(b, d1.comb, d2.comb, ProbeSpec{Strategy::BraidOnly, Bound{}}).verdict;
    const auto v3 = equiv_optic(b, d1.comb, d2.comb, Bound{}).verdict;
    if (v1 != v2 || v2 != v3) ++disagreements;
    if (related && v1 != Verdict::Equivalent) ++related_not_equiv;
    distinct += v1 == Verdict::Distinct;

    // Functoriality on a follow-up channel out -> Q.
    const auto e3 = pick(envs, rng);
    if (b.dim(e3 * Q) >= b.dim(out)) {
      const auto d3 = make_dagger_comb(b, e3, isometry(out, e3, Q));
      const auto seq = as_dagger_comb(b, comb_compose(b, d1.comb, d3.comb));
      functor_err = std::max(functor_err, to_cpm(b, seq).transfer.distance(
                                              cpm_compose(to_cpm(b, d1), to_cpm(b, d3)).transfer));
      const auto par = as_dagger_comb(b, comb_tensor(b, d1.comb, d3.comb));
      functor_err = std::max(functor_err, to_cpm(b, par).transfer.distance(
                                              cpm_tensor(to_cpm(b, d1), to_cpm(b, d3)).transfer));
    }
    ++pairs;
  }
  report("AC6", disagreements == 0 && related_not_equiv == 0 && functor_err <= kNumericTol,
         fmt("%zu dagger comb pairs (%zu distinct): %zu cpm/comb/optic disagreements, %zu "
             "isometry-related pairs not equivalent, functoriality error %.2e (tol %.0e)",
             pairs, distinct, disagreements, related_not_equiv, functor_err, kNumericTol));
}

// -- AC7 ---------------------------------------------------------------------

void ac7() {
  UnitaryBackend u;
  u.add_object("D2", 2);
  u.add_object("D3", 3);
  u.add_object("D4", 4);
  const std::vector<ObjectWord> wires = {ObjectWord{"D2"}, ObjectWord{"D3"}, ObjectWord{"D4"}};
  std::mt19937_64 rng(7007);
  std::size_t positives = 0, recovered = 0, negatives = 0, rejected = 0;
  double worst_residual = 0, worst_phase = 0;
  for (std::size_t k = 0; k < 100; ++k) {
    const auto e = pick(wires, rng), h = pick(wires, rng);
    const Boundary bd{e * h, e * h, h, h};
    const std::size_t n = u.dim(e * h);
    const auto f = u.make(e * h, e * h, random_unitary(n, rng));
    const auto g = u.make(e * h, e * h, random_unitary(n, rng));
    const auto c = make_comb(u, e, f, g, bd);
    const auto up = u.make(e, e, random_unitary(u.dim(e), rng));
    const auto c2 = make_comb(u, e, u.compose(f, u.tensor(up, u.identity(h))),
                              u.compose(u.tensor(u.dagger(up), u.identity(h)), g), bd);
    const auto d = unitary_comb_factor(u, c, c2);
    ++positives;
    if (d.verdict == Verdict::Equivalent && d.witness) {
      const double residual = std::stod(*d.witness->find("residual"));
      const auto got = eval(Term::parse(*d.witness->find("U'")), u.hilbert());
      // U′ is determined up to a global phase: |tr(got† up)| / dim = 1.
      const auto ov = u.hilbert().compose(up, u.hilbert().dagger(got));
      std::complex<double> tr = 0;
      for (std::size_t i = 0; i < ov.mat.rows; ++i) tr += ov.mat(i, i);
      const double phase_err = std::abs(std::abs(tr) / double(ov.mat.rows) - 1.0);
      worst_residual = std::max(worst_residual, residual);
      worst_phase = std::max(worst_phase, phase_err);
      if (residual <= kResidualTol && phase_err <= kResidualTol) ++recovered;
    }
    // Swap-twisted negative: needs the environment and hole to be the same wire.
    const auto w = pick(wires, rng);
    const Boundary tb{w * w, w * w, w, w};
    const std::size_t m = u.dim(w * w);
    const auto tf = u.make(w * w, w * w, random_unitary(m, rng));
    const auto tg = u.make(w * w, w * w, random_unitary(m, rng));
    const auto swap = u.make(w * w, w * w, u.symmetry(w, w).mat);
    const auto t1 = make_comb(u, w, tf, tg, tb);
    const auto t2 = make_comb(u, w, u.compose(tf, swap), u.compose(swap, tg), tb);
    ++negatives;
    rejected += unitary_comb_factor(u, t1, t2).verdict == Verdict::Distinct;
  }
  report("AC7", recovered == positives && rejected == negatives,
         fmt("%zu/%zu inserted unitaries recovered (worst residual %.2e, worst phase error "
             "%.2e, tol %.0e); %zu/%zu swap twists distinct",
             recovered, positives, worst_residual, worst_phase, kResidualTol, rejected,
             negatives));
}

// -- AC8 ---------------------------------------------------------------------

void ac8() {
  ComplexMatrices b;
  b.add_object("Q", 2);
  b.add_object("T", 3);
  // Snake equations at qubit dimensions.
  const auto eta = star_unit(b, Q, Q);
  const auto eps = star_counit(b, Q, Q);
  const double snake1 = poly_name(b, poly_compose_at(b, eps, eta, 0, 0))
                            .mat.distance(poly_name(b, identity_poly(b, Q, Q)).mat);
  const double snake2 = poly_name(b, poly_compose_at(b, eps, eta, 1, 1))
                            .mat.distance(poly_name(b, identity_poly(b, Q, Q)).mat);

  std::mt19937_64 rng(8008);
  const std::vector<ObjectWord> ws = {I, Q, T};
  std::size_t name_ok = 0, plug_ok = 0;
  for (std::size_t k = 0; k < 200; ++k) {
    const Boundary bd{pick(ws, rng), pick(ws, rng), pick(ws, rng), pick(ws, rng)};
    const auto e = pick(ws, rng);
    const auto c = make_comb(b, e, random_complex(b, bd.a, e * bd.b, rng),
                             random_complex(b, e * bd.b_prime, bd.a_prime, rng), bd);
    // The recorded symmetry: poly_name = braid_eval followed by σ_{A′,B},
    // i.e. A B′ -> B A′ with the outer output last.
    const auto expect = b.compose(braid_eval(b, c), b.symmetry(bd.a_prime, bd.b));
    name_ok += b.equal(poly_name(b, comb_as_poly(c)), expect);
    if (k < 100) {
      const auto p = comb_as_poly(c);
      const bool inside = poly_equiv(b, poly_compose_at(b, p, identity_poly(b, bd.b, bd.b_prime), 0),
                                     p, Bound{})
                              .verdict == Verdict::Equivalent;
      const bool outside = poly_equiv(b, poly_compose_at(b, identity_poly(b, bd.a, bd.a_prime), p, 0),
                                      p, Bound{})
                               .verdict == Verdict::Equivalent;
      plug_ok += inside && outside;
    }
  }
  report("AC8", snake1 <= kNumericTol && snake2 <= kNumericTol && name_ok == 200 && plug_ok == 100,
         fmt("snake errors %.1e / %.1e (tol %.0e); n=1 names match braid up to symmetry on "
             "%zu/200; identity plugging equivalent on %zu/100",
             snake1, snake2, kNumericTol, name_ok, plug_ok));
}

// -- AC9 ---------------------------------------------------------------------

void ac9() {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t combs_seen = 0, pairs = 0, verdict_bad = 0, structure_bad = 0, uncertified = 0;
  for (std::size_t size = 1; size <= 3; ++size) {
    FinFunBackend f;
    f.add_object("S", size);
    BoolMatrices m;
    m.add_object("S", size);
    const Linearization lin(f, m);
    const Boundary bd{S, S, S, S};
    std::vector<ObjectWord> envs = {I};
    if (size <= 2) envs.push_back(S);
    const auto combs = enumerate_combs(f, bd, envs, Bound{}, 1u << 20);
    combs_seen += combs.size();
    std::vector<CombRep<BoolMatrices>> lifted;
    for (const auto& c : combs) lifted.push_back(lift_functor(f, m, lin, c));
    // Verdicts on every pair.
    for (std::size_t i = 0; i < combs.size(); ++i)
      for (std::size_t j = i; j < combs.size(); ++j) {
        const auto v = equiv_comb(f, combs[i], combs[j], ProbeSpec{Strategy::CartesianPair, Bound{}});
        const auto w = equiv_comb(m, lifted[i], lifted[j], ProbeSpec{Strategy::BraidOnly, Bound{}});
        uncertified += !v.certified || !w.certified;
        verdict_bad += v.verdict != w.verdict;
        ++pairs;
      }
    // Composition and tensor of every comb with a fixed spread of partners.
    for (std::size_t i = 0; i < combs.size(); ++i)
      for (std::size_t j = 0; j < combs.size(); j += std::max<std::size_t>(1, combs.size() / 8)) {
        const auto comp = lift_functor(f, m, lin, comb_compose(f, combs[i], combs[j]));
        const auto tens = lift_functor(f, m, lin, comb_tensor(f, combs[i], combs[j]));
        const auto lc = comb_compose(m, lifted[i], lifted[j]);
        const auto lt = comb_tensor(m, lifted[i], lifted[j]);
        structure_bad += !(m.equal(comp.f, lc.f) && m.equal(comp.g, lc.g) &&
                           m.equal(tens.f, lt.f) && m.equal(tens.g, lt.g));
      }
  }
  report("AC9", verdict_bad == 0 && structure_bad == 0 && uncertified == 0,
         fmt("FinFun -> Bool lifting, sizes 1..3: %zu combs, %zu pairs; %zu verdict changes, "
             "%zu uncertified, %zu compose/tensor mismatches, %.1f s",
             combs_seen, pairs, verdict_bad, uncertified, structure_bad, seconds_since(t0)));
}

// -- AC10 --------------------------------------------------------------------

void ac10() {
  const char* suite[] = {"idempotent", "cpm_qubit", "lens", "unitary",
                         "pointed",    "pointed_exchange", "boolean"};
  cli::RunOptions o;
  o.format = "json";
  std::size_t identical = 0, clean = 0, total = 0;
  for (const char* name : suite) {
    const std::string t = std::string(COMBS_SAMPLES_DIR) + "/" + name + ".theory";
    const std::string p = std::string(COMBS_SAMPLES_DIR) + "/" + name + ".program";
    const auto r1 = cli::run_files(t, p, o);
    const auto r2 = cli::run_files(t, p, o);
    ++total;
    identical += r1.output == r2.output && !r1.output.empty();
    clean += r1.exit_code == 0 && r2.exit_code == 0;
  }
  report("AC10", identical == total && clean == total,
         fmt("%zu/%zu sample reports byte-identical across two runs, %zu/%zu exit 0",
             identical, total, clean, total));
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void()>>> criteria = {
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
      {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10}};
  for (const auto& [id, fn] : criteria) {
    try {
      fn();
    } catch (const std::exception& e) {
      report(id, false, std::string("threw: ") + e.what());
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
