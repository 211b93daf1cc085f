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

// Throughput of the deciders as the spaces they search grow.

#include <benchmark/benchmark.h>

#include <random>

#include "combs/cpm.hpp"
#include "combs/instances/idempotent.hpp"
#include "combs/optic.hpp"
#include "combs/polycomb.hpp"

using namespace combs;

namespace {

const ObjectWord I{}, A{"A"}, X{"X"};

// Extensional comb equivalence on the idempotent instance; the argument is
// the probe word length.
void BM_IdempotentCombEnumerate(benchmark::State& state) {
  IdempotentBackend b;
  const auto c1 = make_comb(b, I, b.identity(A), b.generator("f"));
  const auto c2 = make_comb(b, I, b.generator("f"), b.identity(A));
  const ProbeSpec spec{Strategy::Enumerate, Bound{std::size_t(state.range(0)), 1u << 16}};
  for (auto _ : state) benchmark::DoNotOptimize(equiv_comb(b, c1, c2, spec));
}
BENCHMARK(BM_IdempotentCombEnumerate)->DenseRange(1, 4);

// Zigzag search on the same pair (certified Distinct).
void BM_IdempotentZigzag(benchmark::State& state) {
  IdempotentBackend b;
  const auto c1 = make_comb(b, I, b.identity(A), b.generator("f"));
  const auto c2 = make_comb(b, I, b.generator("f"), b.identity(A));
  const Bound bound{std::size_t(state.range(0)), 1u << 16};
  for (auto _ : state) benchmark::DoNotOptimize(equiv_optic(b, c1, c2, bound));
}
BENCHMARK(BM_IdempotentZigzag)->DenseRange(1, 4);

// Braid probe on dense complex combs; the argument is the wire dimension.
void BM_ComplexBraid(benchmark::State& state) {
  const auto d = std::size_t(state.range(0));
  ComplexMatrices b;
  b.add_object("X", d);
  std::mt19937_64 rng(1);
  const Boundary bd{X, X, X, X};
  auto comb = [&] {
    return make_comb(b, X, b.make(X, X * X, random_matrix(d * d, d, rng)),
                     b.make(X * X, X, random_matrix(d, d * d, rng)), bd);
  };
  const auto c1 = comb(), c2 = comb();
  for (auto _ : state) benchmark::DoNotOptimize(equiv_sigma(b, c1, c2));
}
BENCHMARK(BM_ComplexBraid)->RangeMultiplier(2)->Range(2, 8);

// Transfer matrix of a channel with a d-dimensional environment on a qubit.
void BM_CpmTransfer(benchmark::State& state) {
  const auto e = std::size_t(state.range(0));
  ComplexMatrices b;
  b.add_object("Q", 2);
  b.add_object("E", e);
  const ObjectWord Q{"Q"}, E{"E"};
  std::mt19937_64 rng(2);
  const auto d = make_dagger_comb(b, E, b.make(Q, E * Q, random_isometry(2 * e, 2, rng)));
  for (auto _ : state) benchmark::DoNotOptimize(to_cpm(b, d));
}
BENCHMARK(BM_CpmTransfer)->RangeMultiplier(2)->Range(1, 32);

// Factorisation of unitary combs; the argument is the environment dimension.
void BM_UnitaryFactor(benchmark::State& state) {
  const auto e = std::size_t(state.range(0));
  UnitaryBackend u;
  u.add_object("E", e);
  u.add_object("H", 2);
  const ObjectWord E{"E"}, H{"H"};
  std::mt19937_64 rng(3);
  const Boundary bd{E * H, E * H, H, H};
  const auto f = u.make(E * H, E * H, random_unitary(2 * e, rng));
  const auto g = u.make(E * H, E * H, random_unitary(2 * e, rng));
  const auto w = u.make(E, E, random_unitary(e, rng));
  const auto c1 = make_comb(u, E, f, g, bd);
  const auto c2 = make_comb(u, E, u.compose(f, u.tensor(w, u.identity(H))),
                            u.compose(u.tensor(u.dagger(w), u.identity(H)), g), bd);
  for (auto _ : state) benchmark::DoNotOptimize(unitary_comb_factor(u, c1, c2));
}
BENCHMARK(BM_UnitaryFactor)->DenseRange(2, 8, 2);

// Snake composite and its name at dimension d.
void BM_PolySnake(benchmark::State& state) {
  ComplexMatrices b;
  b.add_object("X", std::size_t(state.range(0)));
  for (auto _ : state) {
    const auto s = poly_compose_at(b, star_counit(b, X, X), star_unit(b, X, X), 1, 1);
    benchmark::DoNotOptimize(poly_name(b, s));
  }
}
BENCHMARK(BM_PolySnake)->RangeMultiplier(2)->Range(2, 4);

}  // namespace

BENCHMARK_MAIN();
