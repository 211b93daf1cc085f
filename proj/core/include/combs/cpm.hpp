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

#include <string>
#include <vector>

#include "combs/comb.hpp"
#include "combs/instances/unitary.hpp"

namespace combs {

/// A comb whose top is the dagger of its bottom, (f, f†)_E, on a diagonal
/// boundary (A, A) -> (B, B).
struct DaggerCombRep {
  CombRep<ComplexMatrices> comb;
};

/// (f, f†)_E from f: A -> E B.
DaggerCombRep make_dagger_comb(const ComplexMatrices& b, const ObjectWord& env,
                               const ComplexMatrices::Morphism& f);

/// Accepts an existing comb if its top is the dagger of its bottom within
/// tolerance; throws TypeError otherwise.
DaggerCombRep as_dagger_comb(const ComplexMatrices& b,
                             const CombRep<ComplexMatrices>& c);

/// A completely positive map A* A -> B* B as a transfer matrix acting on
/// vectorised density matrices. Index a·d + a′ of the vector holds ρ[a′][a],
/// so that Σ conj(K) ⊗ K realises ρ |-> Σ K ρ K†.
struct CpmMorphism {
  ObjectWord dom;  // A
  ObjectWord cod;  // B
  std::size_t dom_dim = 0;
  std::size_t cod_dim = 0;
  CMatrix transfer;
};

/// Σ_x conj(K_x) ⊗ K_x over the Kraus slices of f.
CpmMorphism to_cpm(const ComplexMatrices& b, const DaggerCombRep& d);

/// Transfer of the sequential composite: m1 first.
CpmMorphism cpm_compose(const CpmMorphism& m1, const CpmMorphism& m2);
/// Transfer of the parallel composite, in the interleaved (A1 A2)* (A1 A2)
/// vectorisation.
CpmMorphism cpm_tensor(const CpmMorphism& m1, const CpmMorphism& m2);

/// Φ(ρ) for a density matrix ρ on A.
CMatrix apply_channel(const CpmMorphism& m, const CMatrix& rho);

/// J = Σ_ij |i><j| ⊗ Φ(|i><j|).
CMatrix choi(const CpmMorphism& m);

struct PositivityReport {
  bool completely_positive = false;
  bool hermitian = false;
  double min_eigenvalue = 0.0;
};

/// Hermitian and positive semidefinite Choi matrix, within `tol`.
PositivityReport is_completely_positive(const CpmMorphism& m, double tol);

/// tr Φ(ρ) = tr ρ for all ρ, within `tol`.
bool is_trace_preserving(const CpmMorphism& m, double tol);

/// Equality of transfer matrices.
Decision cpm_equal(const ComplexMatrices& b, const DaggerCombRep& d1,
                   const DaggerCombRep& d2);

/// The comb relation with λ restricted to positive probes h†h.
Decision cpinf_equiv(const ComplexMatrices& b, const DaggerCombRep& d1,
                     const DaggerCombRep& d2, const Bound& bound);

/// The transpose map on a d-dimensional system (positive but not
/// completely positive).
CpmMorphism transpose_map(const ObjectWord& a, std::size_t d);

}  // namespace combs
