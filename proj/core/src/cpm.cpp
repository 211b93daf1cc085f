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

#include "combs/cpm.hpp"

#include <Eigen/Eigenvalues>

namespace combs {

DaggerCombRep make_dagger_comb(const ComplexMatrices& b, const ObjectWord& env,
                               const ComplexMatrices::Morphism& f) {
  auto c = make_comb(b, env, f, b.dagger(f));
  if (!same_object(b, c.boundary.a, c.boundary.a_prime))
    fail(ErrorKind::BoundaryMismatch, "dagger combs need a diagonal boundary");
  return DaggerCombRep{std::move(c)};
}

DaggerCombRep as_dagger_comb(const ComplexMatrices& b,
                             const CombRep<ComplexMatrices>& c) {
  if (!b.equal(c.g, b.dagger(c.f)))
    fail(ErrorKind::TypeError, "top of the comb is not the dagger of its bottom");
  return DaggerCombRep{c};
}

CpmMorphism to_cpm(const ComplexMatrices& b, const DaggerCombRep& d) {
  const auto& c = d.comb;
  const std::size_t da = b.dim(c.boundary.a), db = b.dim(c.boundary.b);
  CMatrix t(db * db, da * da);
  for (const auto& k : kraus_slices(c.f.mat, b.dim(c.env), db)) {
    const CMatrix term = kron(k.conjugate(), k);
    for (std::size_t i = 0; i < t.data.size(); ++i) t.data[i] += term.data[i];
  }
  return CpmMorphism{c.boundary.a, c.boundary.b, da, db, std::move(t)};
}

CpmMorphism cpm_compose(const CpmMorphism& m1, const CpmMorphism& m2) {
  if (m1.cod_dim != m2.dom_dim)
    fail(ErrorKind::DimensionMismatch, "cannot compose transfers of dims " +
                                           std::to_string(m1.cod_dim) + " and " +
                                           std::to_string(m2.dom_dim));
  return CpmMorphism{m1.dom, m2.cod, m1.dom_dim, m2.cod_dim,
                     m2.transfer * m1.transfer};
}

CpmMorphism cpm_tensor(const CpmMorphism& m1, const CpmMorphism& m2) {
  const std::size_t a1 = m1.dom_dim, a2 = m2.dom_dim;
  const std::size_t b1 = m1.cod_dim, b2 = m2.cod_dim;
  CMatrix t(b1 * b2 * b1 * b2, a1 * a2 * a1 * a2);
  for (std::size_t r1 = 0; r1 < m1.transfer.rows; ++r1)
    for (std::size_t c1 = 0; c1 < m1.transfer.cols; ++c1)
      for (std::size_t r2 = 0; r2 < m2.transfer.rows; ++r2)
        for (std::size_t c2 = 0; c2 < m2.transfer.cols; ++c2) {
          const std::size_t row =
              ((r1 / b1) * b2 + r2 / b2) * (b1 * b2) + (r1 % b1) * b2 + r2 % b2;
          const std::size_t col =
              ((c1 / a1) * a2 + c2 / a2) * (a1 * a2) + (c1 % a1) * a2 + c2 % a2;
          t(row, col) = m1.transfer(r1, c1) * m2.transfer(r2, c2);
        }
  return CpmMorphism{m1.dom * m2.dom, m1.cod * m2.cod, a1 * a2, b1 * b2,
                     std::move(t)};
}

CMatrix apply_channel(const CpmMorphism& m, const CMatrix& rho) {
  const std::size_t da = m.dom_dim, db = m.cod_dim;
  if (rho.rows != da || rho.cols != da)
    fail(ErrorKind::DimensionMismatch, "density matrix has the wrong size");
  CMatrix v(da * da, 1);
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t ap = 0; ap < da; ++ap) v(a * da + ap, 0) = rho(ap, a);
  const CMatrix w = m.transfer * v;
  CMatrix out(db, db);
  for (std::size_t b = 0; b < db; ++b)
    for (std::size_t bp = 0; bp < db; ++bp) out(bp, b) = w(b * db + bp, 0);
  return out;
}

CMatrix choi(const CpmMorphism& m) {
  const std::size_t da = m.dom_dim, db = m.cod_dim;
  CMatrix j(da * db, da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t k = 0; k < da; ++k) {
      CMatrix unit(da, da);
      unit(i, k) = 1.0;
      const CMatrix out = apply_channel(m, unit);
      for (std::size_t x = 0; x < db; ++x)
        for (std::size_t y = 0; y < db; ++y) j(i * db + x, k * db + y) = out(x, y);
    }
  return j;
}

PositivityReport is_completely_positive(const CpmMorphism& m, double tol) {
  const CMatrix j = choi(m);
  PositivityReport r;
  r.hermitian = j.distance(j.adjoint()) <= tol;
  const Eigen::MatrixXcd e = to_eigen(j);
  const Eigen::MatrixXcd h = (e + e.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  r.min_eigenvalue = h.rows() == 0 ? 0.0 : solver.eigenvalues().minCoeff();
  // -0.0 would print differently from 0.0 in reports.
  if (r.min_eigenvalue == 0.0) r.min_eigenvalue = 0.0;
  r.completely_positive = r.hermitian && r.min_eigenvalue >= -tol;
  return r;
}

bool is_trace_preserving(const CpmMorphism& m, double tol) {
  const std::size_t da = m.dom_dim, db = m.cod_dim;
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t k = 0; k < da; ++k) {
      std::complex<double> trace = 0.0;
      for (std::size_t b = 0; b < db; ++b) trace += m.transfer(b * db + b, i * da + k);
      if (std::abs(trace - (i == k ? 1.0 : 0.0)) > tol) return false;
    }
  return true;
}

Decision cpm_equal(const ComplexMatrices& b, const DaggerCombRep& d1,
                   const DaggerCombRep& d2) {
  require_same_boundary(b, d1.comb, d2.comb);
  const auto t1 = to_cpm(b, d1), t2 = to_cpm(b, d2);
  Decision d;
  if (t1.transfer.distance(t2.transfer) <= b.tolerance()) {
    d = Decision::equivalent("cpm", b.tolerance());
  } else {
    const ObjectWord dom = t1.dom.dual() * t1.dom, cod = t1.cod.dual() * t1.cod;
    Witness w{"transfer", {}};
    w.add("left", Term::literal(dom, cod, t1.transfer.to_json()).str());
    w.add("right", Term::literal(dom, cod, t2.transfer.to_json()).str());
    d = Decision::distinct("cpm", b.tolerance(), std::move(w));
  }
  d.coverage.probes = 1;
  return d;
}

Decision cpinf_equiv(const ComplexMatrices& b, const DaggerCombRep& d1,
                     const DaggerCombRep& d2, const Bound& bound) {
  auto d = equiv_comb(b, d1.comb, d2.comb, ProbeSpec{Strategy::PositiveOnly, bound});
  d.method = "cpinf";
  return d;
}

CpmMorphism transpose_map(const ObjectWord& a, std::size_t d) {
  CMatrix t(d * d, d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) t(x * d + y, y * d + x) = 1.0;
  return CpmMorphism{a, a, d, d, std::move(t)};
}

}  // namespace combs
