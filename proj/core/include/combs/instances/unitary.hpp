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
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "combs/instances/matrix_backend.hpp"

namespace combs {

using CMatrix = Matrix<ComplexRing>;

/// Slices f : A -> E (x) B along the standard basis of E:
/// slice x is (<x| (x) 1_B) f. Throws BadSplit when dims do not multiply.
inline std::vector<CMatrix> kraus_slices(const CMatrix& f, std::size_t env_dim,
                                         std::size_t out_dim) {
  if (env_dim * out_dim != f.rows)
    fail(ErrorKind::BadSplit, "environment dim " + std::to_string(env_dim) +
                                  " times output dim " + std::to_string(out_dim) +
                                  " is not " + std::to_string(f.rows));
  std::vector<CMatrix> out;
  out.reserve(env_dim);
  for (std::size_t x = 0; x < env_dim; ++x) {
    CMatrix k(out_dim, f.cols);
    for (std::size_t b = 0; b < out_dim; ++b)
      for (std::size_t a = 0; a < f.cols; ++a) k(b, a) = f(x * out_dim + b, a);
    out.push_back(std::move(k));
  }
  return out;
}

struct Separation {
  CMatrix factor;    // U'
  double residual;   // max |U - U' (x) 1|
};

/// Tries to write U : E (x) B -> E' (x) B as U' (x) 1_B. U' is read off by
/// contracting B with the basis state |0> and the effect <0|. Returns
/// nothing when the residual exceeds `tol`.
inline std::optional<Separation> tensor_separate(const CMatrix& u,
                                                 std::size_t b_dim, double tol) {
  if (b_dim == 0 || u.rows % b_dim != 0 || u.cols % b_dim != 0)
    fail(ErrorKind::BadSplit, "cannot split off a factor of dim " +
                                  std::to_string(b_dim));
  const std::size_t out_e = u.rows / b_dim, in_e = u.cols / b_dim;
  CMatrix factor(out_e, in_e);
  for (std::size_t i = 0; i < out_e; ++i)
    for (std::size_t k = 0; k < in_e; ++k) factor(i, k) = u(i * b_dim, k * b_dim);
  const double residual = u.distance(kron(factor, CMatrix::identity(b_dim)));
  if (residual > tol) return std::nullopt;
  return Separation{std::move(factor), residual};
}

inline Eigen::MatrixXcd to_eigen(const CMatrix& m) {
  Eigen::MatrixXcd out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out(i, j) = m(i, j);
  return out;
}

inline CMatrix from_eigen(const Eigen::MatrixXcd& m) {
  CMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

inline bool is_unitary(const CMatrix& m, double tol) {
  if (m.rows != m.cols) return false;
  return (m * m.adjoint()).distance(CMatrix::identity(m.rows)) <= tol;
}

inline bool is_isometry(const CMatrix& m, double tol) {
  return (m.adjoint() * m).distance(CMatrix::identity(m.cols)) <= tol;
}

/// Haar-ish random isometry C^cols -> C^rows (rows >= cols) via QR of a
/// complex Gaussian matrix.
template <class Rng>
CMatrix random_isometry(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(rows, rows);
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = {gauss(rng), gauss(rng)};
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  return from_eigen(q.leftCols(cols));
}

template <class Rng>
CMatrix random_unitary(std::size_t n, Rng& rng) {
  return random_isometry(n, n, rng);
}

template <class Rng>
CMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix m(rows, cols);
  for (auto& x : m.data) x = {gauss(rng), gauss(rng)};
  return m;
}

/// Unitary maps between finite-dimensional Hilbert spaces, embedded in the
/// complex matrix category. Not compact closed; the braid probe is still a
/// complete invariant for combs here.
class UnitaryBackend {
 public:
  using Morphism = ComplexMatrices::Morphism;

  explicit UnitaryBackend(double tolerance = 1e-9) : hilb_(tolerance) {}

  void set_tolerance(double tolerance) { hilb_.set_tolerance(tolerance); }

  void add_object(const std::string& name, std::size_t dim) {
    hilb_.add_object(name, dim);
  }

  void add_morphism(const std::string& name, const ObjectWord& dom,
                    const ObjectWord& cod, const nlohmann::json& literal) {
    auto m = from_literal(dom, cod, literal);
    hilb_.add_morphism(name, dom, cod, m.mat);
  }

  void add_morphism(const std::string& name, const ObjectWord& dom,
                    const ObjectWord& cod, const CMatrix& mat) {
    auto m = make(dom, cod, mat);
    hilb_.add_morphism(name, dom, cod, m.mat);
  }

  /// The faithful embedding into complex matrices.
  const ComplexMatrices& hilbert() const { return hilb_; }

  Morphism make(const ObjectWord& dom, const ObjectWord& cod, CMatrix mat) const {
    auto m = hilb_.make(dom, cod, std::move(mat));
    if (!is_unitary(m.mat, 10 * tolerance()))
      fail(ErrorKind::TypeError, "matrix " + dom.str() + " -> " + cod.str() +
                                     " is not unitary");
    return m;
  }

  std::size_t dim(const ObjectWord& w) const { return hilb_.dim(w); }
  ObjectWord normalize(const ObjectWord& w) const { return w; }
  const ObjectWord& dom(const Morphism& m) const { return m.dom; }
  const ObjectWord& cod(const Morphism& m) const { return m.cod; }
  double tolerance() const { return hilb_.tolerance(); }
  Morphism identity(const ObjectWord& w) const { return hilb_.identity(w); }
  Morphism compose(const Morphism& a, const Morphism& b) const {
    return hilb_.compose(a, b);
  }
  Morphism tensor(const Morphism& a, const Morphism& b) const {
    return hilb_.tensor(a, b);
  }
  Morphism symmetry(const ObjectWord& x, const ObjectWord& y) const {
    return hilb_.symmetry(x, y);
  }
  bool equal(const Morphism& a, const Morphism& b) const {
    return hilb_.equal(a, b);
  }
  Morphism dagger(const Morphism& m) const { return hilb_.dagger(m); }

  Capabilities capabilities() const {
    Capabilities c;
    c.dagger = true;
    c.braid_complete = true;
    return c;
  }

  Morphism generator(const std::string& name) const {
    return hilb_.generator(name);
  }
  Morphism from_literal(const ObjectWord& dom, const ObjectWord& cod,
                        const nlohmann::json& j) const {
    return make(dom, cod, hilb_.from_literal(dom, cod, j).mat);
  }
  Term to_term(const Morphism& m) const { return hilb_.to_term(m); }
  Signature signature() const { return hilb_.signature(); }

 private:
  ComplexMatrices hilb_;
};

}  // namespace combs
