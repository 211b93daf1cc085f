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

#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "combs/backend.hpp"
#include "combs/matrix.hpp"

namespace combs {

/// Matrices over a semiring: objects are words of generator objects with
/// declared dimensions, a morphism X -> Y is a dim(Y) x dim(X) matrix,
/// composition is the matrix product and tensor the Kronecker product
/// (first factor most significant). Compact closed with X* of dim(X) and
/// the vectorised identity as cup and cap; dagger is the conjugate transpose.
template <class Ring>
class MatrixBackend {
 public:
  using Mat = Matrix<Ring>;
  using Scalar = typename Ring::Scalar;

  struct Morphism {
    ObjectWord dom;
    ObjectWord cod;
    Mat mat;
  };

  explicit MatrixBackend(double tolerance = 1e-9) : tol_(tolerance) {}

  void set_tolerance(double tolerance) { tol_ = tolerance; }

  void add_object(const std::string& name, std::size_t dim) {
    if (name.empty() || name.back() == '*' || name == "I")
      fail(ErrorKind::TypeError, "bad object name '" + name + "'");
    dims_[name] = dim;
  }

  void add_morphism(const std::string& name, const ObjectWord& dom,
                    const ObjectWord& cod, const Mat& mat) {
    check_shape(dom, cod, mat, name);
    generators_[name] = Morphism{dom, cod, mat};
  }

  void add_morphism(const std::string& name, const ObjectWord& dom,
                    const ObjectWord& cod, const nlohmann::json& literal) {
    generators_[name] = from_literal(dom, cod, literal);
  }

  std::size_t dim(const ObjectWord& w) const {
    std::size_t d = 1;
    for (const auto& f : w.factors()) {
      auto it = dims_.find(base_factor(f));
      if (it == dims_.end()) fail(ErrorKind::UnknownGenerator, "object " + f);
      d *= it->second;
    }
    return d;
  }

  std::vector<std::string> object_generators() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : dims_) out.push_back(k);
    return out;
  }

  Morphism make(const ObjectWord& dom, const ObjectWord& cod, Mat mat) const {
    check_shape(dom, cod, mat, "matrix");
    return Morphism{dom, cod, std::move(mat)};
  }

  // -- symmetric monoidal core ---------------------------------------------

  ObjectWord normalize(const ObjectWord& w) const { return w; }
  const ObjectWord& dom(const Morphism& m) const { return m.dom; }
  const ObjectWord& cod(const Morphism& m) const { return m.cod; }
  double tolerance() const { return Ring::exact ? 0.0 : tol_; }

  Morphism identity(const ObjectWord& w) const {
    return Morphism{w, w, Mat::identity(dim(w))};
  }

  Morphism compose(const Morphism& first, const Morphism& second) const {
    if (first.cod != second.dom)
      fail(ErrorKind::TypeMismatch, "compose " + first.cod.str() + " with " +
                                        second.dom.str());
    return Morphism{first.dom, second.cod, second.mat * first.mat};
  }

  Morphism tensor(const Morphism& a, const Morphism& b) const {
    return Morphism{a.dom * b.dom, a.cod * b.cod, kron(a.mat, b.mat)};
  }

  Morphism symmetry(const ObjectWord& x, const ObjectWord& y) const {
    const std::size_t dx = dim(x), dy = dim(y);
    Mat m(dx * dy, dx * dy);
    for (std::size_t i = 0; i < dx; ++i)
      for (std::size_t j = 0; j < dy; ++j) m(j * dx + i, i * dy + j) = Ring::one();
    return Morphism{x * y, y * x, std::move(m)};
  }

  bool equal(const Morphism& a, const Morphism& b) const {
    return a.dom == b.dom && a.cod == b.cod && a.mat.distance(b.mat) <= tolerance();
  }

  Capabilities capabilities() const {
    Capabilities c;
    c.compact_closed = true;
    c.dagger = true;
    c.enumerable = true;
    c.braid_complete = true;
    c.linear = true;
    return c;
  }

  Morphism generator(const std::string& name) const {
    auto it = generators_.find(name);
    if (it == generators_.end()) fail(ErrorKind::UnknownGenerator, name);
    return it->second;
  }

  Morphism from_literal(const ObjectWord& dom, const ObjectWord& cod,
                        const nlohmann::json& j) const {
    return Morphism{dom, cod, Mat::from_json(j, dim(cod), dim(dom))};
  }

  Term to_term(const Morphism& m) const {
    return Term::literal(m.dom, m.cod, m.mat.to_json());
  }

  Signature signature() const {
    Signature s;
    for (const auto& [name, m] : generators_) s.generators[name] = {m.dom, m.cod};
    return s;
  }

  // -- compact closed and dagger structure ----------------------------------

  /// I -> X* X
  Morphism cup(const ObjectWord& x) const {
    const std::size_t d = dim(x);
    Mat m(d * d, 1);
    for (std::size_t i = 0; i < d; ++i) m(i * d + i, 0) = Ring::one();
    return Morphism{ObjectWord{}, x.dual() * x, std::move(m)};
  }

  /// X X* -> I
  Morphism cap(const ObjectWord& x) const {
    const std::size_t d = dim(x);
    Mat m(1, d * d);
    for (std::size_t i = 0; i < d; ++i) m(0, i * d + i) = Ring::one();
    return Morphism{x * x.dual(), ObjectWord{}, std::move(m)};
  }

  Morphism dagger(const Morphism& m) const {
    return Morphism{m.cod, m.dom, m.mat.adjoint()};
  }

  /// The conjugation functor: entrywise conjugate, X -> X*.
  Morphism conjugate(const Morphism& m) const {
    return Morphism{m.dom.dual(), m.cod.dual(), m.mat.conjugate()};
  }

  // -- enumeration ------------------------------------------------------------

  ObjectEnumeration enumerate_objects(const Bound& bound) const {
    return {words_up_to(object_generators(), bound.word_length, false), false};
  }

  /// Finite semirings: every matrix, ordered by the row-major bit pattern.
  /// Otherwise the matrix units, which span the hom-set.
  HomEnumeration<Morphism> enumerate_hom(const ObjectWord& x,
                                         const ObjectWord& y,
                                         const Bound& bound) const {
    const std::size_t r = dim(y), c = dim(x), n = r * c;
    HomEnumeration<Morphism> out;
    if constexpr (Ring::finite) {
      const bool fits = n < 63 && (std::size_t{1} << n) <= bound.hom_limit;
      const std::size_t count = fits ? (std::size_t{1} << n) : bound.hom_limit;
      for (std::size_t bits = 0; bits < count; ++bits) {
        Mat m(r, c);
        for (std::size_t k = 0; k < n; ++k)
          if (bits >> (n - 1 - k) & 1) m.data[k] = Ring::one();
        out.morphisms.push_back(Morphism{x, y, std::move(m)});
      }
      out.complete = fits;
      out.spanning = fits;
    } else {
      const std::size_t count = std::min(n, bound.hom_limit);
      for (std::size_t k = 0; k < count; ++k) {
        Mat m(r, c);
        m.data[k] = Ring::one();
        out.morphisms.push_back(Morphism{x, y, std::move(m)});
      }
      out.spanning = count == n;
    }
    return out;
  }

  /// Rank-one positive probes |v><v| on X for v in {e_i, e_i + e_j,
  /// e_i + i e_j}. Over complex scalars they span End(X); over the other
  /// semirings they do not, and the enumeration says so.
  HomEnumeration<Morphism> positive_probes(const ObjectWord& x,
                                           const Bound& bound) const {
    const std::size_t d = dim(x);
    HomEnumeration<Morphism> out;
    std::vector<std::vector<Scalar>> vectors;
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<Scalar> v(d, Ring::zero());
      v[i] = Ring::one();
      vectors.push_back(v);
    }
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) {
        std::vector<Scalar> v(d, Ring::zero());
        v[i] = Ring::one();
        v[j] = Ring::one();
        vectors.push_back(v);
        if constexpr (std::is_same_v<Ring, ComplexRing>) {
          v[j] = Scalar(0.0, 1.0);
          vectors.push_back(v);
        }
      }
    for (const auto& v : vectors) {
      if (out.morphisms.size() >= bound.hom_limit) return out;
      Mat m(d, d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = Ring::mul(v[i], Ring::conj(v[j]));
      out.morphisms.push_back(Morphism{x, x, std::move(m)});
    }
    out.spanning = std::is_same_v<Ring, ComplexRing>;
    return out;
  }

 private:
  void check_shape(const ObjectWord& dom, const ObjectWord& cod, const Mat& m,
                   const std::string& what) const {
    if (m.rows != dim(cod) || m.cols != dim(dom))
      fail(ErrorKind::TypeError,
           what + " is " + std::to_string(m.rows) + "x" + std::to_string(m.cols) +
               " but " + dom.str() + " -> " + cod.str() + " needs " +
               std::to_string(dim(cod)) + "x" + std::to_string(dim(dom)));
  }

  double tol_;
  std::map<std::string, std::size_t> dims_;
  std::map<std::string, Morphism> generators_;
};

using BoolMatrices = MatrixBackend<BooleanRing>;
using ComplexMatrices = MatrixBackend<ComplexRing>;
using RationalMatrices = MatrixBackend<RationalRing>;

}  // namespace combs
