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

#include "combs/instances/finfun.hpp"

namespace combs {

void FinFunBackend::add_object(const std::string& name, std::size_t size) {
  if (name.empty() || name.back() == '*' || name == "I")
    fail(ErrorKind::TypeError, "bad object name '" + name + "'");
  sizes_[name] = size;
}

void FinFunBackend::add_morphism(const std::string& name, const ObjectWord& dom,
                                 const ObjectWord& cod,
                                 const nlohmann::json& table) {
  generators_[name] = from_literal(dom, cod, table);
}

std::size_t FinFunBackend::size(const ObjectWord& w) const {
  std::size_t n = 1;
  for (const auto& f : w.factors()) {
    auto it = sizes_.find(f);
    if (it == sizes_.end()) fail(ErrorKind::UnknownGenerator, "object " + f);
    n *= it->second;
  }
  return n;
}

std::vector<std::string> FinFunBackend::object_generators() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : sizes_) out.push_back(k);
  return out;
}

FinFunBackend::Morphism FinFunBackend::make(const ObjectWord& dom,
                                            const ObjectWord& cod,
                                            std::vector<std::size_t> table) const {
  const std::size_t n = size(dom), m = size(cod);
  if (table.size() != n)
    fail(ErrorKind::TypeError, "function table for " + dom.str() + " -> " +
                                   cod.str() + " needs " + std::to_string(n) +
                                   " entries, got " + std::to_string(table.size()));
  for (auto v : table)
    if (v >= m)
      fail(ErrorKind::TypeError, "function table value " + std::to_string(v) +
                                     " outside " + cod.str());
  return Morphism{dom, cod, std::move(table)};
}

FinFunBackend::Morphism FinFunBackend::identity(const ObjectWord& w) const {
  std::vector<std::size_t> t(size(w));
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
  return Morphism{w, w, std::move(t)};
}

FinFunBackend::Morphism FinFunBackend::compose(const Morphism& first,
                                               const Morphism& second) const {
  if (first.cod != second.dom)
    fail(ErrorKind::TypeMismatch,
         "compose " + first.cod.str() + " with " + second.dom.str());
  std::vector<std::size_t> t(first.table.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = second.table[first.table[i]];
  return Morphism{first.dom, second.cod, std::move(t)};
}

FinFunBackend::Morphism FinFunBackend::tensor(const Morphism& a,
                                              const Morphism& b) const {
  const std::size_t nb = b.table.size(), mb = size(b.cod);
  std::vector<std::size_t> t(a.table.size() * nb);
  for (std::size_t x = 0; x < a.table.size(); ++x)
    for (std::size_t y = 0; y < nb; ++y) t[x * nb + y] = a.table[x] * mb + b.table[y];
  return Morphism{a.dom * b.dom, a.cod * b.cod, std::move(t)};
}

FinFunBackend::Morphism FinFunBackend::symmetry(const ObjectWord& x,
                                                const ObjectWord& y) const {
  const std::size_t nx = size(x), ny = size(y);
  std::vector<std::size_t> t(nx * ny);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) t[i * ny + j] = j * nx + i;
  return Morphism{x * y, y * x, std::move(t)};
}

Capabilities FinFunBackend::capabilities() const {
  Capabilities c;
  c.cartesian = true;
  c.enumerable = true;
  return c;
}

FinFunBackend::Morphism FinFunBackend::generator(const std::string& name) const {
  auto it = generators_.find(name);
  if (it == generators_.end()) fail(ErrorKind::UnknownGenerator, name);
  return it->second;
}

FinFunBackend::Morphism FinFunBackend::from_literal(const ObjectWord& dom,
                                                    const ObjectWord& cod,
                                                    const nlohmann::json& j) const {
  if (!j.is_array()) fail(ErrorKind::ParseError, "function table must be an array");
  std::vector<std::size_t> t;
  for (const auto& v : j) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
      fail(ErrorKind::ParseError, "function table entries must be indices");
    t.push_back(v.get<std::size_t>());
  }
  return make(dom, cod, std::move(t));
}

Term FinFunBackend::to_term(const Morphism& m) const {
  return Term::literal(m.dom, m.cod, nlohmann::json(m.table));
}

Signature FinFunBackend::signature() const {
  Signature s;
  for (const auto& [name, m] : generators_) s.generators[name] = {m.dom, m.cod};
  return s;
}

FinFunBackend::Morphism FinFunBackend::copy(const ObjectWord& x) const {
  const std::size_t n = size(x);
  std::vector<std::size_t> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = i * n + i;
  return Morphism{x, x * x, std::move(t)};
}

FinFunBackend::Morphism FinFunBackend::discard(const ObjectWord& x) const {
  return Morphism{x, ObjectWord{}, std::vector<std::size_t>(size(x), 0)};
}

FinFunBackend::Morphism FinFunBackend::project_left(const ObjectWord& x,
                                                    const ObjectWord& y) const {
  return tensor(identity(x), discard(y));
}

FinFunBackend::Morphism FinFunBackend::project_right(const ObjectWord& x,
                                                     const ObjectWord& y) const {
  return tensor(discard(x), identity(y));
}

std::optional<FinFunBackend::Morphism> FinFunBackend::inhabitant(
    const ObjectWord& x) const {
  if (size(x) == 0) return std::nullopt;
  return Morphism{ObjectWord{}, x, {0}};
}

ObjectEnumeration FinFunBackend::enumerate_objects(const Bound& bound) const {
  return {words_up_to(object_generators(), bound.word_length, false), false};
}

HomEnumeration<FinFunBackend::Morphism> FinFunBackend::enumerate_hom(
    const ObjectWord& x, const ObjectWord& y, const Bound& bound) const {
  const std::size_t n = size(x), m = size(y);
  HomEnumeration<Morphism> out;
  if (m == 0 && n > 0) {
    out.complete = true;
    return out;
  }
  // Tables in lexicographic order, as an odometer over |Y|^|X| digits.
  std::vector<std::size_t> t(n, 0);
  while (out.morphisms.size() < bound.hom_limit) {
    out.morphisms.push_back(Morphism{x, y, t});
    std::size_t i = n;
    while (i > 0 && ++t[i - 1] == m) t[--i] = 0;
    if (i == 0) {
      out.complete = true;
      return out;
    }
  }
  return out;
}

BoolMatrices::Morphism Linearization::map(const FinFunBackend::Morphism& m) const {
  const std::size_t rows = target_->dim(m.cod), cols = target_->dim(m.dom);
  if (rows != source_->size(m.cod) || cols != source_->size(m.dom))
    fail(ErrorKind::IllTypedFunctor, "object sizes differ between " +
                                         m.dom.str() + " -> " + m.cod.str() +
                                         " and its image");
  Matrix<BooleanRing> mat(rows, cols);
  for (std::size_t x = 0; x < m.table.size(); ++x) mat(m.table[x], x) = 1;
  return target_->make(m.dom, m.cod, std::move(mat));
}

}  // namespace combs
