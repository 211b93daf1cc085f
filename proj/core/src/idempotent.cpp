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

#include "combs/instances/idempotent.hpp"

namespace combs {

std::size_t IdempotentBackend::arity(const ObjectWord& w) const {
  for (const auto& f : w.factors())
    if (f != object_) fail(ErrorKind::UnknownGenerator, "object " + f);
  return w.size();
}

ObjectWord IdempotentBackend::power(std::size_t n) const {
  return ObjectWord(std::vector<std::string>(n, object_));
}

ObjectWord IdempotentBackend::normalize(const ObjectWord& w) const {
  auto f = w.factors();
  std::sort(f.begin(), f.end());
  return ObjectWord(std::move(f));
}

IdempotentBackend::Morphism IdempotentBackend::compose(
    const Morphism& first, const Morphism& second) const {
  if (first.arity != second.arity)
    fail(ErrorKind::TypeMismatch, "compose " + cod(first).str() + " with " +
                                      dom(second).str());
  return {first.arity, first.touched || second.touched};
}

Capabilities IdempotentBackend::capabilities() const {
  Capabilities c;
  c.enumerable = true;
  c.commutative_symmetry = true;
  c.length_graded = true;
  // Any probe λ: C -> C on a longer extension is either the identity or
  // touched, and a touched λ already exists on C = A.
  c.extension_saturation = 1;
  return c;
}

IdempotentBackend::Morphism IdempotentBackend::generator(
    const std::string& name) const {
  if (name != idem_) fail(ErrorKind::UnknownGenerator, name);
  return {1, true};
}

IdempotentBackend::Morphism IdempotentBackend::from_literal(
    const ObjectWord& d, const ObjectWord& c, const nlohmann::json& j) const {
  if (arity(d) != arity(c))
    fail(ErrorKind::TypeError, "no morphisms " + d.str() + " -> " + c.str());
  if (!j.is_boolean()) fail(ErrorKind::ParseError, "idempotent literal must be a boolean");
  const bool touched = j.get<bool>();
  if (touched && d.is_unit())
    fail(ErrorKind::TypeError, "the unit has no non-identity endomorphism");
  return {d.size(), touched};
}

Term IdempotentBackend::to_term(const Morphism& m) const {
  if (!m.touched) return Term::identity(power(m.arity));
  if (m.arity == 1) return Term::generator(idem_);
  return Term::generator(idem_) * Term::identity(power(m.arity - 1));
}

Signature IdempotentBackend::signature() const {
  Signature s;
  s.generators[idem_] = {power(1), power(1)};
  s.normalize = [this](const ObjectWord& w) { return normalize(w); };
  return s;
}

ObjectEnumeration IdempotentBackend::enumerate_objects(const Bound& bound) const {
  return {words_up_to({object_}, bound.word_length, true), false};
}

HomEnumeration<IdempotentBackend::Morphism> IdempotentBackend::enumerate_hom(
    const ObjectWord& x, const ObjectWord& y, const Bound& bound) const {
  HomEnumeration<Morphism> out;
  out.complete = true;
  const std::size_t n = arity(x);
  if (n != arity(y)) return out;
  out.morphisms.push_back({n, false});
  if (n > 0 && bound.hom_limit > 1) out.morphisms.push_back({n, true});
  out.complete = n == 0 || bound.hom_limit > 1;
  return out;
}

}  // namespace combs
