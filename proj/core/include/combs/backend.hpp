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

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "combs/errors.hpp"
#include "combs/term.hpp"
#include "combs/word.hpp"

namespace combs {

/// What a base category offers beyond the symmetric monoidal core.
struct Capabilities {
  bool cartesian = false;
  bool compact_closed = false;
  bool dagger = false;
  bool enumerable = false;
  bool commutative_symmetry = false;
  /// The braid probe alone decides comb equivalence (compact closed or
  /// unitary backends).
  bool braid_complete = false;
  /// Morphism values are linear in the probe, so agreement on a spanning
  /// family of a hom-set implies agreement on the whole hom-set.
  bool linear = false;
  /// hom(X, Y) is empty unless X and Y have the same word length.
  bool length_graded = false;
  /// Extension words longer than this add no distinguishing power to
  /// extended probes.
  std::optional<std::size_t> extension_saturation;
};

/// Enumeration budget. `word_length` caps generated object words,
/// `hom_limit` caps the size of any single enumerated hom-set.
struct Bound {
  std::size_t word_length = 2;
  std::size_t hom_limit = 1u << 16;
};

template <class M>
struct HomEnumeration {
  std::vector<M> morphisms;
  /// Every morphism of the hom-set is (up to equality) in the list.
  bool complete = false;
  /// The list linearly spans the hom-set (only meaningful for linear
  /// backends).
  bool spanning = false;
};

struct ObjectEnumeration {
  std::vector<ObjectWord> words;
  bool complete = false;
};

/// The symmetric monoidal core every backend must provide. All backends
/// are strict: objects are words and tensor is concatenation.
///
/// compose(a, b) is diagrammatic: a first, then b.
template <class B>
concept SymmetricMonoidal =
    requires(const B& b, const typename B::Morphism& m, const ObjectWord& w,
             const std::string& name, const nlohmann::json& j) {
      typename B::Morphism;
      { b.normalize(w) } -> std::same_as<ObjectWord>;
      { b.dom(m) } -> std::convertible_to<ObjectWord>;
      { b.cod(m) } -> std::convertible_to<ObjectWord>;
      { b.identity(w) } -> std::same_as<typename B::Morphism>;
      { b.compose(m, m) } -> std::same_as<typename B::Morphism>;
      { b.tensor(m, m) } -> std::same_as<typename B::Morphism>;
      { b.symmetry(w, w) } -> std::same_as<typename B::Morphism>;
      { b.equal(m, m) } -> std::same_as<bool>;
      { b.capabilities() } -> std::same_as<Capabilities>;
      { b.tolerance() } -> std::convertible_to<double>;
      { b.generator(name) } -> std::same_as<typename B::Morphism>;
      { b.from_literal(w, w, j) } -> std::same_as<typename B::Morphism>;
      { b.to_term(m) } -> std::same_as<Term>;
      { b.signature() } -> std::same_as<Signature>;
    };

template <class B>
concept Enumerable =
    SymmetricMonoidal<B> &&
    requires(const B& b, const ObjectWord& w, const Bound& bound) {
      { b.enumerate_objects(bound) } -> std::same_as<ObjectEnumeration>;
      {
        b.enumerate_hom(w, w, bound)
      } -> std::same_as<HomEnumeration<typename B::Morphism>>;
    };

template <class B>
concept CompactClosed =
    SymmetricMonoidal<B> && requires(const B& b, const ObjectWord& w) {
      { b.cup(w) } -> std::same_as<typename B::Morphism>;
      { b.cap(w) } -> std::same_as<typename B::Morphism>;
    };

template <class B>
concept Cartesian =
    SymmetricMonoidal<B> && requires(const B& b, const ObjectWord& w) {
      { b.copy(w) } -> std::same_as<typename B::Morphism>;
      { b.discard(w) } -> std::same_as<typename B::Morphism>;
      {
        b.inhabitant(w)
      } -> std::same_as<std::optional<typename B::Morphism>>;
    };

template <class B>
concept Dagger = SymmetricMonoidal<B> &&
                 requires(const B& b, const typename B::Morphism& m) {
                   { b.dagger(m) } -> std::same_as<typename B::Morphism>;
                 };

// ---------------------------------------------------------------------------
// Helpers shared by every construction on top of a backend.

template <SymmetricMonoidal B>
bool same_object(const B& b, const ObjectWord& x, const ObjectWord& y) {
  return b.normalize(x) == b.normalize(y);
}

template <SymmetricMonoidal B>
std::string type_string(const B& b, const typename B::Morphism& m) {
  return b.dom(m).str() + " -> " + b.cod(m).str();
}

template <SymmetricMonoidal B>
void require_type(const B& b, const typename B::Morphism& m,
                  const ObjectWord& dom, const ObjectWord& cod,
                  const std::string& what,
                  ErrorKind kind = ErrorKind::TypeMismatch) {
  if (!same_object(b, b.dom(m), dom) || !same_object(b, b.cod(m), cod))
    fail(kind, what + " has type " + type_string(b, m) + ", expected " +
                   dom.str() + " -> " + cod.str());
}

/// Removes `prefix` from the front of `whole`. On commutative backends
/// the removal is a multiset difference.
template <SymmetricMonoidal B>
std::optional<ObjectWord> strip_prefix(const B& b, const ObjectWord& whole,
                                       const ObjectWord& prefix) {
  const auto w = b.normalize(whole).factors();
  const auto p = b.normalize(prefix).factors();
  if (b.capabilities().commutative_symmetry) {
    std::vector<std::string> rest = w;
    for (const auto& f : p) {
      auto it = std::find(rest.begin(), rest.end(), f);
      if (it == rest.end()) return std::nullopt;
      rest.erase(it);
    }
    return ObjectWord(std::move(rest));
  }
  if (p.size() > w.size() || !std::equal(p.begin(), p.end(), w.begin()))
    return std::nullopt;
  return ObjectWord(std::vector<std::string>(w.begin() + p.size(), w.end()));
}

template <SymmetricMonoidal B>
std::optional<ObjectWord> strip_suffix(const B& b, const ObjectWord& whole,
                                       const ObjectWord& suffix) {
  if (b.capabilities().commutative_symmetry)
    return strip_prefix(b, whole, suffix);
  const auto w = b.normalize(whole).factors();
  const auto s = b.normalize(suffix).factors();
  if (s.size() > w.size() || !std::equal(s.rbegin(), s.rend(), w.rbegin()))
    return std::nullopt;
  return ObjectWord(std::vector<std::string>(w.begin(), w.end() - s.size()));
}

/// Tensor of identities on the given blocks with `m` at position `at`.
template <SymmetricMonoidal B>
typename B::Morphism whisker(const B& b, const ObjectWord& left,
                             const typename B::Morphism& m,
                             const ObjectWord& right) {
  return b.tensor(b.tensor(b.identity(left), m), b.identity(right));
}

/// Permutes word blocks: blocks[0..n) -> blocks[order[0]] ... blocks[order[n-1]],
/// built from adjacent symmetries.
template <SymmetricMonoidal B>
typename B::Morphism permute_blocks(const B& b,
                                    const std::vector<ObjectWord>& blocks,
                                    const std::vector<std::size_t>& order) {
  std::vector<std::size_t> cur(blocks.size());
  std::iota(cur.begin(), cur.end(), 0);
  auto word_of = [&](std::size_t from, std::size_t to) {
    ObjectWord w;
    for (std::size_t i = from; i < to; ++i) w = w * blocks[cur[i]];
    return w;
  };
  auto acc = b.identity(word_of(0, cur.size()));
  for (std::size_t p = 0; p < order.size(); ++p) {
    std::size_t q = p;
    while (q < cur.size() && cur[q] != order[p]) ++q;
    if (q == cur.size())
      fail(ErrorKind::TypeMismatch, "permute_blocks: order is not a permutation");
    for (; q > p; --q) {
      auto swap = whisker(b, word_of(0, q - 1),
                          b.symmetry(blocks[cur[q - 1]], blocks[cur[q]]),
                          word_of(q + 1, cur.size()));
      acc = b.compose(acc, swap);
      std::swap(cur[q - 1], cur[q]);
    }
  }
  return acc;
}

}  // namespace combs
