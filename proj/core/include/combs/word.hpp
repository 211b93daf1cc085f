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

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace combs {

/// A tensor word of generator objects. The empty word is the unit I.
/// A factor ending in '*' names the dual of the factor without it.
class ObjectWord {
 public:
  ObjectWord() = default;
  ObjectWord(std::initializer_list<std::string> factors) : factors_(factors) {}
  explicit ObjectWord(std::vector<std::string> factors)
      : factors_(std::move(factors)) {}

  /// Parses "I" or a whitespace separated list of names.
  static ObjectWord parse(std::string_view text);

  const std::vector<std::string>& factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return factors_.size(); }
  bool is_unit() const noexcept { return factors_.empty(); }

  ObjectWord dual() const;
  std::string str() const;

  friend ObjectWord operator*(const ObjectWord& a, const ObjectWord& b);
  friend auto operator<=>(const ObjectWord&, const ObjectWord&) = default;
  friend bool operator==(const ObjectWord&, const ObjectWord&) = default;

 private:
  std::vector<std::string> factors_;
};

std::ostream& operator<<(std::ostream& os, const ObjectWord& w);

/// Name of the dual of a single factor: "A" <-> "A*".
std::string dual_factor(const std::string& factor);
/// The generator a factor refers to, with any dual marker removed.
std::string base_factor(const std::string& factor);

/// Words over `alphabet` of length at most `max_length`, ordered by length
/// then lexicographically. With `multiset` only sorted words are produced.
std::vector<ObjectWord> words_up_to(const std::vector<std::string>& alphabet,
                                    std::size_t max_length, bool multiset);

}  // namespace combs
