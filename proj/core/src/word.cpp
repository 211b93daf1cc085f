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

#include "combs/word.hpp"

#include <algorithm>
#include <sstream>

#include "combs/errors.hpp"

namespace combs {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::NotEnumerable: return "NotEnumerable";
    case ErrorKind::BadSplit: return "BadSplit";
    case ErrorKind::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorKind::IncompatibleStrategy: return "IncompatibleStrategy";
    case ErrorKind::IllTypedFunctor: return "IllTypedFunctor";
    case ErrorKind::NonComposableMove: return "NonComposableMove";
    case ErrorKind::NotCartesian: return "NotCartesian";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotDaggerBackend: return "NotDaggerBackend";
    case ErrorKind::HoleMismatch: return "HoleMismatch";
    case ErrorKind::UnsupportedShape: return "UnsupportedShape";
    case ErrorKind::NotCompactClosed: return "NotCompactClosed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::TypeError: return "TypeError";
  }
  return "Unknown";
}

ObjectWord ObjectWord::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> factors;
  std::string tok;
  while (in >> tok) {
    if (tok == "I") continue;
    factors.push_back(tok);
  }
  return ObjectWord(std::move(factors));
}

std::string dual_factor(const std::string& factor) {
  if (!factor.empty() && factor.back() == '*')
    return factor.substr(0, factor.size() - 1);
  return factor + "*";
}

std::string base_factor(const std::string& factor) {
  if (!factor.empty() && factor.back() == '*')
    return factor.substr(0, factor.size() - 1);
  return factor;
}

ObjectWord ObjectWord::dual() const {
  std::vector<std::string> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(dual_factor(f));
  return ObjectWord(std::move(out));
}

std::string ObjectWord::str() const {
  if (factors_.empty()) return "I";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += ' ';
    s += factors_[i];
  }
  return s;
}

ObjectWord operator*(const ObjectWord& a, const ObjectWord& b) {
  std::vector<std::string> out = a.factors_;
  out.insert(out.end(), b.factors_.begin(), b.factors_.end());
  return ObjectWord(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const ObjectWord& w) {
  return os << w.str();
}

std::vector<ObjectWord> words_up_to(const std::vector<std::string>& alphabet,
                                    std::size_t max_length, bool multiset) {
  std::vector<std::string> letters = alphabet;
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());

  std::vector<ObjectWord> out{ObjectWord{}};
  std::vector<std::vector<std::size_t>> layer{{}};
  for (std::size_t len = 1; len <= max_length && !letters.empty(); ++len) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& w : layer) {
      std::size_t start = (multiset && !w.empty()) ? w.back() : 0;
      for (std::size_t i = start; i < letters.size(); ++i) {
        auto v = w;
        v.push_back(i);
        next.push_back(std::move(v));
      }
    }
    for (const auto& w : next) {
      std::vector<std::string> f;
      for (auto i : w) f.push_back(letters[i]);
      out.emplace_back(std::move(f));
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace combs
