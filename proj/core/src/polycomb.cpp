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

#include "combs/polycomb.hpp"

namespace combs {

PolyObject dual(const PolyObject& p) {
  PolyObject out;
  for (const auto& [a, ap] : p) out.emplace_back(ap, a);
  return out;
}

std::string to_string(const PolyObject& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += "(" + p[i].first.str() + ", " + p[i].second.str() + ")";
  }
  return s + "]";
}

ObjectWord inputs_of(const PolyObject& p) {
  ObjectWord w;
  for (const auto& pair : p) w = w * pair.first;
  return w;
}

ObjectWord outputs_of(const PolyObject& p) {
  ObjectWord w;
  for (const auto& pair : p) w = w * pair.second;
  return w;
}

}  // namespace combs
