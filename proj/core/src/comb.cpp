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

#include "combs/comb.hpp"
#include "combs/optic.hpp"

namespace combs {

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::BraidOnly: return "braid";
    case Strategy::CartesianPair: return "cartesian";
    case Strategy::Enumerate: return "enumerate";
    case Strategy::PositiveOnly: return "positive";
  }
  return "?";
}

Strategy parse_strategy(const std::string& text) {
  for (auto s : {Strategy::BraidOnly, Strategy::CartesianPair,
                 Strategy::Enumerate, Strategy::PositiveOnly})
    if (text == to_string(s)) return s;
  fail(ErrorKind::ParseError, "unknown strategy '" + text +
                                  "' (braid, cartesian, enumerate, positive)");
}

const char* to_string(SlideDirection d) {
  return d == SlideDirection::PushDown ? "push-down" : "push-up";
}

}  // namespace combs
