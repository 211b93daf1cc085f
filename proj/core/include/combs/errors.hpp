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

#include <stdexcept>
#include <string>

namespace combs {

enum class ErrorKind {
  UnknownGenerator,
  TypeMismatch,
  NotEnumerable,
  BadSplit,
  BoundaryMismatch,
  IncompatibleStrategy,
  IllTypedFunctor,
  NonComposableMove,
  NotCartesian,
  DimensionMismatch,
  NotDaggerBackend,
  HoleMismatch,
  UnsupportedShape,
  NotCompactClosed,
  ParseError,
  TypeError,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library. The kind is stable and is what the
/// tests and the CLI key on; the message is for humans.
class CombsError : public std::runtime_error {
 public:
  CombsError(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        message_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw CombsError(kind, message);
}

}  // namespace combs
