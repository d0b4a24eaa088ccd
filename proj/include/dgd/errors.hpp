// Copyright 2026 The dgdensity Authors
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

namespace dgd {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial, field, word or script text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two objects built for different surfaces were combined.
class ParameterMismatch : public Error {
 public:
  using Error::Error;
};

/// Input outside an operation's domain (n < 2, non-invariant monomial, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A derivation did not become nilpotent within the iteration bound.
class NilpotencyBoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace dgd
