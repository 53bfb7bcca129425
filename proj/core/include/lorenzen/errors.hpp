// Copyright 2026 The lorenzen Authors
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

namespace lorenzen {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in groups of different rank.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument violates a documented precondition (empty set, n = 0, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// The requested engine does not handle this kind of positive cone.
class UnsupportedConeError : public Error {
 public:
  using Error::Error;
};

/// A semi-decidable relation answered Unknown where a verdict was required.
class BoundedRelationError : public Error {
 public:
  using Error::Error;
};

/// The monoid of ideals of a relation failed the cancellativity search.
class NonCancellativeError : public Error {
 public:
  using Error::Error;
};

/// Ideals or divisors over different monomial domains were combined.
class DomainMismatchError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check disagreed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace lorenzen
