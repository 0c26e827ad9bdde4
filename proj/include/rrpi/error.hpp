// Copyright 2026 The rrpi Authors
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

namespace rrpi {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation
/// (ln of a non-positive number, q outside (0,1), ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Two Reals of different working precision were combined.
class PrecisionMismatch : public Error {
 public:
  using Error::Error;
};

/// A computation could not reach the requested working precision.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

/// The working precision is too small for the requested result.
class ContextTooSmall : public Error {
 public:
  using Error::Error;
};

/// An iteration (continued-fraction depth, Newton, root refinement)
/// exceeded its cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Root bracket without a sign change, or a root on the wrong branch.
class BracketError : public Error {
 public:
  using Error::Error;
};

}  // namespace rrpi
