// Copyright 2026 The glambert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace glambert {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller broke an operation's precondition (mismatched orders, bad n, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class NonInvertibleSeries : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

/// The expansion point sits on a pole of f.
class PoleAtBase : public Error {
 public:
  using Error::Error;
};

/// Closed form divides by zero for these parameters (a = b, s = t).
class DegenerateParams : public Error {
 public:
  using Error::Error;
};

class NoRootInInterval : public Error {
 public:
  using Error::Error;
};

class InsufficientTerms : public Error {
 public:
  using Error::Error;
};

class OutOfBranch : public Error {
 public:
  using Error::Error;
};

}  // namespace glambert
