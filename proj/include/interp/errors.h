// Copyright 2026 The Interp Authors.
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

#ifndef INTERP_ERRORS_H_
#define INTERP_ERRORS_H_

#include <stdexcept>
#include <string>

namespace interp {

// Base for every domain error raised by the library. The CLI maps these to
// exit status 1; anything else escaping is a bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPrime : public Error {
 public:
  using Error::Error;
};

class MixedFields : public Error {
 public:
  MixedFields() : Error("operands belong to different fields") {}
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DuplicateNode : public Error {
 public:
  using Error::Error;
};

class LinearlyDependentBasis : public Error {
 public:
  using Error::Error;
};

class FieldTooSmall : public Error {
 public:
  using Error::Error;
};

class InsufficientRedundancy : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidGenus : public Error {
 public:
  using Error::Error;
};

class InvalidCurveClass : public Error {
 public:
  using Error::Error;
};

class Overflow : public Error {
 public:
  using Error::Error;
};

}  // namespace interp

#endif  // INTERP_ERRORS_H_
