// Copyright 2026 The bosdsl Authors
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

namespace bosdsl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix or state shapes that do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Gate parameter that is non-finite or outside its domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A computation that would exceed a configured size bound.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Non-finite objective values and similar numerical breakdowns.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace bosdsl
