// Copyright 2026 The pcml Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PCML_ERRORS_HPP
#define PCML_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pcml {

// Malformed or out-of-domain inputs (bad parameters, shape mismatches,
// non-normalized distributions).
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical routine could not reach the requested tolerance within its
// subdivision budget. Carries the error estimate it did achieve.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double achieved_error)
      : std::runtime_error(what), achieved_error_(achieved_error) {}

  double achieved_error() const { return achieved_error_; }

 private:
  double achieved_error_;
};

// An enumeration or search would exceed a configured size cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A root-finding target could not be bracketed.
class NoSolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A property the implementation relies on (e.g. monotonicity of a bracketed
// function) was violated at runtime. Never silently ignored.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// File or stream I/O failure.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pcml

#endif  // PCML_ERRORS_HPP
