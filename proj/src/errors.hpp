// Copyright 2026 The ohsolve Authors
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

#ifndef OHS_ERRORS_HPP_
#define OHS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ohs {

enum class ErrorCode {
  kInvalidArgument = 1,
  kParse,
  kMalformedSequence,
  kOverlappingGroups,
  kUnsupported,
  kNumerical,
  kContractViolation,
  kIo,
  kCapExceeded,
  kGeneration,
  kValidation,
};

// Base exception for everything the core throws. The C API maps `code()` to
// an ohs_error value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(ErrorCode::kParse,
              "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Thrown between LP solves once the configured wall-clock budget is spent.
class TimeoutError : public std::runtime_error {
 public:
  TimeoutError() : std::runtime_error("time limit reached") {}
};

}  // namespace ohs

#endif  // OHS_ERRORS_HPP_
