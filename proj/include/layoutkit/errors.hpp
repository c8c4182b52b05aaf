// Copyright 2026 The layoutkit Authors. All Rights Reserved.
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

namespace layoutkit {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition or value invariant was violated by the caller.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Bytes on disk could not be decoded.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Decoded content is well-formed but violates the data model.
class SchemaError : public Error {
 public:
  using Error::Error;
};

class EngineError : public Error {
 public:
  EngineError(const std::string& what, int exit_status, std::string diagnostics)
      : Error(what), exit_status_(exit_status), diagnostics_(std::move(diagnostics)) {}

  int exit_status() const noexcept { return exit_status_; }
  const std::string& diagnostics() const noexcept { return diagnostics_; }

 private:
  int exit_status_;
  std::string diagnostics_;
};

class TimeoutError : public Error {
 public:
  using Error::Error;
};

}  // namespace layoutkit
