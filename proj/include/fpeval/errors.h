// Copyright 2026 The fpeval Authors
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

#ifndef FPEVAL_ERRORS_H_
#define FPEVAL_ERRORS_H_

#include <stdexcept>
#include <string>

namespace fpeval {

// Base class for every error raised by the library. `kind()` is a short
// stable tag used by the CLI for structured diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error("io", message) {}
};

class FormatError : public Error {
 public:
  explicit FormatError(const std::string& message)
      : Error("format", message) {}
};

// Precondition on a numeric argument violated (empty distribution, zero
// users, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message)
      : Error("domain", message) {}
};

class ConfigurationError : public Error {
 public:
  explicit ConfigurationError(const std::string& message)
      : Error("configuration", message) {}
};

class NotObservedError : public Error {
 public:
  explicit NotObservedError(const std::string& message)
      : Error("not-observed", message) {}
};

class InsufficientDataError : public Error {
 public:
  explicit InsufficientDataError(const std::string& message)
      : Error("insufficient-data", message) {}
};

class SampleTooLargeError : public Error {
 public:
  explicit SampleTooLargeError(const std::string& message)
      : Error("sample-too-large", message) {}
};

class SpecError : public Error {
 public:
  explicit SpecError(const std::string& message) : Error("spec", message) {}
};

// A dataset record lacks data an operation requires (e.g. a screen
// resolution for strategy scoring).
class DataError : public Error {
 public:
  explicit DataError(const std::string& message) : Error("data", message) {}
};

}  // namespace fpeval

#endif  // FPEVAL_ERRORS_H_
