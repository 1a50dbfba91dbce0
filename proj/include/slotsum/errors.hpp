// Copyright 2026 The SlotSum Authors.
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slotsum {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller passed an argument or configuration outside the contract.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A slot key or literal would corrupt the [SLT] markup.
class MarkupError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Input data violates a domain invariant (duplicate keys, dangling ids, ...).
class DataError : public Error {
 public:
  using Error::Error;
};

// Malformed template markup. offset() is a byte offset into the markup.
class TemplateParseError : public DataError {
 public:
  TemplateParseError(const std::string& what, std::size_t offset)
      : DataError(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

enum class BackendErrorKind {
  kTimeout,           // transport failure or deadline exceeded, after retries
  kMalformedResponse, // body is not a valid wire-protocol response
  kBadStatus,         // server answered with a non-200 status
  kBadRequest,        // request cannot be served (e.g. no documents)
  kUnavailable,       // every query of an operation failed
};

const char* to_string(BackendErrorKind kind);

class BackendError : public Error {
 public:
  BackendError(BackendErrorKind kind, const std::string& what, int status = 0)
      : Error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        status_(status),
        detail_(what) {}
  BackendErrorKind kind() const noexcept { return kind_; }
  // The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }
  // HTTP status for kBadStatus, 0 otherwise.
  int status() const noexcept { return status_; }

 private:
  BackendErrorKind kind_;
  int status_;
  std::string detail_;
};

}  // namespace slotsum
