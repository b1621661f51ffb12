// Copyright 2026 The detcirc Authors.
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

namespace detcirc {

enum class ErrorKind {
  kLabelMismatch,
  kLabelCollision,
  kNotEndomorphism,
  kNotSquare,
  kNotSkew,
  kTooLarge,
  kDanglingWire,
  kDuplicateLabel,
  kSizeMismatch,
  kNotBipartite,
  kEdgeMultiplicity,
  kParse,
  kInvalidArgument,
};

const char* to_string(ErrorKind kind);

// All library failures are reported with this exception type. The kind is
// stable and is what the C API maps onto status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason);

  // 1-based; 0 when the failure is not tied to a particular line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace detcirc
