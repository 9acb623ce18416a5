// Copyright 2026 The ncoh Authors
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

namespace ncoh {

enum class ErrorKind {
  InhomogeneousSum,
  NonHomogeneousRelation,
  ZeroDegreeGenerator,
  DegreeBoundExceeded,
  ParseError,
  NotDegreeOneGenerated,
  WindowTooShallow,
  NotPresentedByProjectives,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the engine carries one of the kinds above so the
/// CLI can map it onto an exit code and a stable message prefix.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failures additionally report a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InhomogeneousSum: return "InhomogeneousSum";
    case ErrorKind::NonHomogeneousRelation: return "NonHomogeneousRelation";
    case ErrorKind::ZeroDegreeGenerator: return "ZeroDegreeGenerator";
    case ErrorKind::DegreeBoundExceeded: return "DegreeBoundExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotDegreeOneGenerated: return "NotDegreeOneGenerated";
    case ErrorKind::WindowTooShallow: return "WindowTooShallow";
    case ErrorKind::NotPresentedByProjectives: return "NotPresentedByProjectives";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace ncoh
