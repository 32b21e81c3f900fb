// Copyright 2026 The arcgon Authors
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

#ifndef ARCGON_ERRORS_HPP
#define ARCGON_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arcgon {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point, arc or argument that is not valid for the order it is used with.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Offset arithmetic left the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

enum class NotAnArcReason { equal, edge };

class NotAnArc : public DomainError {
 public:
  NotAnArc(NotAnArcReason reason, const std::string& what)
      : DomainError(what), reason_(reason) {}
  NotAnArcReason reason() const noexcept { return reason_; }

 private:
  NotAnArcReason reason_;
};

/// A set-level decider was called on a set that has two crossing arcs.
class NotNoncrossing : public DomainError {
 public:
  using DomainError::DomainError;
};

class CannotFlip : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotReachable : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Inexact division in the Laurent ring.
class NotLaurent : public Error {
 public:
  using Error::Error;
};

/// Input outside what the exact deciders are built to handle (for example a
/// finite family so long that enumerating it is unreasonable).
class Unsupported : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed text describing something that is not a valid arc set.
class SemanticError : public Error {
 public:
  SemanticError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An internal invariant failed. Never expected; surfaces as exit code 1.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace arcgon

#endif  // ARCGON_ERRORS_HPP
