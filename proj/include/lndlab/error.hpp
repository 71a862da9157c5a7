// Copyright 2026 The lndlab Authors
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

#ifndef LNDLAB_ERROR_HPP
#define LNDLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lndlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownVariable : public Error {
 public:
  explicit UnknownVariable(const std::string& name)
      : Error("unknown variable '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Raised by exact division when the divisor does not divide the dividend.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

/// A configurable cap (variables, degree, iteration count) was exceeded.
class GuardrailExceeded : public Error {
 public:
  using Error::Error;
};

/// A structural property the theory guarantees did not hold on the input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(format(what, line, column)), message_(what), line_(line), column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  /// The message without the position prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    if (line <= 0) return what + " (column " + std::to_string(column) + ")";
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }
  std::string message_;
  int line_;
  int column_;
};

class UndeclaredVariable : public ParseError {
 public:
  UndeclaredVariable(const std::string& name, int line, int column)
      : ParseError("undeclared variable '" + name + "'", line, column), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

}  // namespace lndlab

#endif  // LNDLAB_ERROR_HPP
