// Copyright 2026 The polystar Authors.
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

namespace polystar {

/// Base of every error raised by the kernel. The CLI maps subclasses onto
/// distinct exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input. Carries a 1-based source position.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// Well-formed input that combines operands of incompatible kinds.
class TypeError : public Error {
public:
    using Error::Error;
};

/// Numeric evaluation could not reach the requested tolerance.
class NumericError : public Error {
public:
    using Error::Error;
};

/// An operation was applied outside the domain where it is defined
/// (star of a non-plane element, non-Laurent rewriting input, divergent
/// integration constants, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace polystar
