// Copyright 2026 The pstbath Authors
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

// errors.hpp — exception types shared by every module.

#pragma once

#include <stdexcept>
#include <string>

namespace pstbath {

// Invalid parameters (chain length, temperature < 0, unnormalized amplitudes, ...).
class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Matrix dimensions that do not match (N, M).
class ShapeError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// A numerical routine failed or its result violates a contract (eigensolve, imaginary residue, ...).
class NumericError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Finite-precision evaluation cannot meet its accuracy target.
class PrecisionError : public NumericError {
  public:
    using NumericError::NumericError;
};

// Scenario input could not be read or parsed.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const noexcept { return line_; }

  private:
    int line_;
};

// Scenario parsed but a field is invalid. field() is the dotted key path.
class ValidationError : public std::invalid_argument {
  public:
    ValidationError(std::string field, const std::string& what)
        : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

  private:
    std::string field_;
};

// File could not be read or written.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace pstbath
