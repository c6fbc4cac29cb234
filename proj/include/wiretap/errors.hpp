// SPDX-License-Identifier: Apache-2.0
//
// wiretap2 - closed-form secrecy capacity of two-antenna MIMO wiretap channels
// Copyright (C) 2026 The wiretap2 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace wiretap {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Matrix or vector dimensions do not fit the operation.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Polynomial with all coefficients equal to zero.
class DegeneratePolynomialError : public Error {
public:
    using Error::Error;
};

// Matrix too close to singular for a stable solve.
class ConditioningError : public Error {
public:
    using Error::Error;
};

// Arithmetic produced a value that valid inputs can never produce.
class NumericalError : public Error {
public:
    using Error::Error;
};

// Malformed channel file; the message names the offending field.
class ParseError : public Error {
public:
    using Error::Error;
};

// The closed-form result failed its own consistency check.
class InconsistencyError : public Error {
public:
    InconsistencyError(const std::string& what, double expected, double actual)
        : Error(what + " (expected " + std::to_string(expected) + ", got " + std::to_string(actual) + ")"),
          expected_(expected), actual_(actual) {}

    double expected() const noexcept { return expected_; }
    double actual() const noexcept { return actual_; }

private:
    double expected_;
    double actual_;
};

} // namespace wiretap
