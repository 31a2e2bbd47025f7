// Copyright 2026 The magnonic Authors
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

#ifndef MAGNONIC_ERRORS_HPP
#define MAGNONIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace magnonic {

/// Argument outside the mathematical domain of an operation (bad site, bad weight, m > n, ...).
class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Empty or inconsistent lattice size.
class InvalidSizeError : public DomainError {
  public:
    using DomainError::DomainError;
};

/// Requested lattice exceeds the configured site cap.
class ResourceError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Iterative eigensolver did not reach the requested residual.
class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string &what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

  private:
    double residual_;
};

/// Two independent routes to the same quantity disagree beyond tolerance.
class ConsistencyError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

}  // namespace magnonic

#endif  // MAGNONIC_ERRORS_HPP
