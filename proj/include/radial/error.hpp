// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The radial-mra Authors

#pragma once

#include <stdexcept>
#include <string>

namespace radial {

/// Argument outside the mathematical domain of an operation
/// (invalid hypergroup index, |x| > 1 for Chebyshev, a <= 0 for dilation, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Iterative refinement failed to converge.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two objects that must share a discretization do not.
class GridMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical precondition (Riesz bound, filter identity, support, ...) is
/// violated beyond tolerance.
class ToleranceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent file content.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace radial
