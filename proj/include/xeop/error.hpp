// Copyright 2026 The xeop Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef XEOP_ERROR_HPP
#define XEOP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace xeop {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid model or polynomial parameters (violated invariant).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an operation (e.g. g <= 0 for the Laguerre ODE).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Requested state index is not a bound state.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A rational denominator vanished at the requested point.
class PoleError : public Error {
 public:
  PoleError(const std::string& what, double where)
      : Error(what + " (at " + std::to_string(where) + ")"), where_(where) {}
  double where() const noexcept { return where_; }

 private:
  double where_;
};

/// A sampled function returned NaN or infinity.
class NonFiniteError : public Error {
 public:
  NonFiniteError(const std::string& what, double where)
      : Error(what + " (at " + std::to_string(where) + ")"), where_(where) {}
  double where() const noexcept { return where_; }

 private:
  double where_;
};

/// An iterative procedure failed to converge.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace xeop

#endif  // XEOP_ERROR_HPP
