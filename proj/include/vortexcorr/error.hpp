// Copyright 2026 The vortexcorr Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file error.hpp
 * @brief Exception hierarchy shared by every vortexcorr module.
 *
 * The CLI maps these onto its stable exit codes (see tools/cli.cpp).
 */

#pragma once

#include <stdexcept>
#include <string>

namespace vortexcorr {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid user input (bad labels, out-of-range parameters, malformed files).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Polynomial order or index above the configured maximum.
class BoundsError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// Fermionic occupation above one.
class PauliViolation : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// Failure of a numerical procedure (quadrature residual, truncation, ...).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Occupation cutoff too small for the requested state.
class TruncationError : public NumericalError {
 public:
  TruncationError(const std::string& what, int required_cutoff)
      : NumericalError(what), required_cutoff_(required_cutoff) {}

  int required_cutoff() const noexcept { return required_cutoff_; }

 private:
  int required_cutoff_;
};

/// A density that must be real picked up an imaginary part.
class AlgebraInconsistency : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Pair statistics requested for a state with no two-particle weight.
class NoPairs : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Sampling method unsuitable for the state (e.g. rejection rate too low).
class MethodError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Relative-angle law requested for a state that is not rotation invariant.
class AnisotropicState : public Error {
 public:
  using Error::Error;
};

/// Estimator invoked on an empty frame set.
class EmptyFrames : public Error {
 public:
  using Error::Error;
};

}  // namespace vortexcorr
