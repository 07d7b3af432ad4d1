// SPDX-License-Identifier: Apache-2.0
//
// hetsir - SIR statistics for heterogeneous Poisson wireless networks
// Copyright (C) 2026 the hetsir authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace hetsir {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the supported domain (e.g. gamma_fn(a <= 0)).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A required moment or integral does not exist for the given parameters.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// An iterative scheme ran out of budget; carries the best estimate so far.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double partial)
      : Error(what), partial_estimate(partial) {}
  double partial_estimate;
};

/// Two independent evaluation routes disagree beyond the claimed tolerance.
class AccuracyError : public Error {
 public:
  using Error::Error;
};

/// The request is valid mathematically but outside what this build supports.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// Scenario-file syntax or schema violation; message carries location info.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hetsir
