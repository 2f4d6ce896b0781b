/*
 * Copyright 2026 The zpfaff Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ZPFAFF_ERRORS_HPP
#define ZPFAFF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zpfaff {

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numeric parameter is outside its admissible range (θ ≤ 0, z = 0, ξ ∉ [0,1), ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// An argument is malformed or outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Argument sits on a pole of a special function.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A request would exceed a configured resource cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure: non-convergence, loss of accuracy, or an unvalidated domain.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace zpfaff

#endif  // ZPFAFF_ERRORS_HPP
