// Copyright 2026 The quncert Authors
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

#ifndef QUNCERT_ERROR_HPP
#define QUNCERT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace quncert {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands of incompatible dimension.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A matrix that was required to be Hermitian is not, or a state is not
/// normalized, or some other precondition on the input value was violated.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The Jacobi eigensolver hit its sweep cap.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double residual)
        : Error(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// The orthogonalization search found no crossing and no analytic certificate
/// rules one out; the caller should retry with a longer horizon.
class InconclusiveError : public Error {
public:
    InconclusiveError(const std::string& what, double min_observed_overlap)
        : Error(what), min_observed_overlap_(min_observed_overlap) {}

    double min_observed_overlap() const noexcept { return min_observed_overlap_; }

private:
    double min_observed_overlap_;
};

}  // namespace quncert

#endif  // QUNCERT_ERROR_HPP
