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

// Quantum statistics of observables in pure states, and the l1 norm of
// coherence / predictability of a state in a chosen orthonormal basis.

#ifndef QUNCERT_QSTAT_HPP
#define QUNCERT_QSTAT_HPP

#include <span>

#include "quncert/hilbert.hpp"

namespace quncert {

struct StatSummary {
    double mean = 0.0;
    double variance = 0.0;
    double stddev = 0.0;
};

struct CoherenceSummary {
    double coherence = 0.0;
    double predictability = 1.0;
    std::size_t basis_dim = 2;
};

/// <psi|A|psi>. The imaginary residue of the sesquilinear form must be below
/// 1e-10 * max(1, ||A||_F) and is discarded.
double expectation(const HermitianObservable& a, const QuantumState& psi);

/// Mean, variance ||(A - <A>) psi||^2 and stddev. Variances in [-1e-12, 0) are
/// clamped to 0; anything more negative throws.
StatSummary stats(const HermitianObservable& a, const QuantumState& psi);

/// C = 1/(n-1) sum_{i != j} |a_i||a_j| over ordered pairs, P = sqrt(1 - C^2).
/// Amplitudes must be normalized; n >= 2.
CoherenceSummary l1_coherence(std::span<const Complex> amplitudes);

/// Coherence of psi in the eigenbasis `basis`, a_i = <E_i|psi>.
CoherenceSummary l1_coherence(const QuantumState& psi, const SpectralDecomposition& basis);

}  // namespace quncert

#endif  // QUNCERT_QSTAT_HPP
