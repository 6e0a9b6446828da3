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

#include "quncert/qstat.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "quncert/error.hpp"

namespace quncert {

namespace {

constexpr double kImagResidueTol = 1e-10;
constexpr double kVarianceClamp = 1e-12;

void require_dims(const HermitianObservable& a, const QuantumState& psi, const char* what) {
    if (a.dim() != psi.dim()) {
        throw DimensionError(std::string(what) + ": observable is " + std::to_string(a.dim()) +
                             "-dimensional, state is " + std::to_string(psi.dim()));
    }
}

double real_expectation(const HermitianObservable& a, std::span<const Complex> psi,
                        std::span<const Complex> a_psi) {
    const Complex value = inner(psi, a_psi);
    const double tol = kImagResidueTol * std::max(1.0, a.matrix().frobenius_norm());
    if (std::abs(value.imag()) > tol) {
        throw DomainError("expectation: imaginary residue " + std::to_string(value.imag()) +
                          " exceeds tolerance");
    }
    return value.real();
}

}  // namespace

double expectation(const HermitianObservable& a, const QuantumState& psi) {
    require_dims(a, psi, "expectation");
    const auto a_psi = a.matrix().apply(psi.amplitudes());
    return real_expectation(a, psi.amplitudes(), a_psi);
}

StatSummary stats(const HermitianObservable& a, const QuantumState& psi) {
    require_dims(a, psi, "stats");
    const auto amps = psi.amplitudes();
    auto centered = a.matrix().apply(amps);
    StatSummary out;
    out.mean = real_expectation(a, amps, centered);
    for (std::size_t i = 0; i < centered.size(); ++i) {
        centered[i] -= out.mean * amps[i];
    }
    double variance = 0.0;
    for (const auto& z : centered) {
        variance += std::norm(z);
    }
    if (variance < 0.0) {
        if (variance < -kVarianceClamp) {
            throw DomainError("stats: negative variance " + std::to_string(variance));
        }
        variance = 0.0;
    }
    out.variance = variance;
    out.stddev = std::sqrt(variance);
    return out;
}

CoherenceSummary l1_coherence(std::span<const Complex> amplitudes) {
    const std::size_t n = amplitudes.size();
    if (n < 2) {
        throw DimensionError("l1_coherence: basis dimension must be >= 2");
    }
    std::vector<double> moduli(n);
    double norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        moduli[i] = std::abs(amplitudes[i]);
        norm2 += moduli[i] * moduli[i];
    }
    if (std::abs(norm2 - 1.0) > 1e-10) {
        throw DomainError("l1_coherence: amplitudes not normalized");
    }

    double cross = 0.0;
    double spread = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            cross += moduli[i] * moduli[j];
            const double d = moduli[i] - moduli[j];
            spread += d * d;
        }
    }
    const double inv = 1.0 / static_cast<double>(n - 1);
    CoherenceSummary out;
    out.basis_dim = n;
    out.coherence = 2.0 * cross * inv;
    // 1 - C == spread/(n-1) for normalized moduli; this form keeps P accurate
    // near C = 1 where sqrt(1 - C^2) would amplify rounding.
    const double one_minus_c = spread * inv;
    out.predictability = std::sqrt(std::max(0.0, one_minus_c * (2.0 - one_minus_c)));
    return out;
}

CoherenceSummary l1_coherence(const QuantumState& psi, const SpectralDecomposition& basis) {
    if (psi.dim() != basis.dim()) {
        throw DimensionError("l1_coherence: state/basis dimension mismatch");
    }
    ComplexVector amps(psi.dim());
    for (std::size_t k = 0; k < basis.dim(); ++k) {
        amps[k] = inner(basis.eigenvectors[k], psi);
    }
    return l1_coherence(amps);
}

}  // namespace quncert
