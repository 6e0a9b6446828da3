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

// Cyclic Jacobi eigensolver for dense Hermitian matrices.
//
// Each (p, q) rotation first removes the phase of a_pq with a diagonal unitary
// and then applies the classical real symmetric Jacobi rotation, so the
// combined 2x2 unitary acting on columns p and q is
//
//     [ c            s          ]
//     [ -s e^{-i phi}  c e^{-i phi} ]      with a_pq = |a_pq| e^{i phi}.
//
// A <- J^dagger A J annihilates a_pq; V <- V J accumulates eigenvectors.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "quncert/error.hpp"
#include "quncert/hilbert.hpp"

namespace quncert {

namespace {

constexpr double kPhaseTieTol = 1e-12;

double off_diagonal_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            if (r != c) {
                sum += std::norm(a(r, c));
            }
        }
    }
    return std::sqrt(sum);
}

void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) {
        return;
    }
    const Complex phase = std::conj(apq) / mag;  // e^{-i phi}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    const double theta = (aqq - app) / (2.0 * mag);
    double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) {
        t = -t;
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const Complex jpp = c;
    const Complex jpq = s;
    const Complex jqp = -s * phase;
    const Complex jqq = c * phase;

    const std::size_t n = a.dim();
    // A <- A J (columns p, q)
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * jpp + akq * jqp;
        a(k, q) = akp * jpq + akq * jqq;
    }
    // A <- J^dagger A (rows p, q)
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
        a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = vkp * jpp + vkq * jqp;
        v(k, q) = vkp * jpq + vkq * jqq;
    }
}

// Index of the largest-modulus component; lowest index wins ties.
std::size_t dominant_index(std::span<const Complex> column) {
    std::size_t best = 0;
    double best_mag = std::abs(column[0]);
    for (std::size_t i = 1; i < column.size(); ++i) {
        const double mag = std::abs(column[i]);
        if (mag > best_mag + kPhaseTieTol) {
            best = i;
            best_mag = mag;
        }
    }
    return best;
}

}  // namespace

SpectralDecomposition hermitian_eigendecomposition(const HermitianObservable& observable,
                                                   const JacobiOptions& options) {
    ComplexMatrix a = observable.matrix();
    const std::size_t n = a.dim();
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = a.frobenius_norm();
    const double target = options.relative_tolerance * scale;

    double off = off_diagonal_norm(a);
    int sweeps = 0;
    while (off > target) {
        if (sweeps == options.max_sweeps) {
            throw ConvergenceError("hermitian_eigendecomposition: no convergence after " +
                                       std::to_string(options.max_sweeps) +
                                       " sweeps (off-diagonal norm " + std::to_string(off) + ")",
                                   off);
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                rotate(a, v, p, q);
            }
        }
        ++sweeps;
        off = off_diagonal_norm(a);
    }

    struct Pair {
        double value;
        ComplexVector vector;
        std::size_t dominant;
    };
    std::vector<Pair> pairs;
    pairs.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        ComplexVector column(n);
        for (std::size_t r = 0; r < n; ++r) {
            column[r] = v(r, k);
        }
        const std::size_t dom = dominant_index(column);
        const Complex fix = std::conj(column[dom]) / std::abs(column[dom]);
        for (auto& z : column) {
            z *= fix;
        }
        column[dom] = std::abs(column[dom]);
        pairs.push_back({a(k, k).real(), std::move(column), dom});
    }

    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const Pair& x, const Pair& y) { return x.value < y.value; });

    // Degenerate clusters are ordered by dominant component index.
    const double degenerate_tol = 1e-12 * std::max(1.0, scale);
    for (std::size_t begin = 0; begin < n;) {
        std::size_t end = begin + 1;
        while (end < n && pairs[end].value - pairs[begin].value <= degenerate_tol) {
            ++end;
        }
        std::stable_sort(pairs.begin() + static_cast<std::ptrdiff_t>(begin),
                         pairs.begin() + static_cast<std::ptrdiff_t>(end),
                         [](const Pair& x, const Pair& y) { return x.dominant < y.dominant; });
        begin = end;
    }

    SpectralDecomposition out;
    out.eigenvalues.reserve(n);
    out.eigenvectors.reserve(n);
    for (auto& pair : pairs) {
        out.eigenvalues.push_back(pair.value);
        out.eigenvectors.push_back(QuantumState::normalized(std::move(pair.vector)));
    }
    // Reordering degenerate clusters can leave values out of order by at most
    // degenerate_tol; restore monotonicity without touching vectors.
    for (std::size_t k = 1; k < n; ++k) {
        out.eigenvalues[k] = std::max(out.eigenvalues[k], out.eigenvalues[k - 1]);
    }
    return out;
}

}  // namespace quncert
