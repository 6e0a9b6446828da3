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

#include "quncert/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "quncert/error.hpp"

namespace quncert {

namespace {

bool all_finite(std::span<const Complex> values) {
    return std::all_of(values.begin(), values.end(), [](const Complex& z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                             std::to_string(b) + ")");
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
    if (dim == 0) {
        throw DomainError("ComplexMatrix: dimension must be >= 1");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
    if (dim == 0) {
        throw DomainError("ComplexMatrix: dimension must be >= 1");
    }
    if (data_.size() != dim * dim) {
        throw DomainError("ComplexMatrix: expected " + std::to_string(dim * dim) + " entries, got " +
                          std::to_string(data_.size()));
    }
    if (!all_finite(data_)) {
        throw DomainError("ComplexMatrix: non-finite entry");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
    if (dim_ == 0) {
        throw DomainError("ComplexMatrix: dimension must be >= 1");
    }
    data_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
        if (row.size() != dim_) {
            throw DomainError("ComplexMatrix: ragged initializer");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
    if (!all_finite(data_)) {
        throw DomainError("ComplexMatrix: non-finite entry");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

double ComplexMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const auto& z : data_) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

double ComplexMatrix::max_abs() const {
    double best = 0.0;
    for (const auto& z : data_) {
        best = std::max(best, std::abs(z));
    }
    return best;
}

double ComplexMatrix::hermiticity_defect() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = r; c < dim_; ++c) {
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return worst;
}

ComplexVector ComplexMatrix::apply(std::span<const Complex> v) const {
    require_same_dim(dim_, v.size(), "ComplexMatrix::apply");
    ComplexVector out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        Complex acc = 0.0;
        const Complex* row = &data_[r * dim_];
        for (std::size_t c = 0; c < dim_; ++c) {
            acc += row[c] * v[c];
        }
        out[r] = acc;
    }
    return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    require_same_dim(dim_, other.dim_, "ComplexMatrix::operator+");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += other.data_[i];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    require_same_dim(dim_, other.dim_, "ComplexMatrix::operator-");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= other.data_[i];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
    for (auto& z : data_) {
        z *= scale;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a.dim(), b.dim(), "ComplexMatrix::operator*");
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex lhs = a(r, k);
            if (lhs == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += lhs * b(k, c);
            }
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a.dim(), b.dim(), "max_abs_diff");
    double worst = 0.0;
    const auto ea = a.entries();
    const auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) {
        worst = std::max(worst, std::abs(ea[i] - eb[i]));
    }
    return worst;
}

HermitianObservable::HermitianObservable(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
    const double tol = kHermitianRelTol * matrix_.frobenius_norm();
    const std::size_t n = matrix_.dim();
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = r; c < n; ++c) {
            const double defect = std::abs(matrix_(r, c) - std::conj(matrix_(c, r)));
            if (defect > tol) {
                throw DomainError("matrix is not Hermitian: entry (" + std::to_string(r) + "," +
                                  std::to_string(c) + ") differs from conj of (" + std::to_string(c) +
                                  "," + std::to_string(r) + ") by " + std::to_string(defect));
            }
        }
    }
    for (std::size_t r = 0; r < n; ++r) {
        matrix_(r, r) = matrix_(r, r).real();
        for (std::size_t c = r + 1; c < n; ++c) {
            const Complex avg = 0.5 * (matrix_(r, c) + std::conj(matrix_(c, r)));
            matrix_(r, c) = avg;
            matrix_(c, r) = std::conj(avg);
        }
    }
}

double HermitianObservable::spectral_norm() const {
    const auto spectrum = hermitian_eigendecomposition(*this);
    return std::max(std::abs(spectrum.min_eigenvalue()), std::abs(spectrum.max_eigenvalue()));
}

QuantumState::QuantumState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) {
        throw DomainError("QuantumState: dimension must be >= 1");
    }
    if (!all_finite(amplitudes_)) {
        throw DomainError("QuantumState: non-finite amplitude");
    }
    double norm2 = 0.0;
    for (const auto& a : amplitudes_) {
        norm2 += std::norm(a);
    }
    if (std::abs(norm2 - 1.0) > kNormalizationTol) {
        throw DomainError("QuantumState: not normalized (|psi|^2 = " + std::to_string(norm2) + ")");
    }
}

QuantumState::QuantumState(std::initializer_list<Complex> amplitudes)
    : QuantumState(ComplexVector(amplitudes)) {}

QuantumState QuantumState::normalized(ComplexVector amplitudes) {
    double norm2 = 0.0;
    for (const auto& a : amplitudes) {
        norm2 += std::norm(a);
    }
    if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
        throw DomainError("QuantumState::normalized: zero or non-finite vector");
    }
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto& a : amplitudes) {
        a *= scale;
    }
    return QuantumState(std::move(amplitudes));
}

QuantumState QuantumState::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw DimensionError("QuantumState::basis: index out of range");
    }
    ComplexVector v(dim);
    v[index] = 1.0;
    return QuantumState(std::move(v));
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
    const std::size_t n = dim();
    ComplexMatrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto v = eigenvectors[k].amplitudes();
        for (std::size_t r = 0; r < n; ++r) {
            const Complex scaled = eigenvalues[k] * v[r];
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += scaled * std::conj(v[c]);
            }
        }
    }
    return out;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
    require_same_dim(a.size(), b.size(), "inner");
    Complex acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

Complex inner(const QuantumState& a, const QuantumState& b) {
    return inner(a.amplitudes(), b.amplitudes());
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a.dim(), b.dim(), "commutator");
    return a * b - b * a;
}

ComplexMatrix commutator(const HermitianObservable& a, const HermitianObservable& b) {
    return commutator(a.matrix(), b.matrix());
}

ComplexMatrix propagator(const SpectralDecomposition& spectrum, double t, double hbar) {
    if (!(hbar > 0.0) || !std::isfinite(hbar)) {
        throw DomainError("propagator: hbar must be positive and finite");
    }
    if (!std::isfinite(t)) {
        throw DomainError("propagator: time must be finite");
    }
    const std::size_t n = spectrum.dim();
    ComplexMatrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Complex phase = std::polar(1.0, -spectrum.eigenvalues[k] * t / hbar);
        const auto v = spectrum.eigenvectors[k].amplitudes();
        for (std::size_t r = 0; r < n; ++r) {
            const Complex scaled = phase * v[r];
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += scaled * std::conj(v[c]);
            }
        }
    }
    return out;
}

ComplexMatrix propagator(const HermitianObservable& h, double t, double hbar) {
    return propagator(hermitian_eigendecomposition(h), t, hbar);
}

}  // namespace quncert
