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

// Dense complex linear algebra for finite-dimensional Hilbert spaces:
// matrices, normalized states, Hermitian eigendecomposition and the spectral
// propagator exp(-iHt/hbar).
//
// All types are immutable values once constructed and every free function is
// pure, so everything here may be shared across threads.

#ifndef QUNCERT_HILBERT_HPP
#define QUNCERT_HILBERT_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace quncert {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense n x n complex matrix, row-major.
class ComplexMatrix {
public:
    /// Zero matrix of dimension `dim` (>= 1).
    explicit ComplexMatrix(std::size_t dim);

    /// Row-major entries; throws DomainError unless there are exactly dim*dim
    /// finite values.
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

    /// Nested-list construction, mostly for tests: {{a, b}, {c, d}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);

    std::size_t dim() const noexcept { return dim_; }

    const Complex& operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }
    Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }

    std::span<const Complex> entries() const noexcept { return data_; }

    ComplexMatrix adjoint() const;
    double frobenius_norm() const;
    /// max_ij |M_ij|
    double max_abs() const;
    /// max_ij |M_ij - conj(M_ji)|
    double hermiticity_defect() const;

    ComplexVector apply(std::span<const Complex> v) const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    bool operator==(const ComplexMatrix&) const = default;

private:
    std::size_t dim_;
    std::vector<Complex> data_;
};

/// Largest elementwise modulus of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Relative Hermiticity tolerance: a matrix M counts as Hermitian when
/// hermiticity_defect(M) <= kHermitianRelTol * ||M||_F.
inline constexpr double kHermitianRelTol = 1e-12;

/// A Hermitian matrix: observable or Hamiltonian.
class HermitianObservable {
public:
    /// Throws DomainError when `matrix` is not Hermitian within tolerance.
    /// The stored matrix is the exact Hermitian part (M + M^dagger)/2.
    explicit HermitianObservable(ComplexMatrix matrix);

    std::size_t dim() const noexcept { return matrix_.dim(); }
    const ComplexMatrix& matrix() const noexcept { return matrix_; }

    /// Largest |eigenvalue|.
    double spectral_norm() const;

private:
    ComplexMatrix matrix_;
};

/// Tolerance on |<psi|psi> - 1| accepted by QuantumState.
inline constexpr double kNormalizationTol = 1e-12;

/// Normalized complex n-vector.
class QuantumState {
public:
    /// Throws DomainError if the amplitudes are not normalized within
    /// kNormalizationTol or contain non-finite values.
    explicit QuantumState(ComplexVector amplitudes);
    QuantumState(std::initializer_list<Complex> amplitudes);

    /// Rescales an arbitrary non-zero vector to unit norm.
    static QuantumState normalized(ComplexVector amplitudes);
    /// Computational basis vector |index>.
    static QuantumState basis(std::size_t dim, std::size_t index);

    std::size_t dim() const noexcept { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

    bool operator==(const QuantumState&) const = default;

private:
    ComplexVector amplitudes_;
};

/// Eigenvalues in non-decreasing order with orthonormal eigenvectors.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    std::vector<QuantumState> eigenvectors;

    std::size_t dim() const noexcept { return eigenvalues.size(); }
    double min_eigenvalue() const { return eigenvalues.front(); }
    double max_eigenvalue() const { return eigenvalues.back(); }
    /// Sum_k E_k |E_k><E_k|
    ComplexMatrix reconstruct() const;
};

/// Complex Jacobi controls. The defaults are the library contract.
struct JacobiOptions {
    /// Converged once the off-diagonal Frobenius norm is <= tol * ||A||_F.
    double relative_tolerance = 1e-13;
    int max_sweeps = 100;
};

Complex inner(std::span<const Complex> a, std::span<const Complex> b);
/// <a|b> = sum conj(a_i) b_i. Throws DimensionError on mismatch.
Complex inner(const QuantumState& a, const QuantumState& b);

/// AB - BA (anti-Hermitian for Hermitian inputs).
ComplexMatrix commutator(const HermitianObservable& a, const HermitianObservable& b);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Cyclic Jacobi with complex Givens rotations.
///
/// Output is deterministic: each eigenvector is scaled so that its
/// largest-modulus component (lowest index on ties within 1e-12) is real and
/// non-negative, and eigenvectors of degenerate eigenvalues are ordered by the
/// index of that component. Throws ConvergenceError after max_sweeps.
SpectralDecomposition hermitian_eigendecomposition(const HermitianObservable& a,
                                                   const JacobiOptions& options = {});

/// U(t) = sum_k exp(-i E_k t / hbar) |E_k><E_k|
ComplexMatrix propagator(const SpectralDecomposition& spectrum, double t, double hbar);
ComplexMatrix propagator(const HermitianObservable& h, double t, double hbar);

}  // namespace quncert

#endif  // QUNCERT_HILBERT_HPP
