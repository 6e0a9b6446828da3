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

// Time-energy inequality analyzers.
//
//  * Robertson and Schroedinger uncertainty relations for two observables.
//  * Mandelstam-Tamm "time uncertainty" dT = dA / |d<A>/dt| and dE * dT.
//  * Margolus-Levitin orthogonalization time tau_perp and its two lower
//    bounds, plus the unified quantum speed limit.
//
// Infinite results (divergent dT, bounds of eigenstates, never-orthogonal
// states) are represented by +infinity.

#ifndef QUNCERT_UNCERTAINTY_HPP
#define QUNCERT_UNCERTAINTY_HPP

#include <limits>
#include <span>
#include <vector>

#include "quncert/dynamics.hpp"
#include "quncert/hilbert.hpp"

namespace quncert {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// lhs >= rhs with slack = lhs - rhs; satisfied iff slack >= -1e-10.
struct BoundCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool satisfied = false;

    static BoundCheck make(double lhs, double rhs);
};

inline constexpr double kBoundSlackTol = 1e-10;

/// dA * dB >= |<[A, B]>| / 2
BoundCheck robertson(const HermitianObservable& a, const HermitianObservable& b, const QuantumState& psi);

/// dA * dB >= sqrt(|<AB + BA>/2 - <A><B>|^2 + |<[A, B]>/2|^2)
BoundCheck schrodinger(const HermitianObservable& a, const HermitianObservable& b, const QuantumState& psi);

struct MTSample {
    double t = 0.0;
    double delta_a = 0.0;
    /// |d<A>/dt| from the Ehrenfest commutator.
    double rate = 0.0;
    /// +infinity at stationary points of <A> (unless dA vanishes there too).
    double delta_t = 0.0;
    /// dE * dT
    double product = 0.0;

    bool infinite() const noexcept { return delta_t == kInfinity; }
};

/// Precomputed per-scenario quantities for Mandelstam-Tamm sampling.
class MTAnalyzer {
public:
    /// Throws DomainError "MT undefined for energy eigenstates" when
    /// dH <= 1e-12.
    MTAnalyzer(const HermitianObservable& a, const Scenario& s);

    MTSample sample(double t) const;

    double delta_e() const noexcept { return delta_e_; }
    /// 1e-12 * (E_max - E_min) * ||A||_spec / hbar
    double rate_floor() const noexcept { return rate_floor_; }

private:
    HermitianObservable a_;
    HermitianObservable h_;
    ComplexMatrix comm_;          // [A, H]
    ComplexMatrix double_comm_;   // [[A, H], H]
    SpectralDecomposition spectrum_;
    ComplexVector amplitudes_;
    double hbar_;
    double delta_e_;
    double rate_floor_;
    double delta_a_floor_;
};

MTSample mt_sample(const HermitianObservable& a, const Scenario& s, double t);

/// One sample per grid time of `s`.
std::vector<MTSample> mt_series(const HermitianObservable& a, const Scenario& s);

/// <psi(0)|psi(t)> = sum_k |a_k|^2 exp(-i E_k t / hbar).
/// Throws DomainError when sum |a_k|^2 is off 1 by more than 1e-10.
Complex overlap(const SpectralDecomposition& spectrum, std::span<const Complex> amplitudes, double t,
                double hbar);

struct OrthogonalizationResult {
    enum class Kind { kFound, kNeverOrthogonal };

    Kind kind = Kind::kNeverOrthogonal;
    /// Valid when kind == kFound.
    double tau_perp = kInfinity;
    /// Valid when kind == kNeverOrthogonal: a certified lower bound on
    /// |overlap(t)| for all t.
    double min_overlap_bound = 0.0;
    /// Smallest |overlap| seen on the scan (1 when no scan ran).
    double min_observed_overlap = 1.0;
    double horizon = 0.0;

    bool found() const noexcept { return kind == Kind::kFound; }
};

inline constexpr double kDefaultOrthogonalityTol = 1e-9;
inline constexpr std::size_t kOrthogonalityScanPoints = 10000;

/// 20 * 2 pi hbar / (smallest non-zero eigenvalue gap); 0 for a fully
/// degenerate spectrum.
double default_tau_horizon(const SpectralDecomposition& spectrum, double hbar);

/// Earliest t > 0 with |overlap(t)| <= tol_orth.
///
/// States with 2 max_k |a_k|^2 - 1 > tol_orth are certified never orthogonal
/// without searching. Otherwise |overlap| is scanned on 10^4 points over
/// [0, horizon] and each local minimum refined by golden-section bracketing
/// to 1e-12 relative time width. Throws InconclusiveError when nothing is
/// found.
OrthogonalizationResult ml_tau_perp(const SpectralDecomposition& spectrum, std::span<const Complex> amplitudes,
                                    double hbar, double tol_orth = kDefaultOrthogonalityTol,
                                    double horizon = 0.0);

struct MLBounds {
    double delta_h = 0.0;
    /// <H> with E_min shifted to zero.
    double mean_energy_shifted = 0.0;
    /// <H> in the Hamiltonian's own energy origin.
    double mean_energy_raw = 0.0;
    /// pi hbar / (2 dH)
    double levi1 = kInfinity;
    /// pi hbar / (2 <H'>), E_min = 0 convention.
    double levi2 = kInfinity;
    /// pi hbar / (2 <H>) without the shift; +infinity when <H> <= 0.
    double levi2_unshifted = kInfinity;
};

MLBounds ml_bounds(const SpectralDecomposition& spectrum, std::span<const Complex> amplitudes, double hbar);

/// h / (4 min{dH, <H'>}); +infinity when either vanishes (any energy
/// eigenstate, in particular the ground state).
double qsl_tau(const SpectralDecomposition& spectrum, std::span<const Complex> amplitudes, double hbar);

}  // namespace quncert

#endif  // QUNCERT_UNCERTAINTY_HPP
