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

// Spin-1/2 in a static field along z: H = (hbar omega / 2) sigma_z with
// |psi(0)> = a1 |up_z> + a2 |down_z>. Provides the Pauli observables, the
// named figure presets, closed-form sigma_x dynamics used as oracles for the
// generic pipeline, and tick/tock extraction from a clock series.

#ifndef QUNCERT_TOYMODEL_HPP
#define QUNCERT_TOYMODEL_HPP

#include <string>
#include <string_view>
#include <vector>

#include "quncert/dynamics.hpp"
#include "quncert/error.hpp"
#include "quncert/hilbert.hpp"

namespace quncert {

/// A clock series that cannot tick: constant <sigma_x>, zero coherence.
class ClockError : public Error {
public:
    using Error::Error;
};

enum class PauliAxis { kX, kY, kZ };

HermitianObservable pauli(PauliAxis axis);

class QubitPreset {
public:
    /// Throws DomainError unless omega, hbar > 0 and |a1|^2 + |a2|^2 = 1
    /// within 1e-12.
    QubitPreset(double omega, Complex alpha1, Complex alpha2, double hbar = 1.0);

    double omega() const noexcept { return omega_; }
    double hbar() const noexcept { return hbar_; }
    Complex alpha1() const noexcept { return alpha1_; }
    Complex alpha2() const noexcept { return alpha2_; }

    /// 2 |a1| |a2|
    double coherence() const noexcept;
    HermitianObservable hamiltonian() const;
    QuantumState initial_state() const;

private:
    double omega_;
    Complex alpha1_;
    Complex alpha2_;
    double hbar_;
};

/// Names accepted by preset(): fig1A..fig1D, fig2A..fig2D, fig3AB, fig3CD.
const std::vector<std::string>& preset_names();

/// Figure preset with hbar = omega = 1. Throws DomainError for unknown names.
QubitPreset preset(std::string_view name);

/// sx, sy, sz, px_up, px_down (sigma_x eigenprojectors), pz_up, pz_down
/// (energy eigenprojectors). Throws DomainError for other names.
HermitianObservable qubit_observable(std::string_view name);

/// H = (hbar omega / 2) sigma_z, grid [0, 4 pi / omega] with 1000 steps.
Scenario qubit_scenario_with(const QubitPreset& p, std::vector<NamedObservable> observables);
/// Same, with observables looked up by qubit_observable().
Scenario qubit_scenario(const QubitPreset& p, const std::vector<std::string>& observable_names);

/// <sigma_x>(t) = 2 [Re(a1 a2*) cos wt + Im(a1 a2*) sin wt]
double analytic_sx_mean(const QubitPreset& p, double t);

/// d<sigma_x>/dt = -2 w [Re(a1 a2*) sin wt - Im(a1 a2*) cos wt]
double analytic_sx_rate(const QubitPreset& p, double t);

/// d sigma_x = |a1^2 e^{-iwt} - a2^2 e^{iwt}|
double analytic_sx_std(const QubitPreset& p, double t);

/// Mandelstam-Tamm dT for the sigma_x clock. +infinity where the rate is at
/// or below 1e-12 * omega (the stationary points), except when the numerator
/// vanishes too, which only happens for C = 1 and has limit 1/omega.
/// Throws ClockError "clock observable static" when C = 0.
double analytic_mt_delta_t(const QubitPreset& p, double t);

enum class ClockEdge { kTick, kTock };

struct ClockExtremum {
    double time = 0.0;
    ClockEdge kind = ClockEdge::kTick;
    /// Grid sample nearest to `time`.
    std::size_t sample = 0;
};

struct TickTockReport {
    std::vector<ClockExtremum> extrema;
    double delta_t = 0.0;
    /// E_max - E_min
    double delta_e = 0.0;
    double product = 0.0;
    /// h / 2 = pi hbar
    double half_planck = 0.0;
};

/// Locates maxima (ticks) and minima (tocks) of the named mean series from
/// first-difference sign changes, refines each with the vertex of the parabola
/// through the bracketing samples, and reports the mean spacing.
/// Throws ClockError "no clock signal" when the series range is <= 1e-9, and
/// ClockError when fewer than three extrema are found or kinds do not
/// alternate.
TickTockReport tick_tock(const Trajectory& tr, const std::string& observable_name);

}  // namespace quncert

#endif  // QUNCERT_TOYMODEL_HPP
