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

// Closed-system evolution in the energy eigenbasis.
//
// States are never integrated step by step: the Hamiltonian is diagonalized
// once and each sample is |psi(t)> = sum_k a_k exp(-i E_k t / hbar) |E_k>.

#ifndef QUNCERT_DYNAMICS_HPP
#define QUNCERT_DYNAMICS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quncert/hilbert.hpp"
#include "quncert/qstat.hpp"

namespace quncert {

/// Uniform grid of steps + 1 samples: t_i = start + i (stop - start) / steps.
struct TimeGrid {
    double start = 0.0;
    double stop = 1.0;
    int steps = 1000;

    std::size_t size() const noexcept { return static_cast<std::size_t>(steps) + 1; }
    double step() const noexcept { return (stop - start) / steps; }
    double at(std::size_t i) const noexcept {
        return i == static_cast<std::size_t>(steps) ? stop : start + static_cast<double>(i) * step();
    }
};

/// [0, 4 pi / omega_char] with 1000 steps, omega_char = (E_max - E_min)/hbar.
/// A fully degenerate spectrum falls back to [0, 4 pi].
TimeGrid default_time_grid(const SpectralDecomposition& spectrum, double hbar);

using NamedObservable = std::pair<std::string, HermitianObservable>;

class Scenario {
public:
    /// Validates hbar > 0, start < stop, steps >= 2, equal dimensions >= 2,
    /// and unique non-empty observable names. Throws DomainError/DimensionError.
    Scenario(double hbar, HermitianObservable hamiltonian, QuantumState initial_state, TimeGrid grid,
             std::vector<NamedObservable> observables = {});

    /// Same, with default_time_grid() of the Hamiltonian.
    Scenario(double hbar, HermitianObservable hamiltonian, QuantumState initial_state,
             std::vector<NamedObservable> observables = {});

    double hbar() const noexcept { return hbar_; }
    const HermitianObservable& hamiltonian() const noexcept { return hamiltonian_; }
    const QuantumState& initial_state() const noexcept { return initial_state_; }
    const TimeGrid& grid() const noexcept { return grid_; }
    const std::vector<NamedObservable>& observables() const noexcept { return observables_; }
    std::size_t dim() const noexcept { return hamiltonian_.dim(); }

    /// Throws DomainError when no observable has this name.
    const HermitianObservable& observable(const std::string& name) const;

    Scenario with_hamiltonian(HermitianObservable hamiltonian) const;
    Scenario with_grid(TimeGrid grid) const;

private:
    double hbar_;
    HermitianObservable hamiltonian_;
    QuantumState initial_state_;
    TimeGrid grid_;
    std::vector<NamedObservable> observables_;
};

struct ObservableSeries {
    std::string name;
    std::vector<StatSummary> samples;
};

struct Trajectory {
    double hbar = 1.0;
    std::vector<double> energy_levels;
    std::vector<double> times;
    std::vector<ObservableSeries> series;
    std::vector<StatSummary> energy;
    std::vector<CoherenceSummary> coherence;
    /// Present only when requested from evolve().
    std::optional<std::vector<QuantumState>> states;

    /// Throws DomainError for an unknown name.
    const ObservableSeries& find(const std::string& name) const;
};

struct EvolveOptions {
    bool keep_states = false;
};

/// a_k = <E_k|psi0>, in the order of `spectrum`.
ComplexVector energy_amplitudes(const QuantumState& psi0, const SpectralDecomposition& spectrum);

/// |psi(t)> from precomputed amplitudes.
QuantumState state_at(const SpectralDecomposition& spectrum, std::span<const Complex> amplitudes, double t,
                      double hbar);

/// State of the scenario at an arbitrary time.
QuantumState state_at(const Scenario& s, double t);

Trajectory evolve(const Scenario& s, const EvolveOptions& options = {});

struct ConservationReport {
    double mean_drift = 0.0;
    double variance_drift = 0.0;
    double stddev_drift = 0.0;
    double coherence_drift = 0.0;
    double predictability_drift = 0.0;
    double tolerance = 1e-10;
    bool passed = false;

    double max_drift() const;
};

/// Max over samples of |x(t) - x(t_0)| for <H>, Var(H), dH, C and P.
ConservationReport check_conservation(const Trajectory& tr, double tolerance = 1e-10);

/// H + E0 I
HermitianObservable shift_hamiltonian(const HermitianObservable& h, double e0);

struct OffsetReport {
    double e0 = 0.0;
    /// Largest difference of any observable mean/variance/stddev, energy
    /// variance/stddev, coherence or predictability between the two runs.
    double max_stat_difference = 0.0;
    /// max_t | |<psi(t)|psi'(t)>| - 1 |
    double max_overlap_defect = 0.0;
    /// max_t | <psi(t)|psi'(t)> - exp(-i E0 t / hbar) |
    double max_phase_defect = 0.0;
    double tolerance = 1e-10;
    bool passed = false;
};

OffsetReport offset_invariance_check(const Scenario& s, double e0, double tolerance = 1e-10);

/// fd_step default: 1e-4 * 2 pi hbar / (E_max - E_min), or 1e-4 when the
/// spectrum is fully degenerate.
double default_fd_step(const SpectralDecomposition& spectrum, double hbar);

/// | centered-difference d<A>/dt - Re((1/(i hbar)) <[A, H]>) | at |psi(t)>.
/// Throws DomainError when the commutator term has an imaginary residue above
/// 1e-9 or fd_step <= 0.
double ehrenfest_residual(const HermitianObservable& a, const Scenario& s, double t, double fd_step);

/// d<A>/dt at |psi> from the commutator, (1/(i hbar)) <[A, H]>.
double ehrenfest_rate(const HermitianObservable& a, const HermitianObservable& h, const QuantumState& psi,
                      double hbar);

}  // namespace quncert

#endif  // QUNCERT_DYNAMICS_HPP
