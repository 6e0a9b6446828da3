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

#include "quncert/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "quncert/error.hpp"

namespace quncert {

namespace {

constexpr double kCommutatorResidueTol = 1e-9;

double energy_span(const SpectralDecomposition& spectrum) {
    return spectrum.max_eigenvalue() - spectrum.min_eigenvalue();
}

void track(double& worst, double reference, double value) {
    worst = std::max(worst, std::abs(value - reference));
}

}  // namespace

TimeGrid default_time_grid(const SpectralDecomposition& spectrum, double hbar) {
    const double span = energy_span(spectrum);
    const double omega = span > 0.0 ? span / hbar : 1.0;
    return TimeGrid{0.0, 4.0 * std::numbers::pi / omega, 1000};
}

Scenario::Scenario(double hbar, HermitianObservable hamiltonian, QuantumState initial_state, TimeGrid grid,
                   std::vector<NamedObservable> observables)
    : hbar_(hbar),
      hamiltonian_(std::move(hamiltonian)),
      initial_state_(std::move(initial_state)),
      grid_(grid),
      observables_(std::move(observables)) {
    if (!(hbar_ > 0.0) || !std::isfinite(hbar_)) {
        throw DomainError("scenario: hbar must be positive and finite");
    }
    if (!std::isfinite(grid_.start) || !std::isfinite(grid_.stop) || !(grid_.start < grid_.stop)) {
        throw DomainError("scenario: time grid needs finite start < stop");
    }
    if (grid_.steps < 2) {
        throw DomainError("scenario: time grid needs steps >= 2");
    }
    if (hamiltonian_.dim() < 2) {
        throw DimensionError("scenario: Hilbert space dimension must be >= 2");
    }
    if (initial_state_.dim() != hamiltonian_.dim()) {
        throw DimensionError("scenario: initial state dimension " + std::to_string(initial_state_.dim()) +
                             " does not match Hamiltonian dimension " + std::to_string(hamiltonian_.dim()));
    }
    std::set<std::string> names;
    for (const auto& [name, obs] : observables_) {
        if (name.empty()) {
            throw DomainError("scenario: observable names must be non-empty");
        }
        if (!names.insert(name).second) {
            throw DomainError("scenario: duplicate observable name '" + name + "'");
        }
        if (obs.dim() != hamiltonian_.dim()) {
            throw DimensionError("scenario: observable '" + name + "' has dimension " +
                                 std::to_string(obs.dim()));
        }
    }
}

Scenario::Scenario(double hbar, HermitianObservable hamiltonian, QuantumState initial_state,
                   std::vector<NamedObservable> observables)
    : Scenario(hbar, hamiltonian, std::move(initial_state),
               default_time_grid(hermitian_eigendecomposition(hamiltonian), hbar > 0.0 ? hbar : 1.0),
               std::move(observables)) {}

const HermitianObservable& Scenario::observable(const std::string& name) const {
    for (const auto& [key, obs] : observables_) {
        if (key == name) {
            return obs;
        }
    }
    throw DomainError("scenario: no observable named '" + name + "'");
}

Scenario Scenario::with_hamiltonian(HermitianObservable hamiltonian) const {
    return Scenario(hbar_, std::move(hamiltonian), initial_state_, grid_, observables_);
}

Scenario Scenario::with_grid(TimeGrid grid) const {
    return Scenario(hbar_, hamiltonian_, initial_state_, grid, observables_);
}

const ObservableSeries& Trajectory::find(const std::string& name) const {
    for (const auto& s : series) {
        if (s.name == name) {
            return s;
        }
    }
    throw DomainError("trajectory: no series named '" + name + "'");
}

ComplexVector energy_amplitudes(const QuantumState& psi0, const SpectralDecomposition& spectrum) {
    if (psi0.dim() != spectrum.dim()) {
        throw DimensionError("energy_amplitudes: state/spectrum dimension mismatch");
    }
    ComplexVector out(spectrum.dim());
    for (std::size_t k = 0; k < spectrum.dim(); ++k) {
        out[k] = inner(spectrum.eigenvectors[k], psi0);
    }
    return out;
}

namespace {

ComplexVector phased_amplitudes(const SpectralDecomposition& spectrum, std::span<const Complex> amplitudes,
                                double t, double hbar) {
    ComplexVector out(amplitudes.size());
    for (std::size_t k = 0; k < amplitudes.size(); ++k) {
        out[k] = amplitudes[k] * std::polar(1.0, -spectrum.eigenvalues[k] * t / hbar);
    }
    return out;
}

QuantumState synthesize(const SpectralDecomposition& spectrum, std::span<const Complex> phased) {
    const std::size_t n = spectrum.dim();
    ComplexVector psi(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto v = spectrum.eigenvectors[k].amplitudes();
        for (std::size_t i = 0; i < n; ++i) {
            psi[i] += phased[k] * v[i];
        }
    }
    return QuantumState(std::move(psi));
}

}  // namespace

QuantumState state_at(const SpectralDecomposition& spectrum, std::span<const Complex> amplitudes, double t,
                      double hbar) {
    if (amplitudes.size() != spectrum.dim()) {
        throw DimensionError("state_at: amplitude/spectrum dimension mismatch");
    }
    return synthesize(spectrum, phased_amplitudes(spectrum, amplitudes, t, hbar));
}

QuantumState state_at(const Scenario& s, double t) {
    const auto spectrum = hermitian_eigendecomposition(s.hamiltonian());
    const auto amps = energy_amplitudes(s.initial_state(), spectrum);
    return state_at(spectrum, amps, t, s.hbar());
}

Trajectory evolve(const Scenario& s, const EvolveOptions& options) {
    const auto spectrum = hermitian_eigendecomposition(s.hamiltonian());
    const auto amps = energy_amplitudes(s.initial_state(), spectrum);
    const std::size_t samples = s.grid().size();

    Trajectory tr;
    tr.hbar = s.hbar();
    tr.energy_levels = spectrum.eigenvalues;
    tr.times.reserve(samples);
    tr.energy.reserve(samples);
    tr.coherence.reserve(samples);
    for (const auto& [name, obs] : s.observables()) {
        tr.series.push_back({name, {}});
        tr.series.back().samples.reserve(samples);
    }
    if (options.keep_states) {
        tr.states.emplace();
        tr.states->reserve(samples);
    }

    for (std::size_t i = 0; i < samples; ++i) {
        const double t = s.grid().at(i);
        const auto phased = phased_amplitudes(spectrum, amps, t, s.hbar());
        auto psi = synthesize(spectrum, phased);

        tr.times.push_back(t);
        for (std::size_t k = 0; k < s.observables().size(); ++k) {
            tr.series[k].samples.push_back(stats(s.observables()[k].second, psi));
        }
        tr.energy.push_back(stats(s.hamiltonian(), psi));
        tr.coherence.push_back(l1_coherence(phased));
        if (options.keep_states) {
            tr.states->push_back(std::move(psi));
        }
    }
    return tr;
}

double ConservationReport::max_drift() const {
    return std::max({mean_drift, variance_drift, stddev_drift, coherence_drift, predictability_drift});
}

ConservationReport check_conservation(const Trajectory& tr, double tolerance) {
    ConservationReport report;
    report.tolerance = tolerance;
    if (tr.energy.empty() || tr.coherence.size() != tr.energy.size()) {
        return report;
    }
    const auto& e0 = tr.energy.front();
    const auto& c0 = tr.coherence.front();
    for (std::size_t i = 0; i < tr.energy.size(); ++i) {
        track(report.mean_drift, e0.mean, tr.energy[i].mean);
        track(report.variance_drift, e0.variance, tr.energy[i].variance);
        track(report.stddev_drift, e0.stddev, tr.energy[i].stddev);
        track(report.coherence_drift, c0.coherence, tr.coherence[i].coherence);
        track(report.predictability_drift, c0.predictability, tr.coherence[i].predictability);
    }
    report.passed = report.max_drift() < tolerance;
    return report;
}

HermitianObservable shift_hamiltonian(const HermitianObservable& h, double e0) {
    ComplexMatrix m = h.matrix();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        m(i, i) += e0;
    }
    return HermitianObservable(std::move(m));
}

OffsetReport offset_invariance_check(const Scenario& s, double e0, double tolerance) {
    OffsetReport report;
    report.e0 = e0;
    report.tolerance = tolerance;

    const EvolveOptions keep{.keep_states = true};
    const auto base = evolve(s, keep);
    const auto shifted = evolve(s.with_hamiltonian(shift_hamiltonian(s.hamiltonian(), e0)), keep);

    auto compare = [&](const StatSummary& a, const StatSummary& b, bool include_mean) {
        if (include_mean) {
            track(report.max_stat_difference, a.mean, b.mean);
        }
        track(report.max_stat_difference, a.variance, b.variance);
        track(report.max_stat_difference, a.stddev, b.stddev);
    };

    for (std::size_t i = 0; i < base.times.size(); ++i) {
        for (std::size_t k = 0; k < base.series.size(); ++k) {
            compare(base.series[k].samples[i], shifted.series[k].samples[i], true);
        }
        // <H> moves by exactly E0; its spread does not.
        compare(base.energy[i], shifted.energy[i], false);
        track(report.max_stat_difference, base.energy[i].mean + e0, shifted.energy[i].mean);
        track(report.max_stat_difference, base.coherence[i].coherence, shifted.coherence[i].coherence);
        track(report.max_stat_difference, base.coherence[i].predictability,
              shifted.coherence[i].predictability);

        const Complex overlap = inner((*base.states)[i], (*shifted.states)[i]);
        report.max_overlap_defect = std::max(report.max_overlap_defect, std::abs(std::abs(overlap) - 1.0));
        const Complex expected = std::polar(1.0, -e0 * base.times[i] / s.hbar());
        report.max_phase_defect = std::max(report.max_phase_defect, std::abs(overlap - expected));
    }
    report.passed = report.max_stat_difference < tolerance && report.max_overlap_defect < tolerance;
    return report;
}

double default_fd_step(const SpectralDecomposition& spectrum, double hbar) {
    const double span = energy_span(spectrum);
    if (span <= 0.0) {
        return 1e-4;
    }
    return 1e-4 * (2.0 * std::numbers::pi * hbar / span);
}

double ehrenfest_rate(const HermitianObservable& a, const HermitianObservable& h, const QuantumState& psi,
                      double hbar) {
    const auto comm = commutator(a, h);
    const auto comm_psi = comm.apply(psi.amplitudes());
    const Complex value = inner(psi.amplitudes(), comm_psi) / Complex(0.0, hbar);
    const double tol = kCommutatorResidueTol * std::max(1.0, std::abs(value.real()));
    if (std::abs(value.imag()) > tol) {
        throw DomainError("ehrenfest: commutator expectation has imaginary residue " +
                          std::to_string(value.imag()) + " (non-Hermitian input?)");
    }
    return value.real();
}

double ehrenfest_residual(const HermitianObservable& a, const Scenario& s, double t, double fd_step) {
    if (!(fd_step > 0.0) || !std::isfinite(fd_step)) {
        throw DomainError("ehrenfest_residual: fd_step must be positive");
    }
    if (a.dim() != s.dim()) {
        throw DimensionError("ehrenfest_residual: observable dimension mismatch");
    }
    const auto spectrum = hermitian_eigendecomposition(s.hamiltonian());
    const auto amps = energy_amplitudes(s.initial_state(), spectrum);
    const double forward = expectation(a, state_at(spectrum, amps, t + fd_step, s.hbar()));
    const double backward = expectation(a, state_at(spectrum, amps, t - fd_step, s.hbar()));
    const double numeric = (forward - backward) / (2.0 * fd_step);
    const double exact = ehrenfest_rate(a, s.hamiltonian(), state_at(spectrum, amps, t, s.hbar()), s.hbar());
    return std::abs(numeric - exact);
}

}  // namespace quncert
