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

#include "quncert/toymodel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace quncert {

namespace {

constexpr double kClockRangeFloor = 1e-9;

Complex coherence_term(const QubitPreset& p) { return p.alpha1() * std::conj(p.alpha2()); }

struct NamedPreset {
    const char* name;
    double p1;
    double p2;
};

// Target |a1|^2, |a2|^2 per preset; amplitudes are the real roots.
constexpr NamedPreset kPresets[] = {
    {"fig1A", 1.0, 0.0},          {"fig1B", 5.0 / 6.0, 1.0 / 6.0}, {"fig1C", 2.0 / 3.0, 1.0 / 3.0},
    {"fig1D", 0.5, 0.5},          {"fig2A", 1.0, 0.0},             {"fig2B", 39.0 / 40.0, 1.0 / 40.0},
    {"fig2C", 5.0 / 6.0, 1.0 / 6.0}, {"fig2D", 0.5, 0.5},          {"fig3AB", 19.0 / 20.0, 1.0 / 20.0},
    {"fig3CD", 11.0 / 20.0, 9.0 / 20.0},
};

}  // namespace

HermitianObservable pauli(PauliAxis axis) {
    const Complex i(0.0, 1.0);
    switch (axis) {
        case PauliAxis::kX:
            return HermitianObservable(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}});
        case PauliAxis::kY:
            return HermitianObservable(ComplexMatrix{{0.0, -i}, {i, 0.0}});
        case PauliAxis::kZ:
            break;
    }
    return HermitianObservable(ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}});
}

QubitPreset::QubitPreset(double omega, Complex alpha1, Complex alpha2, double hbar)
    : omega_(omega), alpha1_(alpha1), alpha2_(alpha2), hbar_(hbar) {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw DomainError("qubit preset: omega must be positive and finite");
    }
    if (!(hbar > 0.0) || !std::isfinite(hbar)) {
        throw DomainError("qubit preset: hbar must be positive and finite");
    }
    const double norm2 = std::norm(alpha1) + std::norm(alpha2);
    if (!(std::abs(norm2 - 1.0) <= kNormalizationTol)) {
        throw DomainError("qubit preset: |a1|^2 + |a2|^2 must equal 1");
    }
}

double QubitPreset::coherence() const noexcept { return 2.0 * std::abs(alpha1_) * std::abs(alpha2_); }

HermitianObservable QubitPreset::hamiltonian() const {
    const double half = 0.5 * hbar_ * omega_;
    return HermitianObservable(ComplexMatrix{{half, 0.0}, {0.0, -half}});
}

QuantumState QubitPreset::initial_state() const { return QuantumState{alpha1_, alpha2_}; }

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& p : kPresets) {
            out.emplace_back(p.name);
        }
        return out;
    }();
    return names;
}

QubitPreset preset(std::string_view name) {
    for (const auto& p : kPresets) {
        if (name == p.name) {
            return QubitPreset(1.0, std::sqrt(p.p1), std::sqrt(p.p2), 1.0);
        }
    }
    throw DomainError("unknown preset '" + std::string(name) + "'");
}

HermitianObservable qubit_observable(std::string_view name) {
    if (name == "sx") return pauli(PauliAxis::kX);
    if (name == "sy") return pauli(PauliAxis::kY);
    if (name == "sz") return pauli(PauliAxis::kZ);
    if (name == "px_up") return HermitianObservable(ComplexMatrix{{0.5, 0.5}, {0.5, 0.5}});
    if (name == "px_down") return HermitianObservable(ComplexMatrix{{0.5, -0.5}, {-0.5, 0.5}});
    if (name == "pz_up") return HermitianObservable(ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}});
    if (name == "pz_down") return HermitianObservable(ComplexMatrix{{0.0, 0.0}, {0.0, 1.0}});
    throw DomainError("unknown qubit observable '" + std::string(name) + "'");
}

Scenario qubit_scenario_with(const QubitPreset& p, std::vector<NamedObservable> observables) {
    const TimeGrid grid{0.0, 4.0 * std::numbers::pi / p.omega(), 1000};
    return Scenario(p.hbar(), p.hamiltonian(), p.initial_state(), grid, std::move(observables));
}

Scenario qubit_scenario(const QubitPreset& p, const std::vector<std::string>& observable_names) {
    std::vector<NamedObservable> observables;
    observables.reserve(observable_names.size());
    for (const auto& name : observable_names) {
        observables.emplace_back(name, qubit_observable(name));
    }
    return qubit_scenario_with(p, std::move(observables));
}

double analytic_sx_mean(const QubitPreset& p, double t) {
    const Complex c = coherence_term(p);
    const double wt = p.omega() * t;
    return 2.0 * (c.real() * std::cos(wt) + c.imag() * std::sin(wt));
}

double analytic_sx_rate(const QubitPreset& p, double t) {
    const Complex c = coherence_term(p);
    const double wt = p.omega() * t;
    return -2.0 * p.omega() * (c.real() * std::sin(wt) - c.imag() * std::cos(wt));
}

double analytic_sx_std(const QubitPreset& p, double t) {
    const double wt = p.omega() * t;
    return std::abs(p.alpha1() * p.alpha1() * std::polar(1.0, -wt) -
                    p.alpha2() * p.alpha2() * std::polar(1.0, wt));
}

double analytic_mt_delta_t(const QubitPreset& p, double t) {
    if (p.coherence() < 1e-12) {
        throw ClockError("clock observable static: sigma_x does not evolve for an energy eigenstate");
    }
    const double numerator = analytic_sx_std(p, t);
    const double rate = std::abs(analytic_sx_rate(p, t));
    // Stationary-point floor 1e-12 (E_max - E_min) ||sigma_x|| / hbar.
    const double floor = 1e-12 * p.omega();
    if (rate > floor) {
        return numerator / rate;
    }
    if (numerator <= 1e-9) {
        return 1.0 / p.omega();
    }
    return std::numeric_limits<double>::infinity();
}

TickTockReport tick_tock(const Trajectory& tr, const std::string& observable_name) {
    const auto& series = tr.find(observable_name).samples;
    const std::size_t n = series.size();
    if (n < 3 || tr.times.size() != n) {
        throw ClockError("tick_tock: series too short");
    }
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = series[i].mean;
    }
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    if (*hi - *lo <= kClockRangeFloor) {
        throw ClockError("no clock signal: '" + observable_name + "' is constant");
    }

    TickTockReport report;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double left = x[i] - x[i - 1];
        const double right = x[i + 1] - x[i];
        const bool is_max = left > 0.0 && right <= 0.0;
        const bool is_min = left < 0.0 && right >= 0.0;
        if (!is_max && !is_min) {
            continue;
        }
        // Vertex of the parabola through (t_{i-1}, t_i, t_{i+1}); uniform grid.
        const double h = tr.times[i + 1] - tr.times[i];
        const double curvature = x[i - 1] - 2.0 * x[i] + x[i + 1];
        double offset = 0.0;
        if (curvature != 0.0) {
            offset = 0.5 * h * (x[i - 1] - x[i + 1]) / curvature;
        }
        ClockExtremum e;
        e.time = tr.times[i] + offset;
        e.kind = is_max ? ClockEdge::kTick : ClockEdge::kTock;
        e.sample = i;
        if (offset > 0.5 * h) {
            e.sample = i + 1;
        } else if (offset < -0.5 * h) {
            e.sample = i - 1;
        }
        report.extrema.push_back(e);
    }

    if (report.extrema.size() < 3) {
        throw ClockError("tick_tock: fewer than three extrema in '" + observable_name + "'");
    }
    for (std::size_t k = 1; k < report.extrema.size(); ++k) {
        if (report.extrema[k].kind == report.extrema[k - 1].kind) {
            throw ClockError("tick_tock: extrema of '" + observable_name + "' do not alternate");
        }
    }

    report.delta_t = (report.extrema.back().time - report.extrema.front().time) /
                     static_cast<double>(report.extrema.size() - 1);
    report.delta_e = tr.energy_levels.back() - tr.energy_levels.front();
    report.product = report.delta_e * report.delta_t;
    report.half_planck = std::numbers::pi * tr.hbar;
    return report;
}

}  // namespace quncert
