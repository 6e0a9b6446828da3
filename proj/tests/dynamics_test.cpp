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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "quncert/error.hpp"
#include "quncert/toymodel.hpp"
#include "support/generators.hpp"

namespace quncert {
namespace {

using testing::Rng;

constexpr double kPi = std::numbers::pi;

Scenario random_scenario(Rng& rng, std::size_t n, std::vector<NamedObservable> extra = {}) {
    auto h = testing::random_hermitian(rng, n);
    auto psi = testing::random_state(rng, n);
    return Scenario(1.0, std::move(h), std::move(psi), std::move(extra));
}

TEST(EnergyAmplitudes, EigenstateAndSuperposition) {
    const auto spectrum = hermitian_eigendecomposition(QubitPreset(1.0, 1.0, 0.0).hamiltonian());
    // Ascending order puts spin-down (-hw/2) first.
    const auto up = energy_amplitudes(QuantumState::basis(2, 0), spectrum);
    EXPECT_EQ(up[0], Complex(0.0, 0.0));
    EXPECT_EQ(up[1], Complex(1.0, 0.0));

    const double a = std::sqrt(0.5);
    const auto both = energy_amplitudes(QuantumState{a, a}, spectrum);
    EXPECT_NEAR(std::abs(both[0]), a, 1e-15);
    EXPECT_NEAR(std::abs(both[1]), a, 1e-15);
}

TEST(EnergyAmplitudes, RandomStatesStayNormalized) {
    Rng rng(51);
    for (int trial = 0; trial < 50; ++trial) {
        const auto n = testing::random_dim(rng, 2, 8);
        const auto spectrum = hermitian_eigendecomposition(testing::random_hermitian(rng, n));
        const auto amps = energy_amplitudes(testing::random_state(rng, n), spectrum);
        double total = 0.0;
        for (const auto& z : amps) {
            total += std::norm(z);
        }
        EXPECT_NEAR(total, 1.0, 1e-10);
    }
}

TEST(Evolve, EnergyProjectorsAreFlat) {
    for (const char* name : {"fig1A", "fig1B", "fig1C", "fig1D"}) {
        const auto p = preset(name);
        const auto tr = evolve(qubit_scenario(p, {"pz_up", "pz_down"}));
        for (const auto& s : tr.find("pz_up").samples) {
            ASSERT_NEAR(s.mean, std::norm(p.alpha1()), 1e-12) << name;
        }
        for (const auto& s : tr.find("pz_down").samples) {
            ASSERT_NEAR(s.mean, std::norm(p.alpha2()), 1e-12) << name;
        }
    }
}

TEST(Evolve, SigmaXProjectorOscillates) {
    const auto tr = evolve(qubit_scenario(preset("fig2D"), {"px_up"}));
    ASSERT_EQ(tr.times.size(), 1001u);
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
        ASSERT_NEAR(tr.find("px_up").samples[i].mean, 0.5 + 0.5 * std::cos(tr.times[i]), 1e-12);
    }
}

TEST(Evolve, EnergyEigenstateGivesConstantHalf) {
    const auto tr = evolve(qubit_scenario(preset("fig2A"), {"px_up", "px_down"}));
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
        ASSERT_NEAR(tr.find("px_up").samples[i].mean, 0.5, 1e-15);
        ASSERT_NEAR(tr.find("px_down").samples[i].mean, 0.5, 1e-15);
    }
}

TEST(Evolve, TimesStrictlyIncreasingAndSeriesAligned) {
    Rng rng(53);
    const auto s = random_scenario(rng, 4, {{"a", testing::random_hermitian(rng, 4)}});
    const auto tr = evolve(s);
    ASSERT_EQ(tr.times.size(), s.grid().size());
    EXPECT_EQ(tr.times.front(), s.grid().start);
    EXPECT_EQ(tr.times.back(), s.grid().stop);
    for (std::size_t i = 1; i < tr.times.size(); ++i) {
        ASSERT_LT(tr.times[i - 1], tr.times[i]);
    }
    EXPECT_EQ(tr.find("a").samples.size(), tr.times.size());
    EXPECT_EQ(tr.energy.size(), tr.times.size());
    EXPECT_EQ(tr.coherence.size(), tr.times.size());
    EXPECT_FALSE(tr.states.has_value());
}

TEST(Evolve, NormAndAmplitudeModuliPreserved) {
    Rng rng(57);
    for (int trial = 0; trial < 10; ++trial) {
        const auto n = testing::random_dim(rng, 2, 6);
        const auto s = random_scenario(rng, n);
        const auto tr = evolve(s, EvolveOptions{.keep_states = true});
        const auto spectrum = hermitian_eigendecomposition(s.hamiltonian());
        const auto a0 = energy_amplitudes(s.initial_state(), spectrum);
        for (const auto& psi : *tr.states) {
            ASSERT_NEAR(std::real(inner(psi, psi)), 1.0, 1e-10);
            const auto at = energy_amplitudes(psi, spectrum);
            for (std::size_t k = 0; k < n; ++k) {
                ASSERT_NEAR(std::abs(at[k]), std::abs(a0[k]), 1e-12);
            }
        }
    }
}

TEST(Evolve, MatchesPropagator) {
    Rng rng(59);
    const auto s = random_scenario(rng, 5);
    for (double t : {0.0, 0.37, 2.0, -1.5}) {
        const auto expected = propagator(s.hamiltonian(), t, s.hbar()).apply(s.initial_state().amplitudes());
        const auto got = state_at(s, t);
        for (std::size_t i = 0; i < 5; ++i) {
            EXPECT_LT(std::abs(got[i] - expected[i]), 1e-12);
        }
    }
}

TEST(Evolve, Deterministic) {
    Rng rng(61);
    const auto s = random_scenario(rng, 6, {{"a", testing::random_hermitian(rng, 6)}});
    const auto a = evolve(s);
    const auto b = evolve(s);
    for (std::size_t i = 0; i < a.times.size(); ++i) {
        ASSERT_EQ(a.find("a").samples[i].mean, b.find("a").samples[i].mean);
        ASSERT_EQ(a.find("a").samples[i].stddev, b.find("a").samples[i].stddev);
    }
}

TEST(Conservation, EveryPreset) {
    for (const auto& name : preset_names()) {
        const auto report = check_conservation(evolve(qubit_scenario(preset(name), {"sx"})));
        EXPECT_TRUE(report.passed) << name << " drift " << report.max_drift();
    }
}

TEST(Conservation, EigenstateDriftsVanish) {
    const auto report = check_conservation(evolve(qubit_scenario(preset("fig1A"), {"sx"})));
    EXPECT_LT(report.max_drift(), 1e-15);
}

TEST(Conservation, RandomFourLevel) {
    Rng rng(67);
    const auto report = check_conservation(evolve(random_scenario(rng, 4)));
    EXPECT_TRUE(report.passed) << report.max_drift();
}

TEST(Conservation, DetectsInjectedDrift) {
    auto tr = evolve(qubit_scenario(preset("fig2C"), {"sx"}));
    tr.energy.back().mean += 1e-8;
    EXPECT_FALSE(check_conservation(tr).passed);
}

TEST(Shift, ZeroIsIdentity) {
    Rng rng(71);
    const auto h = testing::random_hermitian(rng, 3);
    EXPECT_EQ(shift_hamiltonian(h, 0.0).matrix(), h.matrix());
}

TEST(Shift, QubitToZeroGroundEnergy) {
    const double hw = 1.5;
    const auto shifted = shift_hamiltonian(QubitPreset(hw, 1.0, 0.0).hamiltonian(), 0.5 * hw);
    EXPECT_EQ(shifted.matrix(), (ComplexMatrix{{hw, 0.0}, {0.0, 0.0}}));
    EXPECT_EQ(hermitian_eigendecomposition(shifted).min_eigenvalue(), 0.0);
}

TEST(Shift, EigenvaluesMoveEigenvectorsStay) {
    Rng rng(73);
    const auto h = testing::random_hermitian(rng, 4);
    const auto a = hermitian_eigendecomposition(h);
    const auto b = hermitian_eigendecomposition(shift_hamiltonian(h, 2.25));
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_NEAR(b.eigenvalues[k], a.eigenvalues[k] + 2.25, 1e-12);
        EXPECT_NEAR(std::abs(inner(a.eigenvectors[k], b.eigenvectors[k])), 1.0, 1e-10);
    }
}

TEST(Offset, ZeroOffsetIdentical) {
    const auto report = offset_invariance_check(qubit_scenario(preset("fig2C"), {"sx"}), 0.0);
    EXPECT_TRUE(report.passed);
    EXPECT_EQ(report.max_stat_difference, 0.0);
}

TEST(Offset, QubitSigmaX) {
    const auto report = offset_invariance_check(qubit_scenario(preset("fig2C"), {"sx", "px_up"}), 7.3);
    EXPECT_TRUE(report.passed) << report.max_stat_difference;
    EXPECT_LT(report.max_overlap_defect, 1e-10);
}

TEST(Offset, RandomThreeLevel) {
    Rng rng(79);
    const auto s = random_scenario(rng, 3, {{"a", testing::random_hermitian(rng, 3)},
                                            {"b", testing::random_hermitian(rng, 3)}});
    for (double e0 : {-5.0, 0.5, 7.3}) {
        const auto report = offset_invariance_check(s, e0);
        EXPECT_TRUE(report.passed) << e0 << ": " << report.max_stat_difference << " " << report.max_phase_defect;
    }
}

TEST(Ehrenfest, EnergyIsStatic) {
    const auto s = qubit_scenario(preset("fig2C"), {"sx"});
    for (double t : {0.0, 1.0, 3.3}) {
        EXPECT_LT(ehrenfest_residual(s.hamiltonian(), s, t, 1e-4), 1e-10);
    }
}

TEST(Ehrenfest, CommutingObservableIsStatic) {
    const auto s = qubit_scenario(preset("fig2C"), {"sx"});
    for (double t : {0.0, 1.0, 3.3}) {
        EXPECT_LT(ehrenfest_residual(pauli(PauliAxis::kZ), s, t, 1e-4), 1e-10);
    }
}

TEST(Ehrenfest, SigmaXSecondOrder) {
    const auto s = qubit_scenario(preset("fig2D"), {"sx"});
    for (std::size_t i = 0; i < s.grid().size(); i += 50) {
        EXPECT_LT(ehrenfest_residual(pauli(PauliAxis::kX), s, s.grid().at(i), 1e-4), 1e-8);
    }
}

TEST(Ehrenfest, RateMatchesAnalyticDerivative) {
    const auto p = QubitPreset(1.3, std::polar(std::sqrt(0.6), 0.5), std::polar(std::sqrt(0.4), -0.2));
    const auto s = qubit_scenario(p, {"sx"});
    for (double t : {0.0, 0.4, 1.9}) {
        const double rate = ehrenfest_rate(pauli(PauliAxis::kX), s.hamiltonian(), state_at(s, t), s.hbar());
        EXPECT_NEAR(rate, analytic_sx_rate(p, t), 1e-12);
    }
}

TEST(Ehrenfest, HalvingStepQuartersResidual) {
    // Away from the rounding floor: h large enough that truncation dominates.
    const auto s = qubit_scenario(preset("fig2D"), {"sx"});
    const double t = 1.0;  // |sin t| well away from zero
    const double h = 1e-2;
    const double ratio = ehrenfest_residual(pauli(PauliAxis::kX), s, t, h) /
                         ehrenfest_residual(pauli(PauliAxis::kX), s, t, h / 2);
    EXPECT_GE(ratio, 3.5);
    EXPECT_LE(ratio, 4.5);
}

TEST(Ehrenfest, RejectsBadStep) {
    const auto s = qubit_scenario(preset("fig2D"), {"sx"});
    EXPECT_THROW(ehrenfest_residual(pauli(PauliAxis::kX), s, 0.0, 0.0), DomainError);
}

TEST(Defaults, GridAndStep) {
    const auto spectrum = hermitian_eigendecomposition(QubitPreset(2.0, 1.0, 0.0).hamiltonian());
    const auto grid = default_time_grid(spectrum, 1.0);
    EXPECT_EQ(grid.start, 0.0);
    EXPECT_NEAR(grid.stop, 2.0 * kPi, 1e-15);
    EXPECT_EQ(grid.steps, 1000);
    EXPECT_NEAR(default_fd_step(spectrum, 1.0), 1e-4 * kPi, 1e-18);

    const auto flat = hermitian_eigendecomposition(HermitianObservable(ComplexMatrix::identity(2)));
    EXPECT_EQ(default_fd_step(flat, 1.0), 1e-4);
}

TEST(Scenario, Validation) {
    const auto h = pauli(PauliAxis::kZ);
    const auto psi = QuantumState::basis(2, 0);
    EXPECT_THROW(Scenario(0.0, h, psi), DomainError);
    EXPECT_THROW(Scenario(1.0, h, psi, TimeGrid{1.0, 1.0, 10}), DomainError);
    EXPECT_THROW(Scenario(1.0, h, psi, TimeGrid{0.0, 1.0, 1}), DomainError);
    EXPECT_THROW(Scenario(1.0, h, QuantumState::basis(3, 0)), DimensionError);
    EXPECT_THROW(Scenario(1.0, h, psi, {{"", h}}), DomainError);
    EXPECT_THROW(Scenario(1.0, h, psi, {{"a", h}, {"a", h}}), DomainError);
    EXPECT_THROW(Scenario(1.0, h, psi, {{"a", HermitianObservable(ComplexMatrix::identity(3))}}),
                 DimensionError);
    EXPECT_THROW(Scenario(1.0, HermitianObservable(ComplexMatrix::identity(1)), QuantumState::basis(1, 0)),
                 DimensionError);
    const Scenario ok(1.0, h, psi, {{"a", h}});
    EXPECT_THROW(ok.observable("b"), DomainError);
    EXPECT_THROW(evolve(ok).find("b"), DomainError);
}

}  // namespace
}  // namespace quncert
