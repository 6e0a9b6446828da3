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

#include "quncert/uncertainty.hpp"

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

struct Prepared {
    SpectralDecomposition spectrum;
    ComplexVector amplitudes;
};

Prepared prepare(const QubitPreset& p) {
    auto spectrum = hermitian_eigendecomposition(p.hamiltonian());
    auto amps = energy_amplitudes(p.initial_state(), spectrum);
    return {std::move(spectrum), std::move(amps)};
}

// Equal gaps E = 0, 1, 2 with the given amplitudes on ascending levels.
Prepared three_level(double a0, double a1, double a2) {
    const std::vector<double> levels{0.0, 1.0, 2.0};
    auto spectrum = hermitian_eigendecomposition(HermitianObservable(ComplexMatrix::diagonal(levels)));
    return {std::move(spectrum), {a0, a1, a2}};
}

// Independent brute-force oracle: dense uniform scan of |sum p_k e^{-i E_k t}|.
struct DenseScan {
    double first_below = kInfinity;
    double minimum = kInfinity;
};

DenseScan dense_scan(const std::vector<double>& probs, const std::vector<double>& levels, double horizon,
                     std::size_t points, double tol) {
    DenseScan out;
    for (std::size_t j = 0; j <= points; ++j) {
        const double t = horizon * static_cast<double>(j) / static_cast<double>(points);
        double re = 0.0;
        double im = 0.0;
        for (std::size_t k = 0; k < probs.size(); ++k) {
            re += probs[k] * std::cos(levels[k] * t);
            im -= probs[k] * std::sin(levels[k] * t);
        }
        const double m = std::hypot(re, im);
        out.minimum = std::min(out.minimum, m);
        if (m <= tol && out.first_below == kInfinity) {
            out.first_below = t;
        }
    }
    return out;
}

TEST(Robertson, EigenstateSelfPair) {
    const auto sz = pauli(PauliAxis::kZ);
    const auto c = robertson(sz, sz, QuantumState::basis(2, 0));
    EXPECT_EQ(c.lhs, 0.0);
    EXPECT_EQ(c.rhs, 0.0);
    EXPECT_TRUE(c.satisfied);
}

TEST(Robertson, SigmaXSigmaYSaturates) {
    const auto c = robertson(pauli(PauliAxis::kX), pauli(PauliAxis::kY), QuantumState::basis(2, 0));
    EXPECT_NEAR(c.lhs, 1.0, 1e-15);
    EXPECT_NEAR(c.rhs, 1.0, 1e-15);
    EXPECT_NEAR(c.slack, 0.0, 1e-15);
    EXPECT_TRUE(c.satisfied);
}

TEST(Robertson, SigmaXAgainstEnergyIsMinimalForFullCoherence) {
    // dsx dH = |sin wt| * hw/2 and |<[sx, H]>|/2 = (hw/2)|<sy>| = (hw/2)|sin wt|.
    const auto p = preset("fig2D");
    const auto s = qubit_scenario(p, {"sx"});
    for (double t : {0.3, 1.0, 2.2, 5.0}) {
        const auto c = robertson(pauli(PauliAxis::kX), p.hamiltonian(), state_at(s, t));
        EXPECT_NEAR(c.lhs, 0.5 * std::abs(std::sin(t)), 1e-14);
        EXPECT_NEAR(c.rhs, 0.5 * std::abs(std::sin(t)), 1e-14);
        EXPECT_TRUE(c.satisfied);
    }
}

TEST(Schrodinger, SigmaXSigmaY) {
    const auto c = schrodinger(pauli(PauliAxis::kX), pauli(PauliAxis::kY), QuantumState::basis(2, 0));
    EXPECT_NEAR(c.rhs, 1.0, 1e-15);
    EXPECT_TRUE(c.satisfied);
}

TEST(Schrodinger, CovarianceTermMatters) {
    // sx and sz on a state tilted in the x-z plane: Robertson rhs 0, covariance nonzero.
    const double th = 0.7;
    const QuantumState psi{std::cos(th / 2), std::sin(th / 2)};
    const auto r = robertson(pauli(PauliAxis::kX), pauli(PauliAxis::kZ), psi);
    const auto s = schrodinger(pauli(PauliAxis::kX), pauli(PauliAxis::kZ), psi);
    EXPECT_NEAR(r.rhs, 0.0, 1e-15);
    // Pure qubit on the x-z great circle: dsx dsz = |cov| = sin th cos th.
    EXPECT_NEAR(s.rhs, std::abs(std::sin(th) * std::cos(th)), 1e-14);
    EXPECT_NEAR(s.slack, 0.0, 1e-14);
}

TEST(UncertaintyRelations, RandomFuzz) {
    Rng rng(101);
    for (std::size_t n = 2; n <= 6; ++n) {
        for (int trial = 0; trial < 200; ++trial) {
            const auto a = testing::random_hermitian(rng, n);
            const auto b = testing::random_hermitian(rng, n);
            const auto psi = testing::random_state(rng, n);
            const auto r = robertson(a, b, psi);
            const auto s = schrodinger(a, b, psi);
            ASSERT_TRUE(r.satisfied) << r.slack;
            ASSERT_TRUE(s.satisfied) << s.slack;
            ASSERT_GE(s.rhs, r.rhs - 1e-12);
            ASSERT_DOUBLE_EQ(r.lhs, s.lhs);
        }
    }
}

TEST(UncertaintyRelations, DimensionMismatch) {
    Rng rng(3);
    EXPECT_THROW(robertson(pauli(PauliAxis::kX), testing::random_hermitian(rng, 3), QuantumState::basis(2, 0)),
                 DimensionError);
    EXPECT_THROW(schrodinger(pauli(PauliAxis::kX), pauli(PauliAxis::kY), QuantumState::basis(3, 0)),
                 DimensionError);
}

TEST(BoundCheck, SlackRule) {
    EXPECT_TRUE(BoundCheck::make(1.0, 1.0 + 0.5e-10).satisfied);
    EXPECT_FALSE(BoundCheck::make(1.0, 1.0 + 2e-10).satisfied);
    EXPECT_DOUBLE_EQ(BoundCheck::make(3.0, 1.0).slack, 2.0);
}

TEST(MandelstamTamm, FullCoherenceIsMinimalEverywhere) {
    const auto s = qubit_scenario(preset("fig2D"), {"sx"});
    for (const auto& m : mt_series(pauli(PauliAxis::kX), s)) {
        ASSERT_NEAR(m.delta_t, 1.0, 1e-9) << "t=" << m.t;
        ASSERT_NEAR(m.product, 0.5, 1e-9) << "t=" << m.t;
    }
}

TEST(MandelstamTamm, DivergesAtExtremum) {
    const auto s = qubit_scenario(preset("fig3AB"), {"sx"});
    const auto m = mt_sample(pauli(PauliAxis::kX), s, kPi);
    EXPECT_TRUE(m.infinite());
    EXPECT_EQ(m.product, kInfinity);
    EXPECT_TRUE(mt_sample(pauli(PauliAxis::kX), s, 0.0).infinite());
}

TEST(MandelstamTamm, ProductBoundedBelow) {
    for (const char* name : {"fig3AB", "fig3CD", "fig2B", "fig2C"}) {
        const auto s = qubit_scenario(preset(name), {"sx"});
        for (const auto& m : mt_series(pauli(PauliAxis::kX), s)) {
            if (!m.infinite()) {
                ASSERT_GE(m.product, 0.5 - 1e-10) << name << " t=" << m.t;
            }
        }
    }
}

TEST(MandelstamTamm, NearlyCoherentHasPeriodicSpikes) {
    const auto s = qubit_scenario(preset("fig3CD"), {"sx"});
    std::vector<double> spikes;
    for (const auto& m : mt_series(pauli(PauliAxis::kX), s)) {
        if (m.infinite()) {
            spikes.push_back(m.t);
        }
    }
    // Extrema at multiples of pi over [0, 4 pi].
    ASSERT_EQ(spikes.size(), 5u);
    for (std::size_t k = 0; k < spikes.size(); ++k) {
        EXPECT_NEAR(spikes[k], kPi * static_cast<double>(k), 1e-12);
    }
}

TEST(MandelstamTamm, RateMatchesClosedForm) {
    const auto p = QubitPreset(1.0, std::polar(std::sqrt(0.95), 0.3), std::polar(std::sqrt(0.05), 1.2));
    const auto s = qubit_scenario(p, {"sx"});
    for (std::size_t i = 0; i < s.grid().size(); i += 37) {
        const double t = s.grid().at(i);
        EXPECT_NEAR(mt_sample(pauli(PauliAxis::kX), s, t).rate, std::abs(analytic_sx_rate(p, t)), 1e-10);
    }
}

TEST(MandelstamTamm, RandomScenariosRespectBound) {
    Rng rng(103);
    for (int trial = 0; trial < 20; ++trial) {
        const auto n = testing::random_dim(rng, 2, 5);
        const Scenario s(1.0, testing::random_hermitian(rng, n), testing::random_state(rng, n));
        const auto a = testing::random_hermitian(rng, n);
        const MTAnalyzer analyzer(a, s);
        for (std::size_t i = 0; i < s.grid().size(); i += 10) {
            const auto m = analyzer.sample(s.grid().at(i));
            if (!m.infinite()) {
                ASSERT_GE(m.product, 0.5 * s.hbar() - 1e-10);
            }
        }
    }
}

TEST(MandelstamTamm, EigenstateRejected) {
    const auto s = qubit_scenario(preset("fig2A"), {"sx"});
    try {
        mt_sample(pauli(PauliAxis::kX), s, 0.0);
        FAIL() << "expected DomainError";
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("MT undefined for energy eigenstates"), std::string::npos);
    }
}

TEST(Overlap, Examples) {
    const auto q = prepare(preset("fig2D"));
    EXPECT_NEAR(std::abs(overlap(q.spectrum, q.amplitudes, 0.0, 1.0) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(overlap(q.spectrum, q.amplitudes, kPi, 1.0)), 0.0, 1e-15);
    EXPECT_THROW(overlap(q.spectrum, ComplexVector{1.0, 1.0}, 0.0, 1.0), DomainError);
}

TEST(Overlap, DominantProbabilityFloor) {
    Rng rng(107);
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = testing::random_dim(rng, 2, 6);
        const auto spectrum = hermitian_eigendecomposition(testing::random_hermitian(rng, n));
        const auto amps = energy_amplitudes(testing::random_state(rng, n), spectrum);
        double p_max = 0.0;
        for (const auto& z : amps) {
            p_max = std::max(p_max, std::norm(z));
        }
        const double floor = std::max(0.0, 2.0 * p_max - 1.0);
        for (int k = 0; k < 50; ++k) {
            const double t = testing::random_uniform(rng, 0.0, 50.0);
            ASSERT_GE(std::abs(overlap(spectrum, amps, t, 1.0)), floor - 1e-12);
        }
    }
}

TEST(Overlap, QubitFloorIsPredictability) {
    for (const auto& name : preset_names()) {
        const auto p = preset(name);
        const auto q = prepare(p);
        const double predictability = std::sqrt(std::max(0.0, 1.0 - p.coherence() * p.coherence()));
        for (int k = 0; k <= 200; ++k) {
            const double t = 4.0 * kPi * k / 200.0;
            ASSERT_GE(std::abs(overlap(q.spectrum, q.amplitudes, t, 1.0)), predictability - 1e-12) << name;
        }
    }
}

TEST(TauPerp, FullCoherenceQubit) {
    const auto q = prepare(preset("fig2D"));
    const auto r = ml_tau_perp(q.spectrum, q.amplitudes, 1.0);
    ASSERT_TRUE(r.found());
    EXPECT_NEAR(r.tau_perp, kPi, 1e-9);
}

TEST(TauPerp, ScalesWithHbarAndOmega) {
    const QubitPreset p(2.5, std::sqrt(0.5), std::sqrt(0.5), 0.7);
    const auto q = prepare(p);
    const auto r = ml_tau_perp(q.spectrum, q.amplitudes, p.hbar());
    ASSERT_TRUE(r.found());
    EXPECT_NEAR(r.tau_perp, kPi / 2.5, 1e-9);
}

TEST(TauPerp, DominantAmplitudeCertificate) {
    const auto q = prepare(QubitPreset(1.0, std::sqrt(0.95), std::sqrt(0.05)));
    const auto r = ml_tau_perp(q.spectrum, q.amplitudes, 1.0);
    EXPECT_FALSE(r.found());
    EXPECT_NEAR(r.min_overlap_bound, 0.9, 1e-12);
}

TEST(TauPerp, ThreeLevelCrossingMatchesDenseScan) {
    // Probabilities (1/4, 1/2, 1/4): overlap = e^{-it}(1/2 + 1/2 cos t), zero at t = pi.
    const auto q = three_level(0.5, std::sqrt(0.5), 0.5);
    const auto r = ml_tau_perp(q.spectrum, q.amplitudes, 1.0);
    ASSERT_TRUE(r.found());
    EXPECT_NEAR(r.tau_perp, kPi, 1e-6);

    // 10^6 points over one period resolve the ~1.3e-4 wide sub-tolerance window.
    const auto dense = dense_scan({0.25, 0.5, 0.25}, {0.0, 1.0, 2.0}, 2.0 * kPi, 1'000'000, 1e-9);
    ASSERT_LT(dense.minimum, 1e-9);
    // |overlap| = cos^2(t/2) is quadratic at its zero, so the dense scan first dips below
    // tolerance within ~6.4e-5 before the minimum; nothing earlier may qualify.
    EXPECT_GT(dense.first_below, kPi - 1e-4);
    EXPECT_LE(dense.first_below, r.tau_perp);
    EXPECT_LE(std::abs(overlap(q.spectrum, q.amplitudes, r.tau_perp, 1.0)), 1e-9);
}

TEST(TauPerp, DominantHalfThreeLevelNeverCrosses) {
    // Probabilities (1/2, 1/4, 1/4) on equal gaps: the analytic bound is exactly 0, yet the
    // overlap never vanishes. The search must report inconclusive, never claim a crossing.
    const auto q = three_level(std::sqrt(0.5), 0.5, 0.5);
    const auto dense = dense_scan({0.5, 0.25, 0.25}, {0.0, 1.0, 2.0}, 40.0 * kPi, 1'000'000, 1e-9);
    EXPECT_GT(dense.minimum, 0.2);
    EXPECT_EQ(dense.first_below, kInfinity);
    try {
        ml_tau_perp(q.spectrum, q.amplitudes, 1.0);
        FAIL() << "expected InconclusiveError";
    } catch (const InconclusiveError& e) {
        EXPECT_NEAR(e.min_observed_overlap(), dense.minimum, 1e-6);
    }
}

TEST(TauPerp, DegenerateSpectrumNeverOrthogonal) {
    const auto spectrum = hermitian_eigendecomposition(HermitianObservable(ComplexMatrix::identity(2)));
    const double a = std::sqrt(0.5);
    const auto r = ml_tau_perp(spectrum, ComplexVector{a, a}, 1.0);
    EXPECT_FALSE(r.found());
    EXPECT_EQ(r.min_overlap_bound, 1.0);
}

TEST(TauPerp, RejectsBadArguments) {
    const auto q = prepare(preset("fig2D"));
    EXPECT_THROW(ml_tau_perp(q.spectrum, q.amplitudes, 1.0, 0.0), DomainError);
    EXPECT_THROW(ml_tau_perp(q.spectrum, q.amplitudes, 1.0, 0.2), DomainError);
    EXPECT_THROW(ml_tau_perp(q.spectrum, q.amplitudes, 1.0, 1e-9, -1.0), DomainError);
}

TEST(TauPerp, BoundsHoldWheneverFound) {
    // Random real spectra with a balanced pair plus optional small extra weight.
    Rng rng(109);
    int found = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = testing::random_dim(rng, 2, 4);
        std::vector<double> levels(n);
        for (auto& e : levels) {
            e = testing::random_uniform(rng, -3.0, 3.0);
        }
        const auto spectrum = hermitian_eigendecomposition(HermitianObservable(ComplexMatrix::diagonal(levels)));
        ComplexVector amps(n, 0.0);
        amps[0] = std::sqrt(0.5);
        amps[n - 1] = std::sqrt(0.5);
        const auto r = ml_tau_perp(spectrum, amps, 1.0);
        ASSERT_TRUE(r.found());
        ++found;
        const auto b = ml_bounds(spectrum, amps, 1.0);
        EXPECT_GE(r.tau_perp, b.levi1 - 1e-9);
        EXPECT_LE(qsl_tau(spectrum, amps, 1.0), r.tau_perp + 1e-9);
    }
    EXPECT_EQ(found, 40);
}

TEST(MLBounds, FullCoherenceQubit) {
    const auto q = prepare(preset("fig2D"));
    const auto b = ml_bounds(q.spectrum, q.amplitudes, 1.0);
    EXPECT_NEAR(b.delta_h, 0.5, 1e-15);
    EXPECT_NEAR(b.mean_energy_shifted, 0.5, 1e-15);
    EXPECT_NEAR(b.levi1, kPi, 1e-12);
    EXPECT_NEAR(b.levi2, kPi, 1e-12);
    // <H> = 0 in the symmetric origin: the unshifted form diverges.
    EXPECT_EQ(b.levi2_unshifted, kInfinity);
}

TEST(MLBounds, GroundStateBothInfinite) {
    const auto q = prepare(preset("fig1A"));
    // fig1A puts all weight on the upper level; the ground state is spin-down.
    const auto ground = prepare(QubitPreset(1.0, 0.0, 1.0));
    const auto b = ml_bounds(ground.spectrum, ground.amplitudes, 1.0);
    EXPECT_EQ(b.levi1, kInfinity);
    EXPECT_EQ(b.levi2, kInfinity);
    EXPECT_EQ(qsl_tau(ground.spectrum, ground.amplitudes, 1.0), kInfinity);

    const auto excited = ml_bounds(q.spectrum, q.amplitudes, 1.0);
    EXPECT_EQ(excited.levi1, kInfinity);
    EXPECT_NEAR(excited.levi2, kPi / 2.0, 1e-12);
}

TEST(QSL, Examples) {
    const auto full = prepare(preset("fig2D"));
    EXPECT_NEAR(qsl_tau(full.spectrum, full.amplitudes, 1.0), kPi, 1e-12);

    const auto q = prepare(QubitPreset(1.0, std::sqrt(0.95), std::sqrt(0.05)));
    const auto b = ml_bounds(q.spectrum, q.amplitudes, 1.0);
    EXPECT_NEAR(b.delta_h, std::sqrt(0.95 * 0.05), 1e-15);
    EXPECT_NEAR(b.mean_energy_shifted, 0.95, 1e-15);
    EXPECT_NEAR(qsl_tau(q.spectrum, q.amplitudes, 1.0), kPi / (2.0 * std::sqrt(0.95 * 0.05)), 1e-12);
}

TEST(QSL, FiniteWhereOrthogonalizationIsNot) {
    for (const auto& name : preset_names()) {
        const auto p = preset(name);
        if (p.coherence() == 0.0) {
            continue;
        }
        const auto q = prepare(p);
        EXPECT_TRUE(std::isfinite(qsl_tau(q.spectrum, q.amplitudes, 1.0))) << name;
    }
}

}  // namespace
}  // namespace quncert
