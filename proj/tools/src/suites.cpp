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

#include "quncert_cli/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <cstdio>
#include <numbers>
#include <random>

#include "quncert/toymodel.hpp"
#include "quncert/uncertainty.hpp"
#include "quncert_cli/csv.hpp"
#include "quncert_cli/scenario_file.hpp"

namespace quncert::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kConservationTol = 1e-10;
constexpr double kOffsetTol = 1e-10;
constexpr double kOffsets[] = {-5.0, 0.5, 7.3};

using Checks = std::vector<Check>;


// Seeded inputs for the suites that fuzz. Same draws on every run for a seed.
class Generator {
public:
    explicit Generator(unsigned long long seed) : rng_(seed) {}

    std::size_t dim(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_); }

    Complex complex() {
        const double re = normal_(rng_);
        const double im = normal_(rng_);
        return {re, im};
    }

    HermitianObservable hermitian(std::size_t n) {
        ComplexMatrix m(n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                m(r, c) = complex();
            }
        }
        ComplexMatrix h = m + m.adjoint();
        h *= 0.5;
        return HermitianObservable(h);
    }

    QuantumState state(std::size_t n) {
        ComplexVector v(n);
        for (auto& z : v) z = complex();
        return QuantumState::normalized(std::move(v));
    }

    Scenario scenario(std::size_t n, std::size_t observables) {
        auto h = hermitian(n);
        auto psi = state(n);
        std::vector<NamedObservable> obs;
        for (std::size_t k = 0; k < observables; ++k) {
            obs.emplace_back("a" + std::to_string(k), hermitian(n));
        }
        return Scenario(1.0, std::move(h), std::move(psi), std::move(obs));
    }

private:
    std::mt19937_64 rng_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

std::string prefix(const std::string& label, const std::string& what) { return label + ": " + what; }

struct Prepared {
    SpectralDecomposition spectrum;
    ComplexVector amplitudes;
};

Prepared prepare(const Scenario& s) {
    auto spectrum = hermitian_eigendecomposition(s.hamiltonian());
    auto amps = energy_amplitudes(s.initial_state(), spectrum);
    return {std::move(spectrum), std::move(amps)};
}

// ---- conservation --------------------------------------------------------

void conservation_detail(const std::string& label, const Scenario& s, Checks& out) {
    const auto r = check_conservation(evolve(s), kConservationTol);
    out.push_back(Check::below(prefix(label, "drift of <H>"), r.mean_drift, kConservationTol));
    out.push_back(Check::below(prefix(label, "drift of Var(H)"), r.variance_drift, kConservationTol));
    out.push_back(Check::below(prefix(label, "drift of dH"), r.stddev_drift, kConservationTol));
    out.push_back(Check::below(prefix(label, "drift of coherence"), r.coherence_drift, kConservationTol));
    out.push_back(Check::below(prefix(label, "drift of predictability"), r.predictability_drift, kConservationTol));
}

Checks conservation_suite(const SuiteContext& ctx) {
    Checks out;
    if (ctx.scenario) {
        conservation_detail(ctx.scenario_label, *ctx.scenario, out);
        return out;
    }
    for (const auto& name : preset_names()) {
        const auto r = check_conservation(evolve(qubit_scenario(preset(name), {"sx"})), kConservationTol);
        out.push_back(Check::below(prefix(name, "max conserved-quantity drift"), r.max_drift(), kConservationTol));
    }
    Generator gen(ctx.seed);
    for (int k = 0; k < 10; ++k) {
        const auto n = gen.dim(2, 6);
        const auto s = gen.scenario(n, 0);
        const auto r = check_conservation(evolve(s), kConservationTol);
        out.push_back(Check::below(prefix("random#" + std::to_string(k) + " dim " + std::to_string(n),
                                          "max conserved-quantity drift"),
                                   r.max_drift(), kConservationTol));
    }
    return out;
}

// ---- offset ----------------------------------------------------------------

void offset_checks(const std::string& label, const Scenario& s, Checks& out) {
    for (double e0 : kOffsets) {
        const auto r = offset_invariance_check(s, e0, kOffsetTol);
        char tag[64];
        std::snprintf(tag, sizeof tag, "E0 = %g", e0);
        out.push_back(Check::below(prefix(label, std::string(tag) + " max series difference"), r.max_stat_difference,
                                   kOffsetTol));
        out.push_back(Check::below(prefix(label, std::string(tag) + " | |<psi|psi'>| - 1 |"), r.max_overlap_defect,
                                   kOffsetTol));
    }
}

Checks offset_suite(const SuiteContext& ctx) {
    Checks out;
    if (ctx.scenario) {
        offset_checks(ctx.scenario_label, *ctx.scenario, out);
        return out;
    }
    for (const char* name : {"fig2C", "fig2D", "fig3AB"}) {
        offset_checks(name, qubit_scenario(preset(name), {"sx", "sy", "px_up"}), out);
    }
    Generator gen(ctx.seed);
    offset_checks("random dim 3", gen.scenario(3, 2), out);
    return out;
}

// ---- ehrenfest -------------------------------------------------------------

double third_adjoint_norm(const HermitianObservable& a, const HermitianObservable& h) {
    ComplexMatrix x = a.matrix();
    for (int k = 0; k < 3; ++k) {
        x = commutator(h.matrix(), x);
    }
    // ad_H^3(A) is anti-Hermitian; i times it is Hermitian with the same norm.
    ComplexMatrix ix = Complex(0.0, 1.0) * x;
    ix += ix.adjoint();
    ix *= 0.5;
    return HermitianObservable(ix).spectral_norm();
}

void ehrenfest_checks(const std::string& label, const Scenario& s, const std::string& name,
                      const HermitianObservable& a, Checks& out) {
    const auto spectrum = hermitian_eigendecomposition(s.hamiltonian());
    const double h = default_fd_step(spectrum, s.hbar());
    const double hbar3 = s.hbar() * s.hbar() * s.hbar();
    // Centered difference remainder: h^2/6 max |d^3<A>/dt^3| <= h^2 ||ad_H^3 A|| / (6 hbar^3).
    const double bound = h * h * third_adjoint_norm(a, s.hamiltonian()) / (6.0 * hbar3) + 1e-10;

    double worst = 0.0;
    double worst_t = s.grid().start;
    for (std::size_t i = 0; i < s.grid().size(); ++i) {
        const double t = s.grid().at(i);
        const double r = ehrenfest_residual(a, s, t, h);
        if (r > worst) {
            worst = r;
            worst_t = t;
        }
    }
    auto c = Check::at_most(prefix(label, name + " max Ehrenfest residual"), worst, bound);
    c.detail = "fd_step " + format_real(h) + ", bound h^2 ||ad_H^3 A|| / (6 hbar^3) + 1e-10";
    out.push_back(std::move(c));

    // Second-order scaling, only where truncation dominates rounding.
    const double floor = 1e-15 * std::max(1.0, a.spectral_norm()) / h;
    const double half = ehrenfest_residual(a, s, worst_t, h / 2.0);
    if (half > 100.0 * floor) {
        auto rc = Check::near(prefix(label, name + " |residual ratio on halving fd_step - 4|"), worst / half, 4.0, 0.5);
        rc.detail = "ratio " + format_real(worst / half);
        out.push_back(std::move(rc));
    }
}

Checks ehrenfest_suite(const SuiteContext& ctx) {
    Checks out;
    if (ctx.scenario) {
        const auto& s = *ctx.scenario;
        ehrenfest_checks(ctx.scenario_label, s, "H", s.hamiltonian(), out);
        for (const auto& [name, a] : s.observables()) {
            ehrenfest_checks(ctx.scenario_label, s, name, a, out);
        }
        return out;
    }
    for (const char* name : {"fig2B", "fig2C", "fig2D", "fig3AB", "fig3CD"}) {
        const auto s = qubit_scenario(preset(name), {"sx"});
        ehrenfest_checks(name, s, "sx", pauli(PauliAxis::kX), out);
    }
    const auto s = qubit_scenario(preset("fig2D"), {"sx"});
    ehrenfest_checks("fig2D", s, "sz", pauli(PauliAxis::kZ), out);
    ehrenfest_checks("fig2D", s, "H", s.hamiltonian(), out);
    // Fixed absolute step: the second-order error is h^2/6 < 1e-8.
    double worst = 0.0;
    for (std::size_t i = 0; i < s.grid().size(); ++i) {
        worst = std::max(worst, ehrenfest_residual(pauli(PauliAxis::kX), s, s.grid().at(i), 1e-4));
    }
    out.push_back(Check::below("fig2D: sx max Ehrenfest residual at fd_step 1e-4", worst, 1e-8));
    return out;
}

// ---- robertson / schrodinger ----------------------------------------------

using Relation = std::function<BoundCheck(const HermitianObservable&, const HermitianObservable&, const QuantumState&)>;

struct Worst {
    BoundCheck check{0.0, 0.0, kInfinity, true};
    void add(const BoundCheck& c) {
        if (c.slack < check.slack) check = c;
    }
};

Checks relation_suite(const SuiteContext& ctx, const std::string& relation_name, const Relation& relation,
                      bool compare_with_robertson) {
    Checks out;
    if (ctx.scenario) {
        const auto& s = *ctx.scenario;
        std::vector<NamedObservable> ops{{"H", s.hamiltonian()}};
        ops.insert(ops.end(), s.observables().begin(), s.observables().end());
        for (std::size_t i = 0; i < ops.size(); ++i) {
            for (std::size_t j = i + 1; j < ops.size(); ++j) {
                Worst w;
                for (std::size_t k = 0; k < s.grid().size(); k += 10) {
                    w.add(relation(ops[i].second, ops[j].second, state_at(s, s.grid().at(k))));
                }
                out.push_back(Check::at_least(
                    prefix(ctx.scenario_label, relation_name + " (" + ops[i].first + ", " + ops[j].first + ") worst"),
                    w.check.lhs, w.check.rhs, kBoundSlackTol));
            }
        }
        if (out.empty()) {
            throw InputError(relation_name + " suite: scenario has no observables to pair with H");
        }
        return out;
    }

    const auto tight = relation(pauli(PauliAxis::kX), pauli(PauliAxis::kY), QuantumState::basis(2, 0));
    out.push_back(Check::at_least(relation_name + ": (sx, sy) on |up_z>", tight.lhs, tight.rhs, kBoundSlackTol));
    Generator gen(ctx.seed);
    for (std::size_t n = 2; n <= 6; ++n) {
        Worst w;
        double ordering = kInfinity;
        for (int trial = 0; trial < 1000; ++trial) {
            const auto a = gen.hermitian(n);
            const auto b = gen.hermitian(n);
            const auto psi = gen.state(n);
            const auto c = relation(a, b, psi);
            w.add(c);
            if (compare_with_robertson) {
                ordering = std::min(ordering, c.rhs - robertson(a, b, psi).rhs);
            }
        }
        const std::string tag = "dim " + std::to_string(n) + ", 1000 random triples";
        out.push_back(Check::at_least(relation_name + ": " + tag + " worst", w.check.lhs, w.check.rhs, kBoundSlackTol));
        if (compare_with_robertson) {
            out.push_back(Check::at_least(relation_name + ": " + tag + " min(rhs - robertson rhs)", ordering, 0.0, 1e-12));
        }
    }
    return out;
}

// ---- mandelstam-tamm -------------------------------------------------------

void mt_checks(const std::string& label, const Scenario& s, const std::string& name, const HermitianObservable& a,
               Checks& out) {
    const MTAnalyzer analyzer(a, s);
    double min_product = kInfinity;
    std::size_t infinite = 0;
    for (std::size_t i = 0; i < s.grid().size(); ++i) {
        const auto m = analyzer.sample(s.grid().at(i));
        if (m.infinite()) {
            ++infinite;
        } else {
            min_product = std::min(min_product, m.product);
        }
    }
    auto c = Check::at_least(prefix(label, name + " min finite dE dT vs hbar/2"), min_product, 0.5 * s.hbar());
    c.detail = std::to_string(infinite) + " of " + std::to_string(s.grid().size()) + " samples divergent";
    out.push_back(std::move(c));
}

Checks mt_suite(const SuiteContext& ctx) {
    Checks out;
    if (ctx.scenario) {
        const auto& s = *ctx.scenario;
        if (s.observables().empty()) {
            throw InputError("mt suite: scenario defines no observables");
        }
        for (const auto& [name, a] : s.observables()) {
            mt_checks(ctx.scenario_label, s, name, a, out);
        }
        return out;
    }
    const auto sx = pauli(PauliAxis::kX);
    const auto full = qubit_scenario(preset("fig2D"), {"sx"});
    double dt_err = 0.0;
    double product_err = 0.0;
    for (const auto& m : mt_series(sx, full)) {
        dt_err = std::max(dt_err, std::abs(m.delta_t - 1.0));
        product_err = std::max(product_err, std::abs(m.product - 0.5));
    }
    out.push_back(Check::at_most("fig2D: max |dT - 1/omega|", dt_err, 1e-9));
    out.push_back(Check::at_most("fig2D: max |dE dT - hbar/2|", product_err, 1e-9));
    for (const char* name : {"fig2B", "fig2C", "fig3AB", "fig3CD"}) {
        mt_checks(name, qubit_scenario(preset(name), {"sx"}), "sx", sx, out);
    }
    return out;
}

// ---- margolus-levitin / qsl -----------------------------------------------

void ml_checks(const std::string& label, const Scenario& s, Checks& out) {
    const auto q = prepare(s);
    const auto b = ml_bounds(q.spectrum, q.amplitudes, s.hbar());
    OrthogonalizationResult r;
    try {
        r = ml_tau_perp(q.spectrum, q.amplitudes, s.hbar());
    } catch (const InconclusiveError& e) {
        out.push_back(Check::inconclusive(prefix(label, "tau_perp search"), e.what()));
        return;
    }
    if (r.found()) {
        out.push_back(Check::at_least(prefix(label, "tau_perp >= levi1 (pi hbar / 2 dH)"), r.tau_perp, b.levi1, 1e-9));
        out.push_back(
            Check::at_least(prefix(label, "tau_perp >= levi2 (pi hbar / 2 <H - E_min>)"), r.tau_perp, b.levi2, 1e-9));
        if (q.spectrum.dim() == 2) {
            // Balanced qubit: first zero of the overlap at pi hbar / (E_2 - E_1).
            const double gap = q.spectrum.eigenvalues[1] - q.spectrum.eigenvalues[0];
            out.push_back(Check::near(prefix(label, "tau_perp vs pi hbar / (E_2 - E_1)"), r.tau_perp,
                                      kPi * s.hbar() / gap, 1e-9));
        }
    } else {
        auto c = Check::at_least(prefix(label, "never orthogonal: overlap floor 2 max p_k - 1"), r.min_overlap_bound, 0.0,
                                 0.0);
        c.detail = "tau_perp = inf";
        out.push_back(std::move(c));
    }
}

Checks ml_suite(const SuiteContext& ctx) {
    Checks out;
    if (ctx.scenario) {
        ml_checks(ctx.scenario_label, *ctx.scenario, out);
        return out;
    }
    for (const auto& name : preset_names()) {
        ml_checks(name, qubit_scenario(preset(name), {"sx"}), out);
    }
    const auto full = prepare(qubit_scenario(preset("fig2D"), {"sx"}));
    const auto r = ml_tau_perp(full.spectrum, full.amplitudes, 1.0);
    const auto b = ml_bounds(full.spectrum, full.amplitudes, 1.0);
    out.push_back(Check::near("fig2D: tau_perp = pi / omega", r.tau_perp, kPi, 1e-9));
    out.push_back(Check::near("fig2D: levi1 equality", r.tau_perp, b.levi1, 1e-9));
    out.push_back(Check::equal("fig2D: levi2 without the E_min = 0 shift", b.levi2_unshifted, kInfinity));

    const auto dominant = prepare(qubit_scenario(preset("fig3AB"), {"sx"}));
    const auto d = ml_tau_perp(dominant.spectrum, dominant.amplitudes, 1.0);
    out.push_back(Check::near("fig3AB (|a1|^2 = 0.95): never-orthogonal bound = 0.9", d.min_overlap_bound, 0.9, 1e-12));
    return out;
}

void qsl_checks(const std::string& label, const Scenario& s, Checks& out) {
    const auto q = prepare(s);
    const double tau = qsl_tau(q.spectrum, q.amplitudes, s.hbar());
    const auto b = ml_bounds(q.spectrum, q.amplitudes, s.hbar());
    if (b.delta_h <= 1e-14) {
        out.push_back(Check::equal(prefix(label, "tau_QSL of an energy eigenstate"), tau, kInfinity));
        return;
    }
    out.push_back(Check::below(prefix(label, "tau_QSL finite"), tau, kInfinity));
    try {
        const auto r = ml_tau_perp(q.spectrum, q.amplitudes, s.hbar());
        if (r.found()) {
            out.push_back(Check::at_least(prefix(label, "tau_perp >= tau_QSL"), r.tau_perp, tau, 1e-9));
        }
    } catch (const InconclusiveError& e) {
        out.push_back(Check::inconclusive(prefix(label, "tau_perp search"), e.what()));
    }
}

Checks qsl_suite(const SuiteContext& ctx) {
    Checks out;
    if (ctx.scenario) {
        qsl_checks(ctx.scenario_label, *ctx.scenario, out);
        return out;
    }
    for (const auto& name : preset_names()) {
        qsl_checks(name, qubit_scenario(preset(name), {"sx"}), out);
    }
    const auto full = prepare(qubit_scenario(preset("fig2D"), {"sx"}));
    out.push_back(Check::near("fig2D: tau_QSL = pi / omega", qsl_tau(full.spectrum, full.amplitudes, 1.0), kPi, 1e-9));
    return out;
}

using SuiteFn = std::function<Checks(const SuiteContext&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites{
        {"conservation", conservation_suite},
        {"offset", offset_suite},
        {"ehrenfest", ehrenfest_suite},
        {"robertson", [](const SuiteContext& c) { return relation_suite(c, "robertson", robertson, false); }},
        {"schrodinger", [](const SuiteContext& c) { return relation_suite(c, "schrodinger", schrodinger, true); }},
        {"mt", mt_suite},
        {"ml", ml_suite},
        {"qsl", qsl_suite},
    };
    return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        out.emplace_back("all");
        return out;
    }();
    return names;
}

std::vector<Check> run_suite(const std::string& suite, const SuiteContext& ctx) {
    if (suite == "all") {
        Checks out;
        for (const auto& [name, fn] : registry()) {
            for (auto& c : fn(ctx)) {
                c.name = name + "/" + c.name;
                out.push_back(std::move(c));
            }
        }
        return out;
    }
    for (const auto& [name, fn] : registry()) {
        if (name == suite) return fn(ctx);
    }
    throw InputError("unknown suite '" + suite + "'");
}

}  // namespace quncert::cli
