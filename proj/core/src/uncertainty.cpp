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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "quncert/error.hpp"
#include "quncert/qstat.hpp"

namespace quncert {

namespace {

constexpr double kVanishingEnergy = 1e-14;
constexpr double kAmplitudeNormTol = 1e-10;

void require_pair(const HermitianObservable& a, const HermitianObservable& b, const QuantumState& psi,
                  const char* what) {
    if (a.dim() != b.dim() || a.dim() != psi.dim()) {
        throw DimensionError(std::string(what) + ": dimension mismatch");
    }
}

// <psi|M|psi> for a general (non-Hermitian) matrix.
Complex sandwich(const ComplexMatrix& m, const QuantumState& psi) {
    return inner(psi.amplitudes(), m.apply(psi.amplitudes()));
}

std::vector<double> probabilities(const SpectralDecomposition& spectrum, std::span<const Complex> amplitudes) {
    if (amplitudes.size() != spectrum.dim()) {
        throw DimensionError("energy amplitudes do not match the spectrum dimension");
    }
    std::vector<double> p(amplitudes.size());
    double total = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        p[k] = std::norm(amplitudes[k]);
        total += p[k];
    }
    if (std::abs(total - 1.0) > kAmplitudeNormTol) {
        throw DomainError("energy amplitudes not normalized (sum |a_k|^2 = " + std::to_string(total) + ")");
    }
    return p;
}

struct EnergyMoments {
    double mean = 0.0;
    double stddev = 0.0;
    double mean_above_ground = 0.0;
};

EnergyMoments energy_moments(const SpectralDecomposition& spectrum, std::span<const double> p) {
    EnergyMoments m;
    const double ground = spectrum.min_eigenvalue();
    for (std::size_t k = 0; k < p.size(); ++k) {
        m.mean += p[k] * spectrum.eigenvalues[k];
        m.mean_above_ground += p[k] * (spectrum.eigenvalues[k] - ground);
    }
    double var = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const double d = spectrum.eigenvalues[k] - m.mean;
        var += p[k] * d * d;
    }
    m.stddev = std::sqrt(var);
    return m;
}

double quarter_period_bound(double energy, double hbar) {
    return energy > kVanishingEnergy ? std::numbers::pi * hbar / (2.0 * energy) : kInfinity;
}

}  // namespace

BoundCheck BoundCheck::make(double lhs, double rhs) {
    BoundCheck c;
    c.lhs = lhs;
    c.rhs = rhs;
    c.slack = lhs - rhs;
    c.satisfied = c.slack >= -kBoundSlackTol;
    return c;
}

BoundCheck robertson(const HermitianObservable& a, const HermitianObservable& b, const QuantumState& psi) {
    require_pair(a, b, psi, "robertson");
    const double lhs = stats(a, psi).stddev * stats(b, psi).stddev;
    const double rhs = 0.5 * std::abs(sandwich(commutator(a, b), psi));
    return BoundCheck::make(lhs, rhs);
}

BoundCheck schrodinger(const HermitianObservable& a, const HermitianObservable& b, const QuantumState& psi) {
    require_pair(a, b, psi, "schrodinger");
    const auto sa = stats(a, psi);
    const auto sb = stats(b, psi);
    const ComplexMatrix ab = a.matrix() * b.matrix();
    const ComplexMatrix ba = b.matrix() * a.matrix();
    const Complex anti = sandwich(ab + ba, psi);
    const Complex comm = sandwich(ab - ba, psi);
    const double covariance = std::abs(0.5 * anti - sa.mean * sb.mean);
    const double half_comm = 0.5 * std::abs(comm);
    const double rhs = std::sqrt(covariance * covariance + half_comm * half_comm);
    return BoundCheck::make(sa.stddev * sb.stddev, rhs);
}

MTAnalyzer::MTAnalyzer(const HermitianObservable& a, const Scenario& s)
    : a_(a),
      h_(s.hamiltonian()),
      comm_(commutator(a, s.hamiltonian())),
      double_comm_(commutator(comm_, s.hamiltonian().matrix())),
      spectrum_(hermitian_eigendecomposition(s.hamiltonian())),
      amplitudes_(energy_amplitudes(s.initial_state(), spectrum_)),
      hbar_(s.hbar()) {
    if (a.dim() != s.dim()) {
        throw DimensionError("mt_sample: observable dimension mismatch");
    }
    const auto p = probabilities(spectrum_, amplitudes_);
    delta_e_ = energy_moments(spectrum_, p).stddev;
    if (!(delta_e_ > 1e-12)) {
        throw DomainError("MT undefined for energy eigenstates (dH = " + std::to_string(delta_e_) + ")");
    }
    const double a_norm = a.spectral_norm();
    const double span = spectrum_.max_eigenvalue() - spectrum_.min_eigenvalue();
    rate_floor_ = 1e-12 * span * a_norm / hbar_;
    delta_a_floor_ = 1e-9 * a_norm;
}

MTSample MTAnalyzer::sample(double t) const {
    const auto psi = state_at(spectrum_, amplitudes_, t, hbar_);
    const auto sa = stats(a_, psi);

    MTSample out;
    out.t = t;
    out.delta_a = sa.stddev;
    const Complex comm = sandwich(comm_, psi) / Complex(0.0, hbar_);
    out.rate = std::abs(comm.real());

    if (out.rate > rate_floor_) {
        out.delta_t = out.delta_a / out.rate;
    } else if (out.delta_a <= delta_a_floor_) {
        // Removable 0/0: both dA and d<A>/dt vanish linearly in (t - t0), the
        // ratio tends to hbar ||(A - <A>) H psi|| / |<[[A, H], H]>|.
        auto h_psi = h_.matrix().apply(psi.amplitudes());
        auto a_h_psi = a_.matrix().apply(h_psi);
        double numerator = 0.0;
        for (std::size_t i = 0; i < h_psi.size(); ++i) {
            numerator += std::norm(a_h_psi[i] - sa.mean * h_psi[i]);
        }
        numerator = hbar_ * std::sqrt(numerator);
        const double curvature = std::abs(sandwich(double_comm_, psi));
        out.delta_t = curvature > 0.0 ? numerator / curvature : kInfinity;
    } else {
        out.delta_t = kInfinity;
    }
    out.product = out.delta_t == kInfinity ? kInfinity : delta_e_ * out.delta_t;
    return out;
}

MTSample mt_sample(const HermitianObservable& a, const Scenario& s, double t) {
    return MTAnalyzer(a, s).sample(t);
}

std::vector<MTSample> mt_series(const HermitianObservable& a, const Scenario& s) {
    const MTAnalyzer analyzer(a, s);
    std::vector<MTSample> out;
    out.reserve(s.grid().size());
    for (std::size_t i = 0; i < s.grid().size(); ++i) {
        out.push_back(analyzer.sample(s.grid().at(i)));
    }
    return out;
}

Complex overlap(const SpectralDecomposition& spectrum, std::span<const Complex> amplitudes, double t,
                double hbar) {
    const auto p = probabilities(spectrum, amplitudes);
    Complex acc = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        acc += p[k] * std::polar(1.0, -spectrum.eigenvalues[k] * t / hbar);
    }
    return acc;
}

double default_tau_horizon(const SpectralDecomposition& spectrum, double hbar) {
    const double scale = std::max(1.0, std::max(std::abs(spectrum.min_eigenvalue()),
                                                std::abs(spectrum.max_eigenvalue())));
    double gap_min = kInfinity;
    for (std::size_t k = 1; k < spectrum.dim(); ++k) {
        const double gap = spectrum.eigenvalues[k] - spectrum.eigenvalues[k - 1];
        if (gap > 1e-12 * scale) {
            gap_min = std::min(gap_min, gap);
        }
    }
    if (gap_min == kInfinity) {
        return 0.0;
    }
    return 20.0 * 2.0 * std::numbers::pi * hbar / gap_min;
}

OrthogonalizationResult ml_tau_perp(const SpectralDecomposition& spectrum, std::span<const Complex> amplitudes,
                                    double hbar, double tol_orth, double horizon) {
    if (!(tol_orth > 0.0 && tol_orth < 0.1)) {
        throw DomainError("ml_tau_perp: tol_orth must lie in (0, 0.1)");
    }
    if (horizon < 0.0 || !std::isfinite(horizon)) {
        throw DomainError("ml_tau_perp: horizon must be positive");
    }
    const auto p = probabilities(spectrum, amplitudes);

    OrthogonalizationResult result;
    const double p_max = *std::max_element(p.begin(), p.end());
    const double bound = 2.0 * p_max - 1.0;
    if (bound > tol_orth) {
        result.kind = OrthogonalizationResult::Kind::kNeverOrthogonal;
        result.min_overlap_bound = bound;
        return result;
    }
    const double natural_horizon = default_tau_horizon(spectrum, hbar);
    if (natural_horizon == 0.0) {
        // One energy level: |overlap| == 1 identically.
        result.kind = OrthogonalizationResult::Kind::kNeverOrthogonal;
        result.min_overlap_bound = 1.0;
        return result;
    }
    result.horizon = horizon > 0.0 ? horizon : natural_horizon;

    auto magnitude = [&](double t) {
        Complex acc = 0.0;
        for (std::size_t k = 0; k < p.size(); ++k) {
            acc += p[k] * std::polar(1.0, -spectrum.eigenvalues[k] * t / hbar);
        }
        return std::abs(acc);
    };

    const std::size_t n = kOrthogonalityScanPoints;
    const double dt = result.horizon / static_cast<double>(n - 1);
    std::vector<double> g(n);
    for (std::size_t j = 0; j < n; ++j) {
        g[j] = magnitude(dt * static_cast<double>(j));
        result.min_observed_overlap = std::min(result.min_observed_overlap, g[j]);
    }

    constexpr double kInvPhi = 0.6180339887498949;
    for (std::size_t j = 1; j < n; ++j) {
        const bool left_ok = g[j] <= g[j - 1];
        const bool right_ok = j + 1 == n || g[j] <= g[j + 1];
        if (!left_ok || !right_ok) {
            continue;
        }
        double lo = dt * static_cast<double>(j - 1);
        double hi = dt * static_cast<double>(std::min(j + 1, n - 1));
        double x1 = hi - kInvPhi * (hi - lo);
        double x2 = lo + kInvPhi * (hi - lo);
        double f1 = magnitude(x1);
        double f2 = magnitude(x2);
        while (hi - lo > 1e-12 * hi) {
            if (f1 <= f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - kInvPhi * (hi - lo);
                f1 = magnitude(x1);
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + kInvPhi * (hi - lo);
                f2 = magnitude(x2);
            }
        }
        const double t_min = 0.5 * (lo + hi);
        const double g_min = magnitude(t_min);
        result.min_observed_overlap = std::min(result.min_observed_overlap, g_min);
        if (g_min <= tol_orth) {
            result.kind = OrthogonalizationResult::Kind::kFound;
            result.tau_perp = t_min;
            return result;
        }
    }
    throw InconclusiveError("ml_tau_perp: no orthogonal state within horizon " + std::to_string(result.horizon) +
                                " (min |overlap| " + std::to_string(result.min_observed_overlap) + ")",
                            result.min_observed_overlap);
}

MLBounds ml_bounds(const SpectralDecomposition& spectrum, std::span<const Complex> amplitudes, double hbar) {
    const auto p = probabilities(spectrum, amplitudes);
    const auto m = energy_moments(spectrum, p);
    MLBounds out;
    out.delta_h = m.stddev;
    out.mean_energy_shifted = m.mean_above_ground;
    out.mean_energy_raw = m.mean;
    out.levi1 = quarter_period_bound(m.stddev, hbar);
    out.levi2 = quarter_period_bound(m.mean_above_ground, hbar);
    out.levi2_unshifted = quarter_period_bound(m.mean, hbar);
    return out;
}

double qsl_tau(const SpectralDecomposition& spectrum, std::span<const Complex> amplitudes, double hbar) {
    const auto p = probabilities(spectrum, amplitudes);
    const auto m = energy_moments(spectrum, p);
    return quarter_period_bound(std::min(m.stddev, m.mean_above_ground), hbar);
}

}  // namespace quncert
