#include "trimode/spectra.hpp"

#include <cmath>
#include <limits>

#include "trimode/errors.hpp"
#include "trimode/linalg3.hpp"

namespace trimode {

namespace {

// (omega - Delta)^2 + gamma^2 / 4, singular only for gamma = 0 at omega = Delta.
double lorentz_denom(double omega, double detuning, double decay, const char* which) {
    const double x = omega - detuning;
    const double denom = x * x + 0.25 * decay * decay;
    if (denom == 0.0) {
        throw SingularParameters(std::string("bare resonance of mode ") + which +
                                 " is singular at this frequency (zero decay on resonance)");
    }
    return denom;
}

}  // namespace

EffectiveCavityOmega effective_cavity_omega(const SystemParams& params, double omega) {
    params.validate();
    const double la = lorentz_denom(omega, params.detuning_a, params.decay_a, "A");
    const double lb = lorentz_denom(omega, params.detuning_b, params.decay_b, "B");
    const double ga2 = params.coupling_a * params.coupling_a;
    const double gb2 = params.coupling_b * params.coupling_b;

    EffectiveCavityOmega eff;
    eff.detuning_eff = params.detuning_c + ga2 * (omega - params.detuning_a) / la +
                       gb2 * (omega - params.detuning_b) / lb;
    eff.decay_eff = params.cavity_decay + params.decay_a * ga2 / la + params.decay_b * gb2 / lb;
    return eff;
}

double cavity_spectrum(const SystemParams& params, double omega) {
    const EffectiveCavityOmega eff = effective_cavity_omega(params, omega);
    const double la = lorentz_denom(omega, params.detuning_a, params.decay_a, "A");
    const double lb = lorentz_denom(omega, params.detuning_b, params.decay_b, "B");
    const double ga2 = params.coupling_a * params.coupling_a;
    const double gb2 = params.coupling_b * params.coupling_b;

    const double numerator = (params.thermal_c + 1.0) * params.cavity_decay +
                             ga2 * params.decay_a * (params.thermal_a + 1.0) / la +
                             gb2 * params.decay_b * (params.thermal_b + 1.0) / lb;
    const double x = omega - eff.detuning_eff;
    return numerator / (x * x + 0.25 * eff.decay_eff * eff.decay_eff);
}

KFactors k_factors(const SystemParams& params, double omega) {
    const EffectiveCavityOmega eff = effective_cavity_omega(params, omega);
    const double la = lorentz_denom(omega, params.detuning_a, params.decay_a, "A");
    const double lb = lorentz_denom(omega, params.detuning_b, params.decay_b, "B");
    const double x = omega - eff.detuning_eff;
    const double cavity = x * x + 0.25 * eff.decay_eff * eff.decay_eff;

    KFactors k;
    k.k_a = ((omega - params.detuning_a) * x - 0.25 * params.decay_a * eff.decay_eff) /
            (cavity * la);
    k.k_b = ((omega - params.detuning_b) * x - 0.25 * params.decay_b * eff.decay_eff) /
            (cavity * lb);
    return k;
}

EnsembleSpectra ensemble_spectra(const SystemParams& params, double omega) {
    const double sc = cavity_spectrum(params, omega);
    const KFactors k = k_factors(params, omega);
    const double la = lorentz_denom(omega, params.detuning_a, params.decay_a, "A");
    const double lb = lorentz_denom(omega, params.detuning_b, params.decay_b, "B");
    const double ga2 = params.coupling_a * params.coupling_a;
    const double gb2 = params.coupling_b * params.coupling_b;

    EnsembleSpectra s;
    s.s_a = (ga2 * sc + params.decay_a * (params.thermal_a + 1.0) * (1.0 + 2.0 * ga2 * k.k_a)) / la;
    s.s_b = (gb2 * sc + params.decay_b * (params.thermal_b + 1.0) * (1.0 + 2.0 * gb2 * k.k_b)) / lb;
    return s;
}

ModeSpectra spectra_resolvent_oracle(const SystemParams& params, double omega) {
    const DriftMatrix drift = drift_matrix(params);
    const Complex i{0.0, 1.0};

    CMat3 t;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) t(r, c) = -drift.generator(r, c);
        t(r, r) -= i * omega;
    }
    const Lu3 lu(t);

    // Columns of R = T^{-1} F with F = diag(sqrt(rates)); accumulate R D R^dagger.
    ModeSpectra s;
    for (int j = 0; j < 3; ++j) {
        CVec3 e{};
        e[j] = std::sqrt(drift.noise_rates[j]);
        const CVec3 col = lu.solve(e);
        const double w = drift.noise_weights[j];
        s.s_c += w * std::norm(col[0]);
        s.s_a += w * std::norm(col[1]);
        s.s_b += w * std::norm(col[2]);
    }
    return s;
}

const char* to_string(SpectrumMethod method) {
    switch (method) {
        case SpectrumMethod::kAnalytic: return "analytic";
        case SpectrumMethod::kResolvent: return "resolvent";
        case SpectrumMethod::kStochastic: return "stochastic";
    }
    return "unknown";
}

SpectrumCurve spectrum_sweep(const SystemParams& params, std::span<const double> grid) {
    params.validate();
    if (grid.empty()) throw InvalidParameter("spectrum_sweep: grid must be nonempty");
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw InvalidParameter("spectrum_sweep: grid must be strictly increasing");
        }
    }

    SpectrumCurve curve;
    curve.grid.assign(grid.begin(), grid.end());
    curve.s_c.reserve(grid.size());
    curve.s_a.reserve(grid.size());
    curve.s_b.reserve(grid.size());
    curve.params_snapshot = params;
    curve.method = SpectrumMethod::kAnalytic;

    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (double omega : grid) {
        try {
            const double sc = cavity_spectrum(params, omega);
            const EnsembleSpectra s = ensemble_spectra(params, omega);
            curve.s_c.push_back(sc);
            curve.s_a.push_back(s.s_a);
            curve.s_b.push_back(s.s_b);
        } catch (const SingularParameters&) {
            curve.s_c.push_back(nan);
            curve.s_a.push_back(nan);
            curve.s_b.push_back(nan);
        }
    }
    return curve;
}

}  // namespace trimode
