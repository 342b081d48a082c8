#pragma once

#include <span>
#include <string>
#include <vector>

#include "trimode/model.hpp"

namespace trimode {

/// Frequency-dependent effective cavity parameters.
struct EffectiveCavityOmega {
    double detuning_eff = 0.0;  // Delta_eff(omega)
    double decay_eff = 0.0;     // kappa_eff(omega), always >= kappa
};

EffectiveCavityOmega effective_cavity_omega(const SystemParams& params, double omega);

/// Anti-normally ordered fluctuation spectrum of the cavity mode.
double cavity_spectrum(const SystemParams& params, double omega);

struct KFactors {
    double k_a = 0.0;
    double k_b = 0.0;
};

/// Interference weights coupling the cavity noise into the ensemble spectra.
KFactors k_factors(const SystemParams& params, double omega);

struct EnsembleSpectra {
    double s_a = 0.0;
    double s_b = 0.0;
};

EnsembleSpectra ensemble_spectra(const SystemParams& params, double omega);

struct ModeSpectra {
    double s_c = 0.0;
    double s_a = 0.0;
    double s_b = 0.0;
};

/// Independent route: builds R(omega) = (-i omega I - M)^{-1} F from the drift
/// matrix and returns the diagonal of R D R^dagger with D the noise weights.
/// Agrees with the closed forms in exact arithmetic.
ModeSpectra spectra_resolvent_oracle(const SystemParams& params, double omega);

enum class SpectrumMethod { kAnalytic, kResolvent, kStochastic };

const char* to_string(SpectrumMethod method);

/// Sampled fluctuation spectra over a frequency grid. Singular points are
/// flagged as NaN.
struct SpectrumCurve {
    std::vector<double> grid;
    std::vector<double> s_c;
    std::vector<double> s_a;
    std::vector<double> s_b;
    SystemParams params_snapshot;
    SpectrumMethod method = SpectrumMethod::kAnalytic;
    std::vector<std::string> warnings;
};

SpectrumCurve spectrum_sweep(const SystemParams& params, std::span<const double> grid);

}  // namespace trimode
