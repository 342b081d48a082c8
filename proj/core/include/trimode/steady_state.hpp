#pragma once

#include <span>
#include <string>
#include <vector>

#include "trimode/model.hpp"

namespace trimode {

/// Driven steady-state amplitudes of the three modes; all scale linearly in
/// the drive strength chi.
struct SteadyState {
    Complex amp_c{};
    Complex amp_a{};
    Complex amp_b{};
};

struct Susceptibilities {
    Complex f_a{};
    Complex f_b{};
};

/// f_a = G_A / (Delta_a - i gamma_A/2), f_b = G_B / (Delta_b - i gamma_B/2).
Susceptibilities susceptibilities(const SystemParams& params);

/// Effective cavity seen by the zero-frequency (mean-field) response.
struct EffectiveCavity0 {
    double detuning_eff = 0.0;  // Delta_eff^(0)
    double decay_eff = 0.0;     // kappa_eff^(0), always >= kappa
    Complex f_a{};
    Complex f_b{};
    Complex drive_factor{};     // F_A
};

EffectiveCavity0 effective_cavity_zero(const SystemParams& params);

/// Closed-form steady state.
SteadyState steady_state_analytic(const SystemParams& params);

/// Independent route: solves M x = -b by direct 3x3 complex elimination with
/// partial pivoting, where b is the drive vector.
SteadyState steady_state_numeric(const SystemParams& params);

/// Response intensities sampled over a detuning grid. Singular grid points
/// are flagged as NaN and the sweep continues.
struct ResponseCurve {
    std::vector<double> grid;
    std::vector<double> intensity_a;  // |A_s|^2
    std::vector<double> intensity_b;  // |B_s|^2
    std::vector<double> intensity_c;  // |c_s|^2
    SystemParams params_snapshot;
};

/// Sweeps Delta_a over `grid`; with `degenerate` set (the default) Delta_b and
/// Delta_c follow the same value, otherwise they stay at their `params` values.
ResponseCurve response_sweep(const SystemParams& params, std::span<const double> grid,
                             bool degenerate = true);

/// Uniform closed grid with `count` >= 2 points.
std::vector<double> linspace(double start, double stop, std::size_t count);

/// Bosonization validity: warns when a peak excitation exceeds the configured
/// fraction of a provided ensemble size. Silent when atom counts are absent.
std::vector<std::string> low_excitation_warnings(const SystemParams& params,
                                                 double peak_intensity_a,
                                                 double peak_intensity_b);

}  // namespace trimode
