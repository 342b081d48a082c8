#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trimode/model.hpp"
#include "trimode/spectra.hpp"

namespace trimode {

/// Controls the Euler-Maruyama integration and the periodogram estimator.
/// Times are in units of 1/kappa.
struct SimulationConfig {
    double time_step = 0.0;          // must satisfy dt <= 0.1 / max decay rate
    double duration = 0.0;           // analyzed window length, >= 50 slowest decay times
    double burn_in = 0.0;            // discarded transient, >= 10 slowest decay times
    int trajectory_count = 1;
    std::uint64_t seed = 0;

    int record_stride = 0;           // steps between recorded samples; 0 = auto
    double smoothing_halfwidth = 0.1;  // local periodogram average, 0 = single bin
    bool hann_taper = false;         // taper option for narrow-line regimes
    double noise_scale = 1.0;        // multiplies all noise amplitudes (0 disables noise)
    int threads = 0;                 // worker cap; 0 = hardware concurrency

    void validate(const SystemParams& params) const;

    friend bool operator==(const SimulationConfig&, const SimulationConfig&) = default;
};

/// One recorded realization of the linearized fluctuations.
struct TrajectorySamples {
    std::vector<double> times;
    std::vector<Complex> mode_c;
    std::vector<Complex> mode_a;
    std::vector<Complex> mode_b;
};

/// Integrates d(dx) = M dx dt + F dW with independent complex Gaussian
/// increments of weight (N_i + 1) dt per channel. Deterministic given
/// (seed, trajectory_index). Throws IntegrationDiverged on blow-up.
TrajectorySamples simulate_trajectory(const SystemParams& params, const SimulationConfig& config,
                                      int trajectory_index);

/// Ensemble-averaged periodogram estimate of the fluctuation spectra on the
/// requested grid. Normalization is pinned by the decoupled-cavity limit:
/// for G = 0, N = 0, Delta_c = 0 the estimate converges to
/// kappa / (omega^2 + kappa^2/4). Output is bit-reproducible for a fixed
/// (seed, config, params) independent of the worker count.
SpectrumCurve estimate_spectrum(const SystemParams& params, const SimulationConfig& config,
                                std::span<const double> grid);

}  // namespace trimode
