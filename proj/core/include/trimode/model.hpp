#pragma once

#include <cstdint>
#include <optional>

#include "trimode/linalg3.hpp"

namespace trimode {

/// Per-atom description of the two driven ensembles. All frequencies are in
/// units of the cavity decay rate.
struct MicroscopicParams {
    std::int64_t atom_count_a = 1;
    std::int64_t atom_count_b = 1;
    double single_atom_coupling_a = 0.0;
    double single_atom_coupling_b = 0.0;
    double drive_per_atom = 0.0;

    void validate() const;
};

/// Collective couplings and drive obtained from the microscopic description.
struct EffectiveCouplings {
    double coupling_a = 0.0;  // G_A
    double coupling_b = 0.0;  // G_B
    double drive = 0.0;       // chi
};

/// G_A = sqrt(N_a) g_a, G_B = sqrt(N_b) g_b, chi = sqrt(N_a) Omega.
EffectiveCouplings effective_from_microscopic(const MicroscopicParams& micro);

/// Bare mode frequencies plus the drive frequency, all positive.
struct FrequencySet {
    double omega_c = 1.0;
    double omega_a = 1.0;
    double omega_b = 1.0;
    double omega_f = 1.0;

    void validate() const;
};

struct Detunings {
    double cavity = 0.0;      // Delta_c
    double ensemble_a = 0.0;  // Delta_a
    double ensemble_b = 0.0;  // Delta_b
};

/// Delta_r = omega_r - omega_f for r = c, a, b.
Detunings detunings(const FrequencySet& freqs);

/// Bose occupation 1/(exp(omega/T) - 1); exactly 0 at T = 0.
/// Temperature is in units such that omega/T is the Bose exponent.
double thermal_occupation(double omega, double temperature);

/// Full effective model of the two collective modes coupled through the
/// cavity. Thermal occupations are stored directly so the N = 0 regime is
/// representable exactly. Atom counts are optional and only feed the
/// low-excitation validity warning.
struct SystemParams {
    double detuning_c = 0.0;
    double detuning_a = 0.0;
    double detuning_b = 0.0;
    double coupling_a = 0.0;   // G_A >= 0
    double coupling_b = 0.0;   // G_B >= 0
    double drive = 0.0;        // chi >= 0
    double cavity_decay = 1.0; // kappa > 0, the unit scale
    double decay_a = 0.0;      // gamma_A >= 0
    double decay_b = 0.0;      // gamma_B >= 0
    double thermal_c = 0.0;    // N(omega_c)
    double thermal_a = 0.0;    // N(omega_a)
    double thermal_b = 0.0;    // N(omega_b)

    std::optional<double> atoms_a;  // ensemble sizes, for validity checks only
    std::optional<double> atoms_b;
    double excitation_warn_fraction = 0.1;

    void validate() const;

    friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

/// Generator of the linearized Langevin dynamics d(dx)/dt = M dx + F dW plus
/// the coherent drive vector of the mean-field equations.
struct DriftMatrix {
    CMat3 generator;                        // M, mode order (c, A, B)
    std::array<double, 3> noise_rates{};    // kappa, gamma_A, gamma_B
    std::array<double, 3> noise_weights{};  // N_c + 1, N_a + 1, N_b + 1
    CVec3 drive_vector{};                   // (0, -i chi, 0)
};

DriftMatrix drift_matrix(const SystemParams& params);

}  // namespace trimode
