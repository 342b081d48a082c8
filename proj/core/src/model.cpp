#include "trimode/model.hpp"

#include <cmath>

#include "trimode/errors.hpp"

namespace trimode {

namespace {

void require(bool ok, const char* message) {
    if (!ok) throw InvalidParameter(message);
}

}  // namespace

void MicroscopicParams::validate() const {
    require(atom_count_a >= 1, "atom_count_a must be >= 1");
    require(atom_count_b >= 1, "atom_count_b must be >= 1");
    require(std::isfinite(single_atom_coupling_a), "single_atom_coupling_a must be finite");
    require(std::isfinite(single_atom_coupling_b), "single_atom_coupling_b must be finite");
    require(std::isfinite(drive_per_atom), "drive_per_atom must be finite");
}

EffectiveCouplings effective_from_microscopic(const MicroscopicParams& micro) {
    micro.validate();
    const double root_na = std::sqrt(static_cast<double>(micro.atom_count_a));
    const double root_nb = std::sqrt(static_cast<double>(micro.atom_count_b));
    return {root_na * micro.single_atom_coupling_a, root_nb * micro.single_atom_coupling_b,
            root_na * micro.drive_per_atom};
}

void FrequencySet::validate() const {
    require(std::isfinite(omega_c) && omega_c > 0.0, "omega_c must be positive and finite");
    require(std::isfinite(omega_a) && omega_a > 0.0, "omega_a must be positive and finite");
    require(std::isfinite(omega_b) && omega_b > 0.0, "omega_b must be positive and finite");
    require(std::isfinite(omega_f) && omega_f > 0.0, "omega_f must be positive and finite");
}

Detunings detunings(const FrequencySet& freqs) {
    freqs.validate();
    return {freqs.omega_c - freqs.omega_f, freqs.omega_a - freqs.omega_f,
            freqs.omega_b - freqs.omega_f};
}

double thermal_occupation(double omega, double temperature) {
    if (!(std::isfinite(omega) && omega > 0.0)) {
        throw InvalidParameter("thermal_occupation: omega must be positive");
    }
    if (!(std::isfinite(temperature) && temperature >= 0.0)) {
        throw InvalidParameter("thermal_occupation: temperature must be >= 0");
    }
    if (temperature == 0.0) return 0.0;
    return 1.0 / std::expm1(omega / temperature);
}

void SystemParams::validate() const {
    require(std::isfinite(detuning_c), "detuning_c must be finite");
    require(std::isfinite(detuning_a), "detuning_a must be finite");
    require(std::isfinite(detuning_b), "detuning_b must be finite");
    require(std::isfinite(coupling_a) && coupling_a >= 0.0, "coupling_a must be >= 0");
    require(std::isfinite(coupling_b) && coupling_b >= 0.0, "coupling_b must be >= 0");
    require(std::isfinite(drive) && drive >= 0.0, "drive must be >= 0");
    require(std::isfinite(cavity_decay) && cavity_decay > 0.0, "cavity_decay must be > 0");
    require(std::isfinite(decay_a) && decay_a >= 0.0, "decay_a must be >= 0");
    require(std::isfinite(decay_b) && decay_b >= 0.0, "decay_b must be >= 0");
    require(std::isfinite(thermal_c) && thermal_c >= 0.0, "thermal_c must be >= 0");
    require(std::isfinite(thermal_a) && thermal_a >= 0.0, "thermal_a must be >= 0");
    require(std::isfinite(thermal_b) && thermal_b >= 0.0, "thermal_b must be >= 0");
    if (atoms_a) require(std::isfinite(*atoms_a) && *atoms_a > 0.0, "atoms_a must be > 0");
    if (atoms_b) require(std::isfinite(*atoms_b) && *atoms_b > 0.0, "atoms_b must be > 0");
    require(std::isfinite(excitation_warn_fraction) && excitation_warn_fraction > 0.0,
            "excitation_warn_fraction must be > 0");
}

DriftMatrix drift_matrix(const SystemParams& params) {
    params.validate();
    const Complex i{0.0, 1.0};

    DriftMatrix drift;
    CMat3& m = drift.generator;
    m(0, 0) = -i * params.detuning_c - 0.5 * params.cavity_decay;
    m(0, 1) = -i * params.coupling_a;
    m(0, 2) = -i * params.coupling_b;
    m(1, 0) = -i * params.coupling_a;
    m(1, 1) = -i * params.detuning_a - 0.5 * params.decay_a;
    m(1, 2) = Complex{};  // the ensembles couple only through the cavity
    m(2, 0) = -i * params.coupling_b;
    m(2, 1) = Complex{};
    m(2, 2) = -i * params.detuning_b - 0.5 * params.decay_b;

    drift.noise_rates = {params.cavity_decay, params.decay_a, params.decay_b};
    drift.noise_weights = {params.thermal_c + 1.0, params.thermal_a + 1.0, params.thermal_b + 1.0};
    drift.drive_vector = {Complex{}, -i * params.drive, Complex{}};
    return drift;
}

}  // namespace trimode
