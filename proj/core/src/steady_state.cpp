#include "trimode/steady_state.hpp"

#include <cmath>
#include <limits>

#include "trimode/errors.hpp"

namespace trimode {

namespace {

Complex oscillator_pole(double detuning, double decay, const char* which) {
    if (detuning == 0.0 && decay == 0.0) {
        throw SingularParameters(std::string("susceptibility of ensemble ") + which +
                                 " is singular: detuning and decay are both zero");
    }
    return Complex{detuning, -0.5 * decay};
}

}  // namespace

Susceptibilities susceptibilities(const SystemParams& params) {
    params.validate();
    const Complex pole_a = oscillator_pole(params.detuning_a, params.decay_a, "A");
    const Complex pole_b = oscillator_pole(params.detuning_b, params.decay_b, "B");
    return {params.coupling_a / pole_a, params.coupling_b / pole_b};
}

EffectiveCavity0 effective_cavity_zero(const SystemParams& params) {
    const Susceptibilities f = susceptibilities(params);
    const double la = params.detuning_a * params.detuning_a + 0.25 * params.decay_a * params.decay_a;
    const double lb = params.detuning_b * params.detuning_b + 0.25 * params.decay_b * params.decay_b;
    const double ga2 = params.coupling_a * params.coupling_a;
    const double gb2 = params.coupling_b * params.coupling_b;

    EffectiveCavity0 eff;
    eff.decay_eff = params.cavity_decay + ga2 * params.decay_a / la + gb2 * params.decay_b / lb;
    eff.detuning_eff = params.detuning_c - ga2 * params.detuning_a / la - gb2 * params.detuning_b / lb;
    eff.f_a = f.f_a;
    eff.f_b = f.f_b;
    const Complex cavity_pole{eff.detuning_eff, -0.5 * eff.decay_eff};
    eff.drive_factor = 1.0 + params.coupling_a * f.f_a / cavity_pole;
    return eff;
}

SteadyState steady_state_analytic(const SystemParams& params) {
    const EffectiveCavity0 eff = effective_cavity_zero(params);
    const Complex pole_a{params.detuning_a, -0.5 * params.decay_a};
    const Complex cavity_pole{eff.detuning_eff, -0.5 * eff.decay_eff};

    SteadyState s;
    s.amp_a = -params.drive * eff.drive_factor / pole_a;
    s.amp_b = params.drive * eff.f_a * eff.f_b / cavity_pole;
    s.amp_c = params.drive * eff.f_a / cavity_pole;
    return s;
}

SteadyState steady_state_numeric(const SystemParams& params) {
    const DriftMatrix drift = drift_matrix(params);
    const Lu3 lu(drift.generator);
    const CVec3 rhs{-drift.drive_vector[0], -drift.drive_vector[1], -drift.drive_vector[2]};
    const CVec3 x = lu.solve(rhs);
    return {x[0], x[1], x[2]};
}

std::vector<double> linspace(double start, double stop, std::size_t count) {
    if (count < 2) throw InvalidParameter("linspace: count must be >= 2");
    if (!(start < stop)) throw InvalidParameter("linspace: start must be < stop");
    std::vector<double> grid(count);
    const double step = (stop - start) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) grid[i] = start + step * static_cast<double>(i);
    grid.back() = stop;
    return grid;
}

ResponseCurve response_sweep(const SystemParams& params, std::span<const double> grid,
                             bool degenerate) {
    params.validate();
    if (grid.empty()) throw InvalidParameter("response_sweep: grid must be nonempty");
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw InvalidParameter("response_sweep: grid must be strictly increasing");
        }
    }

    ResponseCurve curve;
    curve.grid.assign(grid.begin(), grid.end());
    curve.intensity_a.reserve(grid.size());
    curve.intensity_b.reserve(grid.size());
    curve.intensity_c.reserve(grid.size());
    curve.params_snapshot = params;

    const double nan = std::numeric_limits<double>::quiet_NaN();
    SystemParams point = params;
    for (double delta : grid) {
        point.detuning_a = delta;
        if (degenerate) {
            point.detuning_b = delta;
            point.detuning_c = delta;
        }
        try {
            const SteadyState s = steady_state_analytic(point);
            curve.intensity_a.push_back(std::norm(s.amp_a));
            curve.intensity_b.push_back(std::norm(s.amp_b));
            curve.intensity_c.push_back(std::norm(s.amp_c));
        } catch (const SingularParameters&) {
            curve.intensity_a.push_back(nan);
            curve.intensity_b.push_back(nan);
            curve.intensity_c.push_back(nan);
        }
    }
    return curve;
}

std::vector<std::string> low_excitation_warnings(const SystemParams& params,
                                                 double peak_intensity_a,
                                                 double peak_intensity_b) {
    std::vector<std::string> warnings;
    const double frac = params.excitation_warn_fraction;
    if (params.atoms_a && peak_intensity_a > frac * *params.atoms_a) {
        warnings.push_back("low-excitation assumption strained for ensemble A: |A_s|^2 = " +
                           std::to_string(peak_intensity_a) + " exceeds " +
                           std::to_string(frac) + " * atoms_a");
    }
    if (params.atoms_b && peak_intensity_b > frac * *params.atoms_b) {
        warnings.push_back("low-excitation assumption strained for ensemble B: |B_s|^2 = " +
                           std::to_string(peak_intensity_b) + " exceeds " +
                           std::to_string(frac) + " * atoms_b");
    }
    return warnings;
}

}  // namespace trimode
