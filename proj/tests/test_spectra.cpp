#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "trimode/errors.hpp"
#include "trimode/extrema.hpp"
#include "trimode/spectra.hpp"
#include "trimode/steady_state.hpp"

using namespace trimode;
using testsupport::rel_err;

namespace {

SystemParams strong_weak_params() {
    SystemParams p;
    p.coupling_a = 10.0;
    p.coupling_b = 1.0;
    p.decay_a = 90.0;
    p.decay_b = 9.0;
    p.cavity_decay = 1.0;
    return p;
}

}  // namespace

TEST_CASE("effective cavity vs frequency") {
    SystemParams p = strong_weak_params();

    SUBCASE("on-resonance value") {
        const EffectiveCavityOmega eff = effective_cavity_omega(p, 0.0);
        CHECK(eff.detuning_eff == doctest::Approx(0.0));
        CHECK(eff.decay_eff ==
              doctest::Approx(1.0 + 4.0 * 100.0 / 90.0 + 4.0 * 1.0 / 9.0).epsilon(1e-14));
    }

    SUBCASE("omega = 0 reduces to the zero-frequency effective cavity") {
        testsupport::ParamSampler sampler(7);
        for (int i = 0; i < 200; ++i) {
            const SystemParams q = sampler.draw();
            const EffectiveCavityOmega at0 = effective_cavity_omega(q, 0.0);
            const EffectiveCavity0 zero = effective_cavity_zero(q);
            CHECK(rel_err(at0.decay_eff, zero.decay_eff) <= 1e-13);
            CHECK(std::abs(at0.detuning_eff - zero.detuning_eff) <=
                  1e-13 * (1.0 + std::abs(zero.detuning_eff)));
        }
    }

    SUBCASE("far off resonance the cavity is bare") {
        p.detuning_c = 2.5;
        const EffectiveCavityOmega far = effective_cavity_omega(p, 1e7);
        CHECK(rel_err(far.decay_eff, p.cavity_decay) <= 1e-8);
        CHECK(rel_err(far.detuning_eff, p.detuning_c) <= 1e-8);
    }

    SUBCASE("decay_eff never drops below kappa") {
        testsupport::ParamSampler sampler(13);
        for (int i = 0; i < 300; ++i) {
            const SystemParams q = sampler.draw();
            const double omega = sampler.uniform(-60.0, 60.0);
            CHECK(effective_cavity_omega(q, omega).decay_eff >= q.cavity_decay);
        }
    }

    SUBCASE("zero decay exactly on resonance is singular") {
        p.decay_a = 0.0;
        p.detuning_a = 2.0;
        CHECK_THROWS_AS(effective_cavity_omega(p, 2.0), SingularParameters);
        CHECK_NOTHROW(effective_cavity_omega(p, 2.1));
    }
}

TEST_CASE("empty-cavity vacuum spectrum is a Lorentzian") {
    SystemParams p;
    p.cavity_decay = 1.0;
    p.decay_a = 1.0;
    p.decay_b = 1.0;
    for (double omega = -5.0; omega <= 5.0; omega += 0.25) {
        const double expected = 1.0 / (omega * omega + 0.25);
        CHECK(rel_err(cavity_spectrum(p, omega), expected) <= 1e-14);
    }
    CHECK(cavity_spectrum(p, 0.0) == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("k factors") {
    SystemParams p = strong_weak_params();

    SUBCASE("relabeling symmetry") {
        SystemParams sym = p;
        sym.coupling_b = sym.coupling_a;
        sym.decay_b = sym.decay_a;
        for (double omega = -20.0; omega <= 20.0; omega += 0.5) {
            const KFactors k = k_factors(sym, omega);
            CHECK(rel_err(k.k_a, k.k_b) <= 1e-13);
        }
    }

    SUBCASE("on-resonance closed form") {
        const double kappa_eff0 = effective_cavity_omega(p, 0.0).decay_eff;
        const KFactors k = k_factors(p, 0.0);
        CHECK(rel_err(k.k_a, -4.0 / (p.decay_a * kappa_eff0)) <= 1e-13);
        CHECK(rel_err(k.k_b, -4.0 / (p.decay_b * kappa_eff0)) <= 1e-13);
    }

    SUBCASE("vanishes far off resonance") {
        const KFactors k = k_factors(p, 1e6);
        CHECK(std::abs(k.k_a) < 1e-10);
        CHECK(std::abs(k.k_b) < 1e-10);
    }
}

TEST_CASE("decoupled ensemble spectrum is the bare Lorentzian") {
    SystemParams p;
    p.cavity_decay = 1.0;
    p.decay_a = 3.0;
    p.decay_b = 2.0;
    p.detuning_a = 1.5;
    p.thermal_a = 0.5;
    for (double omega = -8.0; omega <= 8.0; omega += 0.4) {
        const EnsembleSpectra s = ensemble_spectra(p, omega);
        const double x = omega - p.detuning_a;
        const double expected = 3.0 * 1.5 / (x * x + 0.25 * 9.0);
        CHECK(rel_err(s.s_a, expected) <= 1e-14);
    }
}

TEST_CASE("resolvent oracle equals closed forms on 1000 draws") {
    testsupport::ParamSampler sampler(211);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const SystemParams p = sampler.draw();
        const double omega = sampler.uniform(-60.0, 60.0);
        const ModeSpectra oracle = spectra_resolvent_oracle(p, omega);
        const double sc = cavity_spectrum(p, omega);
        const EnsembleSpectra s = ensemble_spectra(p, omega);
        worst = std::max({worst, rel_err(oracle.s_c, sc), rel_err(oracle.s_a, s.s_a),
                          rel_err(oracle.s_b, s.s_b)});
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("resolvent oracle reduces to bare Lorentzians when decoupled") {
    SystemParams p;
    p.cavity_decay = 2.0;
    p.decay_a = 3.0;
    p.decay_b = 1.0;
    p.detuning_c = 0.5;
    p.detuning_a = -1.0;
    p.detuning_b = 2.0;
    p.thermal_c = 0.25;
    for (double omega = -6.0; omega <= 6.0; omega += 0.5) {
        const ModeSpectra s = spectra_resolvent_oracle(p, omega);
        const double xc = omega - p.detuning_c;
        const double xa = omega - p.detuning_a;
        const double xb = omega - p.detuning_b;
        CHECK(rel_err(s.s_c, 1.25 * 2.0 / (xc * xc + 1.0)) <= 1e-13);
        CHECK(rel_err(s.s_a, 3.0 / (xa * xa + 2.25)) <= 1e-13);
        CHECK(rel_err(s.s_b, 1.0 / (xb * xb + 0.25)) <= 1e-13);
    }
}

TEST_CASE("spectra are nonnegative") {
    testsupport::ParamSampler sampler(307);
    for (int i = 0; i < 500; ++i) {
        const SystemParams p = sampler.draw();
        const double omega = sampler.uniform(-80.0, 80.0);
        const double sc = cavity_spectrum(p, omega);
        const EnsembleSpectra s = ensemble_spectra(p, omega);
        CHECK(sc >= -1e-12);
        CHECK(s.s_a >= -1e-12);
        CHECK(s.s_b >= -1e-12);
    }
}

TEST_CASE("zero-detuning spectra are even in omega") {
    const SystemParams p = strong_weak_params();
    const std::vector<double> grid = linspace(-30.0, 30.0, 1201);
    const SpectrumCurve curve = spectrum_sweep(p, grid);
    const std::size_t n = curve.grid.size();
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(rel_err(curve.s_c[i], curve.s_c[n - 1 - i]) <= 1e-10);
        CHECK(rel_err(curve.s_a[i], curve.s_a[n - 1 - i]) <= 1e-10);
        CHECK(rel_err(curve.s_b[i], curve.s_b[n - 1 - i]) <= 1e-10);
    }
}

TEST_CASE("noise-spectrum shapes in the two placement regimes") {
    const std::vector<double> grid = linspace(-30.0, 30.0, 1201);

    SUBCASE("driven-ensemble spectrum: symmetric side peaks around a dip") {
        const SpectrumCurve curve = spectrum_sweep(strong_weak_params(), grid);
        const ExtremaReport e = find_extrema(curve.grid, curve.s_a, 0.02);
        REQUIRE(e.maxima.size() == 2);
        REQUIRE(e.minima.size() == 1);
        CHECK(std::abs(e.minima[0].position) <= 0.05 + 1e-12);
        CHECK(e.maxima[0].position == doctest::Approx(-e.maxima[1].position).epsilon(1e-12));
        // side peaks sit near (slightly above) the collective coupling rate
        CHECK(std::abs(e.maxima[1].position) > 9.0);
        CHECK(std::abs(e.maxima[1].position) < 12.0);
    }

    SUBCASE("swapped placement mirrors the structure onto the other ensemble") {
        SystemParams swapped = strong_weak_params();
        std::swap(swapped.coupling_a, swapped.coupling_b);
        std::swap(swapped.decay_a, swapped.decay_b);
        const SpectrumCurve curve = spectrum_sweep(swapped, grid);
        const ExtremaReport eb = find_extrema(curve.grid, curve.s_b, 0.02);
        REQUIRE(eb.maxima.size() == 2);
        CHECK(std::abs(eb.maxima[1].position) > 9.0);
        CHECK(std::abs(eb.maxima[1].position) < 12.0);
        // the now weakly coupled driven ensemble keeps a single peak
        const ExtremaReport ea = find_extrema(curve.grid, curve.s_a, 0.02);
        CHECK(ea.maxima.size() == 1);
        CHECK(ea.minima.empty());
    }

    SUBCASE("all couplings zero gives three bare Lorentzians") {
        SystemParams bare;
        bare.cavity_decay = 1.0;
        bare.decay_a = 4.0;
        bare.decay_b = 2.0;
        const SpectrumCurve curve = spectrum_sweep(bare, grid);
        for (std::size_t i = 0; i < curve.grid.size(); ++i) {
            const double w = curve.grid[i];
            CHECK(rel_err(curve.s_c[i], 1.0 / (w * w + 0.25)) <= 1e-13);
            CHECK(rel_err(curve.s_a[i], 4.0 / (w * w + 4.0)) <= 1e-13);
            CHECK(rel_err(curve.s_b[i], 2.0 / (w * w + 1.0)) <= 1e-13);
        }
    }
}

TEST_CASE("integrated ensemble spectrum is stable under extending the grid") {
    const SystemParams p = strong_weak_params();
    const double extent = 50.0 * 90.0;  // 50x the largest rate in the model
    auto integral = [&](double half_width) {
        const double step = 0.1;
        const auto count = static_cast<std::size_t>(2.0 * half_width / step) + 1;
        const std::vector<double> grid = linspace(-half_width, half_width, count);
        const SpectrumCurve curve = spectrum_sweep(p, grid);
        double acc = 0.0;
        for (std::size_t i = 1; i < curve.grid.size(); ++i) {
            acc += 0.5 * (curve.s_a[i] + curve.s_a[i - 1]) * (curve.grid[i] - curve.grid[i - 1]);
        }
        return acc;
    };
    const double base = integral(extent);
    const double wide = integral(2.0 * extent);
    CHECK(std::isfinite(base));
    CHECK(std::abs(wide - base) / base <= 0.01);
}

TEST_CASE("per-point singularities are flagged in sweeps") {
    SystemParams p = strong_weak_params();
    p.decay_a = 0.0;
    p.detuning_a = 0.0;  // singular exactly at omega = 0
    const std::vector<double> grid = linspace(-1.0, 1.0, 5);
    const SpectrumCurve curve = spectrum_sweep(p, grid);
    CHECK(std::isnan(curve.s_a[2]));
    CHECK(std::isfinite(curve.s_a[0]));
    CHECK(std::isfinite(curve.s_a[4]));
}
