#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "trimode/errors.hpp"
#include "trimode/model.hpp"

using namespace trimode;
using testsupport::rel_err;

TEST_CASE("effective couplings from the microscopic description") {
    // chosen so the collective values land on the strong/weak regime pair
    const EffectiveCouplings eff = effective_from_microscopic({100, 100, 1.0, 0.1, 0.5});
    CHECK(eff.coupling_a == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(eff.coupling_b == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(eff.drive == doctest::Approx(5.0).epsilon(1e-15));

    const EffectiveCouplings zero = effective_from_microscopic({1, 1, 0.0, 0.0, 0.0});
    CHECK(zero.coupling_a == 0.0);
    CHECK(zero.coupling_b == 0.0);
    CHECK(zero.drive == 0.0);

    const EffectiveCouplings mixed = effective_from_microscopic({2, 8, 3.0, 0.25, 1.0});
    CHECK(mixed.coupling_a == doctest::Approx(3.0 * std::sqrt(2.0)).epsilon(1e-15));
    CHECK(mixed.coupling_b == doctest::Approx(0.25 * std::sqrt(8.0)).epsilon(1e-15));
    CHECK(mixed.drive == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("G^2 = N g^2 to 1e-14 relative") {
    testsupport::ParamSampler sampler(11);
    for (int i = 0; i < 200; ++i) {
        MicroscopicParams micro;
        micro.atom_count_a = 1 + static_cast<std::int64_t>(sampler.uniform(0, 1e6));
        micro.atom_count_b = 1 + static_cast<std::int64_t>(sampler.uniform(0, 1e6));
        micro.single_atom_coupling_a = sampler.uniform(-5.0, 5.0);
        micro.single_atom_coupling_b = sampler.uniform(-5.0, 5.0);
        micro.drive_per_atom = sampler.uniform(-5.0, 5.0);
        const EffectiveCouplings eff = effective_from_microscopic(micro);
        const double ga2 = static_cast<double>(micro.atom_count_a) *
                           micro.single_atom_coupling_a * micro.single_atom_coupling_a;
        const double gb2 = static_cast<double>(micro.atom_count_b) *
                           micro.single_atom_coupling_b * micro.single_atom_coupling_b;
        CHECK(rel_err(eff.coupling_a * eff.coupling_a, ga2) <= 1e-14);
        CHECK(rel_err(eff.coupling_b * eff.coupling_b, gb2) <= 1e-14);
    }
    CHECK_THROWS_AS(effective_from_microscopic({0, 1, 1.0, 1.0, 1.0}), InvalidParameter);
}

TEST_CASE("detunings are omega_r - omega_f") {
    const Detunings degenerate = detunings({1e7, 1e7, 1e7, 1e7});
    CHECK(degenerate.cavity == 0.0);
    CHECK(degenerate.ensemble_a == 0.0);
    CHECK(degenerate.ensemble_b == 0.0);

    const Detunings d = detunings({10.0, 12.0, 9.0, 10.0});
    CHECK(d.cavity == 0.0);
    CHECK(d.ensemble_a == 2.0);
    CHECK(d.ensemble_b == -1.0);

    CHECK_THROWS_AS(detunings({-1.0, 1.0, 1.0, 1.0}), InvalidParameter);
}

TEST_CASE("thermal occupation") {
    CHECK(thermal_occupation(1e7, 0.0) == 0.0);
    // independent high-precision evaluation of 1/(e - 1)
    const long double expected = 1.0L / std::expm1l(1.0L);
    CHECK(thermal_occupation(3.0, 3.0) ==
          doctest::Approx(static_cast<double>(expected)).epsilon(1e-14));

    // monotone: decreasing in omega, increasing in T
    double prev = thermal_occupation(0.5, 2.0);
    for (double omega = 1.0; omega < 40.0; omega += 0.7) {
        const double cur = thermal_occupation(omega, 2.0);
        CHECK(cur < prev);
        prev = cur;
    }
    prev = thermal_occupation(2.0, 0.25);
    for (double t = 0.5; t < 20.0; t += 0.4) {
        const double cur = thermal_occupation(2.0, t);
        CHECK(cur > prev);
        prev = cur;
    }
    CHECK(thermal_occupation(1e6, 1.0) == 0.0);  // deep exponential tail underflows to zero

    CHECK_THROWS_AS(thermal_occupation(0.0, 1.0), InvalidParameter);
    CHECK_THROWS_AS(thermal_occupation(-2.0, 1.0), InvalidParameter);
}

TEST_CASE("drift matrix layout") {
    SystemParams p;
    p.cavity_decay = 1.0;

    SUBCASE("uncoupled undamped atoms") {
        const DriftMatrix drift = drift_matrix(p);
        CHECK(drift.generator(0, 0) == Complex{-0.5, 0.0});
        CHECK(drift.generator(1, 1) == Complex{0.0, 0.0});
        CHECK(drift.generator(2, 2) == Complex{0.0, 0.0});
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) {
                if (r != c) CHECK(drift.generator(r, c) == Complex{0.0, 0.0});
            }
        }
    }

    SUBCASE("strong/weak coupling pair") {
        p.coupling_a = 10.0;
        p.coupling_b = 1.0;
        p.decay_a = 90.0;
        p.decay_b = 9.0;
        p.drive = 5.0;
        const DriftMatrix drift = drift_matrix(p);
        CHECK(drift.generator(0, 0) == Complex{-0.5, 0.0});
        CHECK(drift.generator(1, 1) == Complex{-45.0, 0.0});
        CHECK(drift.generator(2, 2) == Complex{-4.5, 0.0});
        CHECK(drift.generator(0, 1) == Complex{0.0, -10.0});
        CHECK(drift.generator(1, 0) == Complex{0.0, -10.0});
        CHECK(drift.generator(0, 2) == Complex{0.0, -1.0});
        CHECK(drift.generator(2, 0) == Complex{0.0, -1.0});
        CHECK(drift.noise_rates == std::array<double, 3>{1.0, 90.0, 9.0});
        CHECK(drift.noise_weights == std::array<double, 3>{1.0, 1.0, 1.0});
        CHECK(drift.drive_vector[0] == Complex{0.0, 0.0});
        CHECK(drift.drive_vector[1] == Complex{0.0, -5.0});
        CHECK(drift.drive_vector[2] == Complex{0.0, 0.0});
    }
}

TEST_CASE("ensembles couple only through the cavity") {
    testsupport::ParamSampler sampler(23);
    for (int i = 0; i < 200; ++i) {
        const DriftMatrix drift = drift_matrix(sampler.draw());
        CHECK(drift.generator(1, 2) == Complex{0.0, 0.0});
        CHECK(drift.generator(2, 1) == Complex{0.0, 0.0});
    }
}

TEST_CASE("eigenvalue stability on random draws") {
    // independent characteristic-polynomial root finder as the oracle
    testsupport::ParamSampler sampler(37);
    for (int i = 0; i < 150; ++i) {
        const SystemParams p = sampler.draw();
        const DriftMatrix drift = drift_matrix(p);
        const auto roots = testsupport::characteristic_roots(drift.generator);
        for (const Complex& lambda : roots) {
            CHECK(lambda.real() < 0.0);
            CHECK(lambda.real() < 1e-10);  // strictly stable given all decays > 0
        }
    }

    // with zero ensemble decays a dark combination may sit on the axis
    SystemParams p;
    p.cavity_decay = 1.0;
    p.coupling_a = 2.0;
    p.coupling_b = 2.0;
    const auto roots = testsupport::characteristic_roots(drift_matrix(p).generator);
    for (const Complex& lambda : roots) CHECK(lambda.real() <= 1e-12);
}
