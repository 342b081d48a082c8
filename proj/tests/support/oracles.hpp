#pragma once

#include <array>
#include <random>

#include "trimode/linalg3.hpp"
#include "trimode/model.hpp"

namespace testsupport {

/// Roots of the characteristic polynomial of a 3x3 complex matrix, found by
/// Durand-Kerner iteration on det(M - lambda I). Independent of any library
/// eigensolver and of the Lu3 code path.
std::array<trimode::Complex, 3> characteristic_roots(const trimode::CMat3& m);

/// Relative distance |x - y| / max(|x|, |y|); zero when both vanish.
double rel_err(trimode::Complex x, trimode::Complex y);
double rel_err(double x, double y);

/// Random parameter draws over ranges where both steady-state routes are
/// well-conditioned. Couplings occasionally come out exactly zero.
class ParamSampler {
public:
    explicit ParamSampler(std::uint64_t seed) : rng_(seed) {}

    trimode::SystemParams draw();
    double uniform(double lo, double hi);
    double log_uniform(double lo, double hi);
    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace testsupport
