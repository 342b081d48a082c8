#include "trimode/linalg3.hpp"

#include <cmath>
#include <utility>

#include "trimode/errors.hpp"

namespace trimode {

CVec3 operator*(const CMat3& a, const CVec3& x) {
    CVec3 y{};
    for (int r = 0; r < 3; ++r) {
        Complex acc{};
        for (int c = 0; c < 3; ++c) acc += a(r, c) * x[c];
        y[r] = acc;
    }
    return y;
}

Lu3::Lu3(const CMat3& a) : lu_(a) {
    double scale = 0.0;
    for (const Complex& v : a.m) scale = std::max(scale, std::abs(v));

    perm_ = {0, 1, 2};
    double sign = 1.0;
    bool singular = (scale == 0.0) || !std::isfinite(scale);

    for (int k = 0; k < 3 && !singular; ++k) {
        int pivot = k;
        double best = std::abs(lu_(k, k));
        for (int r = k + 1; r < 3; ++r) {
            const double mag = std::abs(lu_(r, k));
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (best == 0.0) {
            singular = true;
            break;
        }
        if (pivot != k) {
            for (int c = 0; c < 3; ++c) std::swap(lu_(k, c), lu_(pivot, c));
            std::swap(perm_[k], perm_[pivot]);
            sign = -sign;
        }
        for (int r = k + 1; r < 3; ++r) {
            const Complex mult = lu_(r, k) / lu_(k, k);
            lu_(r, k) = mult;
            for (int c = k + 1; c < 3; ++c) lu_(r, c) -= mult * lu_(k, c);
        }
    }

    det_ = singular ? Complex{} : sign * lu_(0, 0) * lu_(1, 1) * lu_(2, 2);
    const double tol = 1e-300 * scale * scale * scale;
    if (singular || !(std::abs(det_) > tol)) {
        throw SingularParameters("3x3 system is singular (|det| below 1e-300 of scale)");
    }
}

CVec3 Lu3::solve(const CVec3& rhs) const {
    CVec3 y{rhs[perm_[0]], rhs[perm_[1]], rhs[perm_[2]]};
    // forward substitution (unit lower triangle)
    y[1] -= lu_(1, 0) * y[0];
    y[2] -= lu_(2, 0) * y[0] + lu_(2, 1) * y[1];
    // back substitution
    y[2] /= lu_(2, 2);
    y[1] = (y[1] - lu_(1, 2) * y[2]) / lu_(1, 1);
    y[0] = (y[0] - lu_(0, 1) * y[1] - lu_(0, 2) * y[2]) / lu_(0, 0);
    return y;
}

}  // namespace trimode
