#pragma once

#include <array>
#include <complex>

namespace trimode {

using Complex = std::complex<double>;
using CVec3 = std::array<Complex, 3>;

/// Dense complex 3x3 matrix, row-major. Mode order is (c, A, B) everywhere.
struct CMat3 {
    std::array<Complex, 9> m{};

    Complex& operator()(int row, int col) { return m[3 * row + col]; }
    const Complex& operator()(int row, int col) const { return m[3 * row + col]; }
};

CVec3 operator*(const CMat3& a, const CVec3& x);

/// LU factorization with partial pivoting for 3x3 complex systems.
/// Throws SingularParameters when the determinant magnitude falls below
/// 1e-300 relative to the cubed matrix scale.
class Lu3 {
public:
    explicit Lu3(const CMat3& a);

    CVec3 solve(const CVec3& rhs) const;
    Complex determinant() const { return det_; }

private:
    CMat3 lu_;
    std::array<int, 3> perm_{};
    Complex det_{};
};

}  // namespace trimode
