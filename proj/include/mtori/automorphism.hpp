#pragma once

#include <string>

#include "mtori/zlinalg.hpp"

namespace mtori {

/// Self-homeomorphism f of Y = T^2 x_A S^1 at the level of
/// pi1(Y) = <x in Z^2, s | s x s^-1 = A x>:
///     f(x) = B x,    f(s) = x_v s^epsilon.
/// f is a homomorphism iff B A B^-1 = A^epsilon. It preserves the orientation
/// of Y iff det(B) * epsilon = 1.
struct TorusBundleAut {
    IntMatrix B = IntMatrix::identity(2);
    IntVector v{0, 0};
    int epsilon = 1;

    bool preserves_orientation() const;
    std::string to_string() const;

    static TorusBundleAut identity() { return {}; }

    friend bool operator==(const TorusBundleAut&, const TorusBundleAut&) = default;
};

/// Returns the data iff B A B^-1 = A^epsilon holds exactly.
/// Throws NotUnimodular for bad A or B and IncompatibleAutomorphism when the
/// relation fails.
TorusBundleAut validate_aut(const IntMatrix& a, const IntMatrix& b, const IntVector& v, int epsilon);

}  // namespace mtori
