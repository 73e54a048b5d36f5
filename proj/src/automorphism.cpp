#include "mtori/automorphism.hpp"

#include "mtori/error.hpp"

namespace mtori {

bool TorusBundleAut::preserves_orientation() const
{
    return determinant(B) * epsilon == 1;
}

std::string TorusBundleAut::to_string() const
{
    return "B = " + B.to_string() + ", v = " + mtori::to_string(v) +
           ", epsilon = " + std::to_string(epsilon);
}

TorusBundleAut validate_aut(const IntMatrix& a, const IntMatrix& b, const IntVector& v, int epsilon)
{
    if (a.rows() != 2 || a.cols() != 2 || determinant(a) != 1)
        raise(ErrorKind::NotUnimodular, "torus bundle monodromy " + a.to_string() + " is not in SL(2,Z)");
    if (b.rows() != 2 || b.cols() != 2 || abs(determinant(b)) != 1)
        raise(ErrorKind::NotUnimodular, "fiber action B = " + b.to_string() + " is not in GL(2,Z)");
    if (v.size() != 2)
        raise(ErrorKind::InvalidArgument, "translation vector v must have 2 entries");
    if (epsilon != 1 && epsilon != -1)
        raise(ErrorKind::InvalidArgument, "epsilon must be +1 or -1");

    // B A = A^epsilon B avoids inverting B.
    const IntMatrix a_eps = epsilon == 1 ? a : unimodular_inverse(a);
    if (b * a != a_eps * b)
        raise(ErrorKind::IncompatibleAutomorphism,
              "B A B^-1 != A^epsilon for A = " + a.to_string() + ", B = " + b.to_string() +
                  ", epsilon = " + std::to_string(epsilon));
    return {b, v, epsilon};
}

}  // namespace mtori
