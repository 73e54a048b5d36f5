#include <doctest.h>

#include "mtori/automorphism.hpp"
#include "mtori/error.hpp"
#include "support.hpp"

using namespace mtori;

namespace {

ErrorKind kind_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("valid automorphism data")
{
    const IntMatrix cat{{2, 1}, {1, 1}};
    CHECK(validate_aut(cat, IntMatrix::identity(2), {0, 0}, 1) == TorusBundleAut::identity());
    const TorusBundleAut f = validate_aut(IntMatrix::identity(2), IntMatrix{{0, 1}, {1, 0}}, {3, -2}, -1);
    CHECK(f.preserves_orientation());
    CHECK_FALSE(validate_aut(IntMatrix::identity(2), IntMatrix{{0, 1}, {1, 0}}, {0, 0}, 1).preserves_orientation());
    // Commuting B with epsilon = 1.
    CHECK_NOTHROW(validate_aut(cat, cat.power(3), {1, 1}, 1));
}

TEST_CASE("invalid automorphism data")
{
    const IntMatrix cat{{2, 1}, {1, 1}};
    CHECK(kind_of([&] { validate_aut(cat, IntMatrix::identity(2), {0, 0}, -1); }) ==
          ErrorKind::IncompatibleAutomorphism);
    CHECK(kind_of([&] { validate_aut(cat, IntMatrix{{2, 0}, {0, 1}}, {0, 0}, 1); }) == ErrorKind::NotUnimodular);
    CHECK(kind_of([&] { validate_aut(IntMatrix{{1, 1}, {1, 1}}, IntMatrix::identity(2), {0, 0}, 1); }) ==
          ErrorKind::NotUnimodular);
    CHECK(kind_of([&] { validate_aut(cat, IntMatrix::identity(2), {0, 0}, 2); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([&] { validate_aut(cat, IntMatrix::identity(2), {0}, 1); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("property: generated automorphisms satisfy B A = A^eps B")
{
    testing::Rng rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const auto [a, f] = testing::random_torus_bundle_aut(rng);
        CHECK(determinant(a) == 1);
        CHECK_NOTHROW(validate_aut(a, f.B, f.v, f.epsilon));
        CHECK(f.preserves_orientation());
    }
}
