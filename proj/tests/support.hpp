#pragma once

// Seeded generators shared by the unit, property and acceptance tests.

#include <cstdint>
#include <random>
#include <utility>

#include "mtori/automorphism.hpp"
#include "mtori/monodromy.hpp"
#include "mtori/zlinalg.hpp"

namespace mtori::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi)
{
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = uniform(rng, lo, hi);
    return m;
}

/// Product of random elementary operations; determinant +-1.
inline IntMatrix random_unimodular(Rng& rng, std::size_t n, int steps)
{
    IntMatrix m = IntMatrix::identity(n);
    if (n == 0)
        return m;
    for (int s = 0; s < steps; ++s) {
        const std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
        const std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
        switch (uniform(rng, 0, 3)) {
        case 0:
            if (i != j)
                m.add_row_multiple(i, j, uniform(rng, -2, 2));
            break;
        case 1: m.swap_rows(i, j); break;
        case 2: m.negate_row(i); break;
        default:
            if (i != j)
                m.add_col_multiple(i, j, uniform(rng, -2, 2));
        }
    }
    return m;
}

/// Word of bounded length in the generators [[1,1],[0,1]], [[1,0],[1,1]]
/// and their inverses, times -I half the time.
inline IntMatrix random_sl2z(Rng& rng, int max_length = 6)
{
    const IntMatrix gens[] = {{{1, 1}, {0, 1}}, {{1, -1}, {0, 1}}, {{1, 0}, {1, 1}}, {{1, 0}, {-1, 1}}};
    IntMatrix m = IntMatrix::identity(2);
    const long length = uniform(rng, 0, max_length);
    for (long i = 0; i < length; ++i)
        m = m * gens[uniform(rng, 0, 3)];
    if (uniform(rng, 0, 1))
        m = Integer(-1) * m;
    return m;
}

inline IntMatrix random_sl2z_conjugator(Rng& rng)
{
    return random_sl2z(rng, 4);
}

inline IntVector random_primitive(Rng& rng, std::size_t n, long bound = 3)
{
    for (;;) {
        IntVector v(n);
        for (Integer& x : v)
            x = uniform(rng, -bound, bound);
        if (is_primitive(v))
            return v;
    }
}

inline TwistWord random_twist_word(Rng& rng, unsigned genus, std::size_t length)
{
    TwistWord w{genus, {}};
    for (std::size_t i = 0; i < length; ++i) {
        long e = uniform(rng, -3, 3);
        if (e == 0)
            e = 1;
        w.letters.push_back({random_primitive(rng, 2 * genus, 2), e, "c" + std::to_string(i + 1)});
    }
    return w;
}

/// A valid orientation-preserving automorphism of T^2 x_A S^1, drawn from
/// the families of fiber-preserving maps and then conjugated by a random
/// change of fiber basis. Returns (A, f).
inline std::pair<IntMatrix, TorusBundleAut> random_torus_bundle_aut(Rng& rng)
{
    const IntMatrix flip{{1, 0}, {0, -1}};
    const IntMatrix swap{{0, 1}, {1, 0}};
    IntMatrix a;
    IntMatrix b;
    int eps = 1;
    switch (uniform(rng, 0, 5)) {
    case 0: {  // A = +-I, any B
        a = uniform(rng, 0, 1) ? IntMatrix::identity(2) : Integer(-1) * IntMatrix::identity(2);
        b = random_unimodular(rng, 2, 6);
        eps = determinant(b) == 1 ? 1 : -1;
        break;
    }
    case 1: {  // B = +-A^j commutes with A
        a = random_sl2z(rng);
        b = a.power(static_cast<unsigned>(uniform(rng, 0, 3)));
        if (uniform(rng, 0, 1))
            b = Integer(-1) * b;
        break;
    }
    case 2: {  // unipotent A, D A D = A^-1
        a = IntMatrix{{1, uniform(rng, -4, 4)}, {0, 1}};
        b = flip * a.power(static_cast<unsigned>(uniform(rng, 0, 3)));
        eps = -1;
        break;
    }
    case 3: {  // Anosov with equal diagonal, D A D = A^-1
        const long d = uniform(rng, 2, 5);
        const long bc = d * d - 1;
        long p = 1;
        for (long q = 1; q <= bc; ++q)
            if (bc % q == 0 && uniform(rng, 0, 2) == 0)
                p = q;
        a = IntMatrix{{d, p}, {bc / p, d}};
        if (uniform(rng, 0, 1))
            a = Integer(-1) * a;
        b = flip * a.power(static_cast<unsigned>(uniform(rng, 0, 2)));
        eps = -1;
        break;
    }
    case 4: {  // order 3 or 6, swap A swap = A^-1
        a = uniform(rng, 0, 1) ? IntMatrix{{0, -1}, {1, -1}} : IntMatrix{{1, -1}, {1, 0}};
        b = swap * a.power(static_cast<unsigned>(uniform(rng, 0, 5)));
        eps = -1;
        break;
    }
    default: {  // order 4, D A D = A^-1
        a = IntMatrix{{0, -1}, {1, 0}};
        if (uniform(rng, 0, 1)) {
            b = flip * a.power(static_cast<unsigned>(uniform(rng, 0, 3)));
            eps = -1;
        } else {
            b = a.power(static_cast<unsigned>(uniform(rng, 0, 3)));
        }
    }
    }
    IntVector v{uniform(rng, -3, 3), uniform(rng, -3, 3)};
    const IntMatrix p = random_sl2z_conjugator(rng);
    const IntMatrix p_inv = unimodular_inverse(p);
    return {p * a * p_inv, TorusBundleAut{p * b * p_inv, p.apply(v), eps}};
}

}  // namespace mtori::testing
