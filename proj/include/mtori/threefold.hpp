#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mtori/automorphism.hpp"
#include "mtori/monodromy.hpp"
#include "mtori/zlinalg.hpp"

namespace mtori {

// Symbolic descriptions of a closed prime 3-manifold Y. Hyperbolic and JSJ
// labels are trusted as given; nothing here certifies geometry.

struct Spherical {
    friend bool operator==(const Spherical&, const Spherical&) = default;
};

struct S1xS2 {
    friend bool operator==(const S1xS2&, const S1xS2&) = default;
};

/// T^2 x_A S^1 with A in SL(2, Z).
struct TorusBundle {
    IntMatrix monodromy;
    friend bool operator==(const TorusBundle&, const TorusBundle&) = default;
};

/// Only the data the orbifold Euler characteristic and the geometry split
/// need. base_genus counts handles for an orientable base and crosscaps for a
/// non-orientable one.
struct Seifert {
    unsigned base_genus = 0;
    bool base_orientable = true;
    std::vector<unsigned> cone_orders;
    Rational euler_number = 0;
    friend bool operator==(const Seifert&, const Seifert&) = default;
};

enum class NielsenThurston { Periodic, PseudoAnosov, Reducible };

std::string to_string(NielsenThurston t);

/// F_g x_phi S^1 with phi given as a twist word; the Nielsen-Thurston type is
/// input data. declared_action optionally pins the expected H1 action of phi.
struct SurfaceBundle {
    unsigned genus = 2;
    TwistWord phi;
    NielsenThurston nt_type = NielsenThurston::PseudoAnosov;
    std::optional<IntMatrix> declared_action;
    friend bool operator==(const SurfaceBundle&, const SurfaceBundle&) = default;
};

struct Hyperbolic {
    friend bool operator==(const Hyperbolic&, const Hyperbolic&) = default;
};

enum class JsjPiece { Seifert, Hyperbolic };

struct JsjGraph {
    std::vector<JsjPiece> pieces;
    unsigned tori = 1;
    friend bool operator==(const JsjGraph&, const JsjGraph&) = default;
};

using ThreeManifold =
    std::variant<Spherical, S1xS2, TorusBundle, Seifert, SurfaceBundle, Hyperbolic, JsjGraph>;

/// Structural invariants of the description (unimodular torus monodromy,
/// twist-word genus, nonempty JSJ data, ...). Throws on violation.
void validate(const ThreeManifold& y);

std::string describe(const ThreeManifold& y);

struct HomologyReport {
    unsigned b1 = 0;
    IntVector torsion;
    friend bool operator==(const HomologyReport&, const HomologyReport&) = default;
};

/// H1(F x_phi S^1) = coker(phi_* - I) + Z.
HomologyReport first_homology(const ThreeManifold& y);

enum class VB1Kind { Exact, BoundedAbove, Infinite };

/// A virtual first Betti number. For BoundedAbove, `value` is the proven
/// ceiling and `enumerated` the best b1 found among explicitly constructed
/// covers, if any were constructed.
struct VB1Result {
    VB1Kind kind = VB1Kind::Infinite;
    unsigned value = 0;
    std::optional<unsigned> enumerated;
    bool saturated = false;
    std::string certificate;
    std::optional<std::string> witness;

    static VB1Result exact(unsigned v, std::string cert);
    static VB1Result infinite(std::string cert);
    static VB1Result bounded(unsigned ceiling, std::optional<unsigned> found, std::string cert);

    /// Exact value, or the enumerated value for BoundedAbove. Empty for
    /// Infinite or an unenumerated bound.
    std::optional<unsigned> best_known() const;
    std::string describe() const;
};

VB1Result vb1_threefold(const ThreeManifold& y);

Rational orbifold_euler(const Seifert& y);

/// The six Seifert geometries, determined by sign(chi_orb) and whether the
/// Euler number vanishes.
enum class SeifertGeometry { S3, S2xR, E3, Nil, H2xR, SL2R };

SeifertGeometry seifert_geometry(const Seifert& y);

/// dim H1(Y; Q): 2g + [e = 0] over an orientable base of genus g, k - 1 over
/// a base with k crosscaps (the regular fiber is then torsion).
unsigned seifert_b1(const Seifert& y);
std::string to_string(SeifertGeometry g);

/// Free part of the coinvariants of an integer action phi on Z^n:
/// Z^n -> Z^n / sat(im(phi - I)) = Z^k. `projection` is k x n, `section` is
/// n x k with projection * section = I_k.
struct Coinvariants {
    IntMatrix projection;
    IntMatrix section;
    std::size_t rank() const { return projection.rows(); }
};

Coinvariants free_coinvariants(const IntMatrix& phi);

/// Action of f on H2(Y; Z) for Y = T^2 x_A S^1, in the basis
/// ([F], c_1 x S^1, ..., c_k x S^1) where F is the fiber and c_j a Z-basis of
/// ker(A - I). Computed from the geometry of the classes:
///     f[F] = det(B) [F],
///     f(c x S^1) = epsilon (Bc x S^1) + det[Bc | v] [F].
IntMatrix h2_action(const TorusBundle& y, const TorusBundleAut& f);

/// Action on H2(T^3) = Lambda^2 Z^3 of a linear map M of Z^3, in the basis
/// (e1^e2, e1^e3, e2^e3).
IntMatrix exterior_square(const IntMatrix& m);

struct FiberedPair {
    bool fibered = false;
    unsigned invariant_rank = 0;  // rank ker(f_* - I) on H2(Y; Q)
    std::optional<IntVector> fiber_class;  // primitive invariant class
    std::string basis;  // names of the basis the class is written in
};

/// Whether f fixes a nonzero class in H2(Y; Q); if so returns a primitive
/// integral invariant class. Throws InvalidAutomorphism for data that is not
/// an orientation-preserving automorphism of Y.
FiberedPair is_fibered_pair(const TorusBundle& y, const TorusBundleAut& f);

/// Same for Y = T^3 with f given by its action M in SL(3, Z) on H1(T^3).
FiberedPair is_fibered_pair_t3(const IntMatrix& m);

}  // namespace mtori
