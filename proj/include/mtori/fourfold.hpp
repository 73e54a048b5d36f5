#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mtori/automorphism.hpp"
#include "mtori/monodromy.hpp"
#include "mtori/threefold.hpp"
#include "mtori/zlinalg.hpp"

namespace mtori {

/// f^n is isotopic to the identity; no further action data.
struct SymbolicPeriodic {
    unsigned order = 1;
    friend bool operator==(const SymbolicPeriodic&, const SymbolicPeriodic&) = default;
};

struct IdentityMonodromy {
    friend bool operator==(const IdentityMonodromy&, const IdentityMonodromy&) = default;
};

/// f given directly by its action M in SL(3, Z) on pi1(T^3) = Z^3, basis
/// (fiber x, fiber y, circle t). Only valid when the fiber is T^3 (A = I);
/// automorphisms of T^3 need not preserve any torus fibration.
struct RawT3Action {
    IntMatrix matrix;
    friend bool operator==(const RawT3Action&, const RawT3Action&) = default;
};

/// One component of a closed curve in the surface fiber dual to the Euler
/// class of the circle-bundle part of the monodromy. A multiplicity m stands
/// for m parallel copies.
struct EulerDualComponent {
    IntVector curve;
    std::string label;
    unsigned multiplicity = 1;
    friend bool operator==(const EulerDualComponent&, const EulerDualComponent&) = default;
};

/// Fiber-preserving self-map of Y = F x_phi S^1: psi on the surface (as a
/// twist word) plus the twisting along the circle direction, recorded by the
/// Euler-dual curve. On H1(Y) it acts by
///     [x] -> [psi x] + e(x) t,   t -> t,   e(x) = sum_l m_l <x, beta_l>.
struct SurfaceBundleAut {
    TwistWord psi;
    std::vector<EulerDualComponent> euler_dual;
    friend bool operator==(const SurfaceBundleAut&, const SurfaceBundleAut&) = default;
};

using Monodromy4 =
    std::variant<IdentityMonodromy, TorusBundleAut, RawT3Action, SurfaceBundleAut, SymbolicPeriodic>;

/// X = Y x_f S^1.
struct MappingTorus4 {
    ThreeManifold fiber;
    Monodromy4 monodromy;
};

/// Checks the fiber, then that the monodromy variant fits it and preserves
/// orientation. Throws NotUnimodular, IncompatibleAutomorphism,
/// GenusMismatch or ValidationError.
void validate(const MappingTorus4& x);

MappingTorus4 make_mapping_torus(ThreeManifold fiber, Monodromy4 monodromy);

std::string describe(const Monodromy4& m);

/// Action on H1(Y; Z)/torsion = Z^k + Z<t>, where Z^k is the free part of
/// coker(A - I). Block form [[Bbar, vbar], [0, epsilon]].
IntMatrix induced_h1_action(const TorusBundle& y, const TorusBundleAut& f);

/// Action of the monodromy on H1(fiber)/torsion, when the description
/// determines it. Throws UnsupportedDescription otherwise.
IntMatrix h1_action(const MappingTorus4& x);

struct BettiNumbers {
    unsigned b1 = 0;
    unsigned b2 = 0;
    int chi = 0;
    int sigma = 0;
    unsigned k1 = 0;  // rank ker(f_* - I) on H1(Y; Q)
};

/// b1 = k1 + 1, b2 = 2 k1, chi = sigma = 0.
BettiNumbers betti_numbers_4d(const MappingTorus4& x);

/// All index-n sublattices L of Z^2 with A L = L, as upper-triangular
/// Hermite bases [[a, b], [0, d]] (columns generate L, a d = n, 0 <= b < a),
/// in increasing (a, b) order.
std::vector<IntMatrix> invariant_sublattices(const IntMatrix& a, unsigned index);

/// A finite cover of X built from a fiber sublattice L invariant under A^m,
/// the base circle cover t -> t^m, and the power f^k preserving
/// pi1(Y~) = <L, s^m>. The cover is Y~ x_{f~} S^1 with Y~ = T^2 x_{A~} S^1.
struct CoverEntry {
    IntMatrix sublattice;
    unsigned base_power = 1;
    unsigned monodromy_power = 1;
    IntMatrix fiber_monodromy;  // A~ in the basis of L
    std::variant<TorusBundleAut, RawT3Action> lifted;
    unsigned b1 = 0;

    unsigned sublattice_index() const;
    unsigned degree() const;
    std::string describe() const;
};

/// Sublattice index, base power and monodromy power all range over
/// 1..max_index. The trivial cover comes first; order is deterministic.
std::vector<CoverEntry> enumerate_covers(const TorusBundle& y, const TorusBundleAut& f,
                                         unsigned max_index);
std::vector<CoverEntry> enumerate_covers(const TorusBundle& y, const RawT3Action& f,
                                         unsigned max_index);
/// Dispatches on the monodromy; requires a torus-bundle fiber with explicit
/// action data (IdentityMonodromy, TorusBundleAut or RawT3Action).
std::vector<CoverEntry> enumerate_covers(const MappingTorus4& x, unsigned max_index);

inline constexpr unsigned default_max_cover_index = 12;

VB1Result vb1_fourfold(const MappingTorus4& x, unsigned max_index = default_max_cover_index);

}  // namespace mtori
