#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mtori/fourfold.hpp"

namespace mtori {

/// Two is never produced: K^2 = 3 sigma + 2 chi = 0 on a mapping torus.
enum class KodairaDim { NegInfinity, Zero, One };

std::string to_string(KodairaDim k);

enum class SymplecticStatus { Yes, No, Virtually, Unknown };

std::string to_string(SymplecticStatus s);

struct SymplecticDecision {
    SymplecticStatus status = SymplecticStatus::Unknown;
    std::string reason;
    std::optional<unsigned> b1;  // empty when the description does not determine it
    /// Primitive f-invariant class in H2(Y) for a symplectic torus-bundle fiber.
    std::optional<IntVector> fiber_class;
    std::string fiber_class_basis;
    /// Cover on which a symplectic structure exists, for Virtually.
    std::optional<std::string> cover;
};

SymplecticDecision decide_symplectic(const MappingTorus4& x,
                                     unsigned max_index = default_max_cover_index);

/// Requires decide_symplectic == Yes (NotSymplectic otherwise) and
/// 3 sigma + 2 chi = 0 (InconsistentCharacteristicNumbers otherwise).
KodairaDim kodaira_dimension(const MappingTorus4& x, unsigned max_index = default_max_cover_index);

struct VirtualKodaira {
    /// Empty exactly when X is not virtually symplectic.
    std::optional<KodairaDim> value;
    std::optional<unsigned> virtual_fiber_genus;
    std::string reason;

    bool virtually_symplectic() const { return value.has_value(); }
    std::string describe() const;
};

/// Reads the genus g of a virtual fibration of Y off the description:
/// g = 0 gives NegInfinity, g >= 2 gives One, g = 1 gives Zero iff the
/// enumerated vb1(X) >= 2. Throws UnknownVirtualFibering for hyperbolic and
/// JSJ fibers, UnsupportedDescription when g = 1 but vb1(X) is not known.
VirtualKodaira virtual_kodaira(const MappingTorus4& x, unsigned max_index = default_max_cover_index);

enum class SurgeryFamily { A, B, B0 };

std::string to_string(SurgeryFamily f);

/// Lagrangian torus in F x T^2 = F x S^1_p x S^1_q. Family A: alpha x {p} x S^1,
/// family B and B0: beta x S^1 x {q}. Markers are ordinal positions on the
/// respective circle factor; B0 sits at q = 0.
struct SurgeryTorus {
    SurgeryFamily family = SurgeryFamily::A;
    std::string label;
    IntVector curve;
    unsigned marker = 0;
    Integer coefficient = 1;
};

struct SurgeryPlan {
    unsigned genus = 2;
    std::vector<SurgeryTorus> tori;
    Integer canonical_pairing = 2;  // K . [F] = 2g - 2

    std::size_t count(SurgeryFamily f) const;
};

/// Family A from phi (one torus per letter, coefficient = exponent, markers
/// 1..n1), family B from psi2 (markers 1..n2), and one B0 torus with
/// coefficient 1 per unit of Euler-dual multiplicity, all at marker 0.
SurgeryPlan luttinger_plan(unsigned genus, const TwistWord& phi, const TwistWord& psi2,
                           const std::vector<EulerDualComponent>& euler_dual);

/// Plan for a surface-bundle fiber with identity or surface-bundle monodromy.
SurgeryPlan luttinger_plan(const MappingTorus4& x);

/// Monodromy on H1(F) produced by regluing along the tori of one family, in
/// marker order: the product of T_c^k = I + k c (J c)^T.
IntMatrix reconstruct_monodromy(const SurgeryPlan& plan, SurgeryFamily family);

struct PlanVerification {
    bool counts_match = false;
    bool markers_distinct = false;
    bool pairing_matches = false;
    bool phi_matches = false;
    bool psi2_matches = false;
    IntMatrix reconstructed_phi;
    IntMatrix reconstructed_psi2;

    bool ok() const
    {
        return counts_match && markers_distinct && pairing_matches && phi_matches && psi2_matches;
    }
    std::string describe() const;
};

PlanVerification verify_plan(const SurgeryPlan& plan, std::size_t expected_tori,
                             const IntMatrix& expected_phi, const IntMatrix& expected_psi2);

/// Expected actions taken from the fiber (declared_action if present) and the
/// monodromy of x.
PlanVerification verify_plan(const SurgeryPlan& plan, const MappingTorus4& x);

}  // namespace mtori
