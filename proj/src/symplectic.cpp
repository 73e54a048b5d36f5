#include "mtori/symplectic.hpp"

#include <algorithm>
#include <set>

#include "detail/overloaded.hpp"
#include "mtori/error.hpp"

namespace mtori {

using detail::overloaded;

std::string to_string(KodairaDim k)
{
    switch (k) {
    case KodairaDim::NegInfinity: return "-infinity";
    case KodairaDim::Zero: return "0";
    case KodairaDim::One: return "1";
    }
    return "?";
}

std::string to_string(SymplecticStatus s)
{
    switch (s) {
    case SymplecticStatus::Yes: return "yes";
    case SymplecticStatus::No: return "no";
    case SymplecticStatus::Virtually: return "virtually";
    case SymplecticStatus::Unknown: return "unknown";
    }
    return "?";
}

std::string to_string(SurgeryFamily f)
{
    switch (f) {
    case SurgeryFamily::A: return "A";
    case SurgeryFamily::B: return "B";
    case SurgeryFamily::B0: return "B0";
    }
    return "?";
}

namespace {

bool is_trivial(const Monodromy4& m)
{
    if (std::holds_alternative<IdentityMonodromy>(m))
        return true;
    const auto* p = std::get_if<SymbolicPeriodic>(&m);
    return p && p->order == 1;
}

std::optional<unsigned> try_b1(const MappingTorus4& x)
{
    try {
        return betti_numbers_4d(x).b1;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::UnsupportedDescription)
            throw;
        return std::nullopt;
    }
}

SymplecticDecision decide_torus_fiber(const MappingTorus4& x, const TorusBundle& y, unsigned max_index)
{
    SymplecticDecision d;
    if (const auto* p = std::get_if<SymbolicPeriodic>(&x.monodromy); p && p->order != 1) {
        d.status = SymplecticStatus::Virtually;
        d.reason = "periodic monodromy of order " + std::to_string(p->order) +
                   ": the cyclic cover Y x S1 is a T2-bundle over T2 with b1 >= 2";
        d.cover = "Y x S1, degree " + std::to_string(p->order);
        return d;
    }
    const BettiNumbers b = betti_numbers_4d(x);
    d.b1 = b.b1;
    if (b.b1 >= 2) {
        FiberedPair fp = std::visit(
            overloaded{
                [&](const RawT3Action& f) { return is_fibered_pair_t3(f.matrix); },
                [&](const TorusBundleAut& f) { return is_fibered_pair(y, f); },
                [&](const auto&) { return is_fibered_pair(y, TorusBundleAut::identity()); },
            },
            x.monodromy);
        d.status = SymplecticStatus::Yes;
        d.fiber_class = fp.fiber_class;
        d.fiber_class_basis = fp.basis;
        d.reason = "torus-bundle fiber with b1(X) = " + std::to_string(b.b1) +
                   " >= 2: f fixes the primitive class " + to_string(*fp.fiber_class) +
                   " in H2(Y), so X is a T2-bundle over T2";
        return d;
    }
    const VB1Result vb = vb1_fourfold(x, max_index);
    if (vb.enumerated && *vb.enumerated >= 2) {
        d.status = SymplecticStatus::Virtually;
        d.reason = "torus-bundle fiber with b1(X) = 1 < 2, but a finite cover has b1 = " +
                   std::to_string(*vb.enumerated) + " >= 2";
        d.cover = vb.witness;
        return d;
    }
    d.status = SymplecticStatus::No;
    d.reason = "torus-bundle fiber with b1(X) = 1 < 2: X is not symplectic; no cover with index "
               "parameters <= " +
               std::to_string(max_index) + " has b1 >= 2";
    return d;
}

}  // namespace

SymplecticDecision decide_symplectic(const MappingTorus4& x, unsigned max_index)
{
    validate(x);
    return std::visit(
        overloaded{
            [&](const TorusBundle& y) { return decide_torus_fiber(x, y, max_index); },
            [&](const S1xS2&) {
                SymplecticDecision d;
                d.b1 = try_b1(x);
                if (is_trivial(x.monodromy)) {
                    d.status = SymplecticStatus::Yes;
                    d.reason = "S1xS2 fiber with trivial monodromy: X = S2 x T2";
                } else {
                    d.status = SymplecticStatus::Virtually;
                    d.reason = "S1xS2 fiber: X is finitely covered by S2 x T2";
                    d.cover = "S2 x T2";
                }
                return d;
            },
            [&](const Spherical&) {
                SymplecticDecision d;
                d.b1 = 1;
                d.status = SymplecticStatus::No;
                d.reason = "spherical fiber: every cover of X has b1 = 1, so no cover is symplectic";
                return d;
            },
            [&](const Seifert& s) {
                SymplecticDecision d;
                d.b1 = try_b1(x);
                const SeifertGeometry g = seifert_geometry(s);
                const std::string geo = "Seifert fiber with " + to_string(g) + " geometry";
                switch (g) {
                case SeifertGeometry::S3:
                    d.status = SymplecticStatus::No;
                    d.reason = geo + ": every cover of X has b1 = 1, so no cover is symplectic";
                    break;
                case SeifertGeometry::S2xR:
                    d.status = SymplecticStatus::Virtually;
                    d.reason = geo + ": Y is covered by S1xS2, so X is finitely covered by S2 x T2";
                    d.cover = "S2 x T2";
                    break;
                case SeifertGeometry::E3:
                case SeifertGeometry::Nil:
                    d.status = SymplecticStatus::Virtually;
                    d.reason = geo + " and periodic monodromy: X is finitely covered by a product of "
                                     "a torus bundle with S1, which has b1 >= 2";
                    d.cover = "(T2-bundle over S1) x S1";
                    break;
                case SeifertGeometry::H2xR:
                    d.status = SymplecticStatus::Virtually;
                    d.reason = geo + " and periodic monodromy: X is finitely covered by "
                                     "(surface of genus >= 2) x T2";
                    d.cover = "F x T2 with g(F) >= 2";
                    break;
                case SeifertGeometry::SL2R:
                    d.status = SymplecticStatus::No;
                    d.reason = geo + ": Y is not virtually fibered and the monodromy is periodic, "
                                     "so X is not virtually symplectic";
                    break;
                }
                return d;
            },
            [&](const SurfaceBundle& s) {
                SymplecticDecision d;
                d.b1 = try_b1(x);
                const std::string genus = std::to_string(s.genus);
                if (std::holds_alternative<SymbolicPeriodic>(x.monodromy) && !is_trivial(x.monodromy)) {
                    d.status = SymplecticStatus::Virtually;
                    d.reason = "Y fibers over the circle with fiber genus " + genus +
                               " and periodic monodromy: the cyclic cover Y x S1 is a surface bundle over T2";
                    d.cover = "Y x S1";
                } else {
                    d.status = SymplecticStatus::Yes;
                    d.reason = "fiber-preserving monodromy on a surface bundle of genus " + genus +
                               ": X is a genus-" + genus + " surface bundle over T2 with nonzero fiber class";
                }
                return d;
            },
            [&](const Hyperbolic&) {
                SymplecticDecision d;
                d.b1 = try_b1(x);
                d.reason = "hyperbolic fiber without fibration data: undecided";
                return d;
            },
            [&](const JsjGraph&) {
                SymplecticDecision d;
                d.b1 = try_b1(x);
                d.reason = "JSJ fiber without fibration data: undecided";
                return d;
            },
        },
        x.fiber);
}

KodairaDim kodaira_dimension(const MappingTorus4& x, unsigned max_index)
{
    const SymplecticDecision d = decide_symplectic(x, max_index);
    if (d.status != SymplecticStatus::Yes)
        raise(ErrorKind::NotSymplectic, "symplectic status is " + to_string(d.status) + ": " + d.reason);
    const BettiNumbers b = betti_numbers_4d(x);
    if (3 * b.sigma + 2 * b.chi != 0)
        raise(ErrorKind::InconsistentCharacteristicNumbers,
              "3 sigma + 2 chi = " + std::to_string(3 * b.sigma + 2 * b.chi) + " != 0");
    if (std::holds_alternative<S1xS2>(x.fiber))
        return KodairaDim::NegInfinity;
    if (std::holds_alternative<TorusBundle>(x.fiber))
        return KodairaDim::Zero;
    if (std::holds_alternative<SurfaceBundle>(x.fiber))
        return KodairaDim::One;
    raise(ErrorKind::UnsupportedDescription, "no Kodaira dimension rule for a " + describe(x.fiber) + " fiber");
}

std::string VirtualKodaira::describe() const
{
    return value ? to_string(*value) : "not virtually symplectic";
}

VirtualKodaira virtual_kodaira(const MappingTorus4& x, unsigned max_index)
{
    validate(x);
    auto genus_zero = [](std::string why) { return VirtualKodaira{KodairaDim::NegInfinity, 0, std::move(why)}; };
    auto genus_high = [](unsigned g, std::string why) { return VirtualKodaira{KodairaDim::One, g, std::move(why)}; };
    auto never = [](std::string why) { return VirtualKodaira{std::nullopt, std::nullopt, std::move(why)}; };
    auto genus_one = [&](std::string why) {
        const VB1Result vb = vb1_fourfold(x, max_index);
        const std::optional<unsigned> v = vb.best_known();
        if (!v)
            raise(ErrorKind::UnsupportedDescription, "virtual fiber genus 1 but vb1(X) is not determined");
        if (*v >= 2)
            return VirtualKodaira{KodairaDim::Zero, 1,
                                  why + "; vb1(X) >= " + std::to_string(*v) + " >= 2"};
        return VirtualKodaira{std::nullopt, 1,
                              why + "; covers with index parameters <= " + std::to_string(max_index) +
                                  " all have b1 = 1"};
    };
    return std::visit(
        overloaded{
            [&](const S1xS2&) { return genus_zero("Y fibers with sphere fiber; X is covered by S2 x T2"); },
            [&](const Spherical&) { return never("spherical fiber: vb1(X) = 1"); },
            [&](const TorusBundle&) { return genus_one("Y fibers with torus fiber"); },
            [&](const SurfaceBundle& s) {
                return genus_high(s.genus, "Y fibers with fiber genus " + std::to_string(s.genus) + " >= 2");
            },
            [&](const Seifert& s) -> VirtualKodaira {
                const SeifertGeometry g = seifert_geometry(s);
                const std::string geo = "Seifert fiber with " + to_string(g) + " geometry";
                switch (g) {
                case SeifertGeometry::S3: return never(geo + ": vb1(X) = 1");
                case SeifertGeometry::S2xR: return genus_zero(geo + ": Y is covered by S1xS2");
                case SeifertGeometry::E3:
                case SeifertGeometry::Nil: return genus_one(geo + ": Y is virtually a torus bundle");
                case SeifertGeometry::H2xR:
                    return genus_high(2, geo + ": Y is virtually F x S1 with g(F) >= 2");
                case SeifertGeometry::SL2R:
                    return never(geo + ": Y is not virtually fibered and the monodromy is periodic");
                }
                return never(geo);
            },
            [&](const auto&) -> VirtualKodaira {
                raise(ErrorKind::UnknownVirtualFibering,
                      "the " + describe(x.fiber) + " fiber carries no virtual fibration data");
            },
        },
        x.fiber);
}

std::size_t SurgeryPlan::count(SurgeryFamily f) const
{
    std::size_t n = 0;
    for (const SurgeryTorus& t : tori)
        n += t.family == f;
    return n;
}

SurgeryPlan luttinger_plan(unsigned genus, const TwistWord& phi, const TwistWord& psi2,
                           const std::vector<EulerDualComponent>& euler_dual)
{
    if (genus < 2)
        raise(ErrorKind::InvalidArgument, "surgery plans need fiber genus >= 2, got " + std::to_string(genus));
    for (const TwistWord* w : {&phi, &psi2})
        if (w->genus != genus)
            raise(ErrorKind::GenusMismatch, "twist word genus " + std::to_string(w->genus) +
                                                " != fiber genus " + std::to_string(genus));
    validate(phi);
    validate(psi2);
    for (const EulerDualComponent& c : euler_dual) {
        if (c.curve.size() != 2 * genus)
            raise(ErrorKind::GenusMismatch, "Euler-dual curve " + c.label + " has the wrong dimension");
        if (c.multiplicity < 1)
            raise(ErrorKind::ValidationError, "Euler-dual multiplicity must be >= 1");
    }

    SurgeryPlan plan;
    plan.genus = genus;
    plan.canonical_pairing = 2 * static_cast<long>(genus) - 2;
    unsigned marker = 0;
    for (const TwistLetter& l : phi.letters)
        plan.tori.push_back({SurgeryFamily::A, l.label, l.curve, ++marker, l.exponent});
    marker = 0;
    for (const TwistLetter& l : psi2.letters)
        plan.tori.push_back({SurgeryFamily::B, l.label, l.curve, ++marker, l.exponent});
    for (const EulerDualComponent& c : euler_dual)
        for (unsigned i = 0; i < c.multiplicity; ++i)
            plan.tori.push_back({SurgeryFamily::B0, c.label, c.curve, 0, 1});
    return plan;
}

namespace {

const SurfaceBundle& surface_fiber(const MappingTorus4& x)
{
    const auto* s = std::get_if<SurfaceBundle>(&x.fiber);
    if (!s)
        raise(ErrorKind::UnsupportedDescription, "surgery plans need a surface-bundle fiber, got " +
                                                     describe(x.fiber));
    return *s;
}

SurfaceBundleAut surface_monodromy(const MappingTorus4& x, unsigned genus)
{
    if (const auto* f = std::get_if<SurfaceBundleAut>(&x.monodromy))
        return *f;
    if (is_trivial(x.monodromy))
        return SurfaceBundleAut{TwistWord{genus, {}}, {}};
    raise(ErrorKind::UnsupportedDescription,
          "surgery plans need twist-word monodromy data, got " + describe(x.monodromy));
}

// <x, y> for the interleaved basis (a1, b1, ..., ag, bg) with <a_i, b_i> = 1.
Integer pairing(const IntVector& x, const IntVector& y)
{
    Integer s = 0;
    for (std::size_t i = 0; i + 1 < x.size(); i += 2)
        s += x[i] * y[i + 1] - x[i + 1] * y[i];
    return s;
}

}  // namespace

SurgeryPlan luttinger_plan(const MappingTorus4& x)
{
    validate(x);
    const SurfaceBundle& s = surface_fiber(x);
    const SurfaceBundleAut f = surface_monodromy(x, s.genus);
    return luttinger_plan(s.genus, s.phi, f.psi, f.euler_dual);
}

IntMatrix reconstruct_monodromy(const SurgeryPlan& plan, SurgeryFamily family)
{
    const std::size_t n = 2 * plan.genus;
    std::vector<const SurgeryTorus*> chosen;
    for (const SurgeryTorus& t : plan.tori)
        if (t.family == family)
            chosen.push_back(&t);
    std::stable_sort(chosen.begin(), chosen.end(),
                     [](const SurgeryTorus* a, const SurgeryTorus* b) { return a->marker < b->marker; });
    IntMatrix m = IntMatrix::identity(n);
    for (const SurgeryTorus* t : chosen) {
        // T_c^k(x) = x + k <x, c> c
        IntMatrix step = IntMatrix::identity(n);
        for (std::size_t j = 0; j < n; ++j) {
            IntVector e(n, 0);
            e[j] = 1;
            const Integer w = t->coefficient * pairing(e, t->curve);
            for (std::size_t i = 0; i < n; ++i)
                step(i, j) += w * t->curve[i];
        }
        m = m * step;
    }
    return m;
}

std::string PlanVerification::describe() const
{
    if (ok())
        return "verified: tori counts, distinct markers, K.[F] = 2g - 2, reconstructed monodromies match";
    std::string s = "FAILED:";
    if (!counts_match)
        s += " torus count";
    if (!markers_distinct)
        s += " marker collision";
    if (!pairing_matches)
        s += " canonical pairing";
    if (!phi_matches)
        s += " fiber monodromy " + reconstructed_phi.to_string();
    if (!psi2_matches)
        s += " base monodromy " + reconstructed_psi2.to_string();
    return s;
}

PlanVerification verify_plan(const SurgeryPlan& plan, std::size_t expected_tori,
                             const IntMatrix& expected_phi, const IntMatrix& expected_psi2)
{
    PlanVerification v;
    v.counts_match = plan.tori.size() == expected_tori;
    std::set<unsigned> p_markers;
    std::set<unsigned> q_markers;
    bool distinct = true;
    bool b0_seen = false;
    for (const SurgeryTorus& t : plan.tori) {
        if (t.family == SurgeryFamily::A)
            distinct &= p_markers.insert(t.marker).second;
        else if (t.family == SurgeryFamily::B)
            distinct &= t.marker != 0 && q_markers.insert(t.marker).second;
        else
            b0_seen = true;
    }
    // All B0 components share q0, which must stay off the B markers.
    if (b0_seen)
        distinct &= !q_markers.count(0);
    v.markers_distinct = distinct;
    v.pairing_matches = plan.canonical_pairing == 2 * static_cast<long>(plan.genus) - 2;
    v.reconstructed_phi = reconstruct_monodromy(plan, SurgeryFamily::A);
    v.reconstructed_psi2 = reconstruct_monodromy(plan, SurgeryFamily::B);
    v.phi_matches = v.reconstructed_phi == expected_phi;
    v.psi2_matches = v.reconstructed_psi2 == expected_psi2;
    return v;
}

PlanVerification verify_plan(const SurgeryPlan& plan, const MappingTorus4& x)
{
    const SurfaceBundle& s = surface_fiber(x);
    const SurfaceBundleAut f = surface_monodromy(x, s.genus);
    std::size_t expected = s.phi.size() + f.psi.size();
    for (const EulerDualComponent& c : f.euler_dual)
        expected += c.multiplicity;
    const IntMatrix phi = s.declared_action ? *s.declared_action : transvection_action(s.phi);
    return verify_plan(plan, expected, phi, transvection_action(f.psi));
}

}  // namespace mtori
