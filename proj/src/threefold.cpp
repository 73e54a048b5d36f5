#include "mtori/threefold.hpp"

#include "mtori/error.hpp"
#include "detail/overloaded.hpp"

namespace mtori {

std::string to_string(NielsenThurston t)
{
    switch (t) {
    case NielsenThurston::Periodic: return "periodic";
    case NielsenThurston::PseudoAnosov: return "pseudo_anosov";
    case NielsenThurston::Reducible: return "reducible";
    }
    return "?";
}

namespace {

using detail::overloaded;

HomologyReport mapping_torus_homology(const IntMatrix& phi)
{
    const CokernelStructure c = cokernel(phi - IntMatrix::identity(phi.rows()));
    return {static_cast<unsigned>(c.free_rank + 1), c.torsion};
}

}  // namespace

void validate(const ThreeManifold& y)
{
    std::visit(overloaded{
                   [](const TorusBundle& t) {
                       const IntMatrix& a = t.monodromy;
                       if (a.rows() != 2 || a.cols() != 2)
                           raise(ErrorKind::NotUnimodular, "torus bundle monodromy must be 2x2");
                       if (determinant(a) != 1)
                           raise(ErrorKind::NotUnimodular, "torus bundle monodromy " + a.to_string() +
                                                               " has determinant " +
                                                               determinant(a).get_str());
                   },
                   [](const Seifert& s) {
                       for (unsigned a : s.cone_orders)
                           if (a < 2)
                               raise(ErrorKind::ValidationError, "cone orders must be >= 2");
                       if (!s.base_orientable && s.base_genus < 1)
                           raise(ErrorKind::ValidationError,
                                 "a non-orientable base needs at least one crosscap");
                   },
                   [](const SurfaceBundle& s) {
                       if (s.genus < 2)
                           raise(ErrorKind::ValidationError, "surface bundle fiber genus must be >= 2");
                       if (s.phi.genus != s.genus)
                           raise(ErrorKind::GenusMismatch,
                                 "twist word genus " + std::to_string(s.phi.genus) +
                                     " != fiber genus " + std::to_string(s.genus));
                       validate(s.phi);
                       if (s.declared_action) {
                           const IntMatrix& d = *s.declared_action;
                           if (d.rows() != 2 * s.genus || d.cols() != 2 * s.genus)
                               raise(ErrorKind::GenusMismatch, "declared H1 action has the wrong size");
                       }
                   },
                   [](const JsjGraph& j) {
                       if (j.pieces.empty() || j.tori < 1)
                           raise(ErrorKind::ValidationError,
                                 "a JSJ graph needs at least one piece and one torus");
                   },
                   [](const auto&) {},
               },
               y);
}

std::string describe(const ThreeManifold& y)
{
    return std::visit(
        overloaded{
            [](const Spherical&) -> std::string { return "spherical"; },
            [](const S1xS2&) -> std::string { return "S1xS2"; },
            [](const TorusBundle& t) -> std::string {
                return "torus bundle with monodromy " + t.monodromy.to_string();
            },
            [](const Seifert& s) -> std::string {
                std::string cones;
                for (unsigned a : s.cone_orders)
                    cones += (cones.empty() ? "" : ",") + std::to_string(a);
                return "Seifert fibered over " +
                       std::string(s.base_orientable ? "orientable" : "non-orientable") +
                       " genus " + std::to_string(s.base_genus) + " base, cone orders (" + cones +
                       "), Euler number " + s.euler_number.get_str();
            },
            [](const SurfaceBundle& s) -> std::string {
                return "genus " + std::to_string(s.genus) + " surface bundle (" +
                       to_string(s.nt_type) + " monodromy, " + std::to_string(s.phi.size()) +
                       " twists)";
            },
            [](const Hyperbolic&) -> std::string { return "hyperbolic"; },
            [](const JsjGraph& j) -> std::string {
                return "JSJ graph with " + std::to_string(j.pieces.size()) + " pieces and " +
                       std::to_string(j.tori) + " tori";
            },
        },
        y);
}

HomologyReport first_homology(const ThreeManifold& y)
{
    validate(y);
    return std::visit(
        overloaded{
            [](const S1xS2&) { return HomologyReport{1, {}}; },
            [](const TorusBundle& t) { return mapping_torus_homology(t.monodromy); },
            [](const SurfaceBundle& s) { return mapping_torus_homology(transvection_action(s.phi)); },
            [](const Seifert& s) {
                // Circle bundle over an orientable surface: Z^{2g} + Z/e.
                if (!s.base_orientable || !s.cone_orders.empty() || s.euler_number.get_den() != 1)
                    raise(ErrorKind::UnsupportedDescription,
                          "H1 of a Seifert space is only computed for circle bundles over "
                          "orientable surfaces");
                HomologyReport h{2 * s.base_genus, {}};
                const Integer e = abs(s.euler_number.get_num());
                if (e == 0)
                    h.b1 += 1;
                else if (e > 1)
                    h.torsion.push_back(e);
                return h;
            },
            [&](const auto&) -> HomologyReport {
                raise(ErrorKind::UnsupportedDescription,
                      "no homology data in the description of a " + describe(y) + " manifold");
            },
        },
        y);
}

VB1Result VB1Result::exact(unsigned v, std::string cert)
{
    VB1Result r;
    r.kind = VB1Kind::Exact;
    r.value = v;
    r.saturated = true;
    r.certificate = std::move(cert);
    return r;
}

VB1Result VB1Result::infinite(std::string cert)
{
    VB1Result r;
    r.kind = VB1Kind::Infinite;
    r.certificate = std::move(cert);
    return r;
}

VB1Result VB1Result::bounded(unsigned ceiling, std::optional<unsigned> found, std::string cert)
{
    VB1Result r;
    r.kind = VB1Kind::BoundedAbove;
    r.value = ceiling;
    r.enumerated = found;
    r.certificate = std::move(cert);
    return r;
}

std::optional<unsigned> VB1Result::best_known() const
{
    switch (kind) {
    case VB1Kind::Exact: return value;
    case VB1Kind::BoundedAbove: return enumerated;
    case VB1Kind::Infinite: return std::nullopt;
    }
    return std::nullopt;
}

std::string VB1Result::describe() const
{
    switch (kind) {
    case VB1Kind::Exact: return std::to_string(value);
    case VB1Kind::Infinite: return "infinity";
    case VB1Kind::BoundedAbove:
        if (enumerated)
            return std::to_string(*enumerated) + " (enumerated; <= " + std::to_string(value) + ")";
        return "<= " + std::to_string(value);
    }
    return "?";
}

Rational orbifold_euler(const Seifert& y)
{
    Rational chi = y.base_orientable ? Rational(2 - 2 * static_cast<long>(y.base_genus))
                                     : Rational(2 - static_cast<long>(y.base_genus));
    for (unsigned a : y.cone_orders)
        chi -= Rational(1) - Rational(1, a);
    chi.canonicalize();
    return chi;
}

unsigned seifert_b1(const Seifert& y)
{
    if (!y.base_orientable)
        return y.base_genus - 1;
    return 2 * y.base_genus + (y.euler_number == 0 ? 1 : 0);
}

SeifertGeometry seifert_geometry(const Seifert& y)
{
    const int s = sgn(orbifold_euler(y));
    const bool flat = y.euler_number == 0;
    if (s > 0)
        return flat ? SeifertGeometry::S2xR : SeifertGeometry::S3;
    if (s == 0)
        return flat ? SeifertGeometry::E3 : SeifertGeometry::Nil;
    return flat ? SeifertGeometry::H2xR : SeifertGeometry::SL2R;
}

std::string to_string(SeifertGeometry g)
{
    switch (g) {
    case SeifertGeometry::S3: return "S3";
    case SeifertGeometry::S2xR: return "S2xR";
    case SeifertGeometry::E3: return "E3";
    case SeifertGeometry::Nil: return "Nil";
    case SeifertGeometry::H2xR: return "H2xR";
    case SeifertGeometry::SL2R: return "SL2R";
    }
    return "?";
}

VB1Result vb1_threefold(const ThreeManifold& y)
{
    validate(y);
    return std::visit(
        overloaded{
            [](const Spherical&) {
                return VB1Result::exact(0, "spherical: every finite cover has finite H1, vb1 = 0");
            },
            [](const S1xS2&) { return VB1Result::exact(1, "S1xS2: pi1 = Z, vb1 = 1"); },
            [](const TorusBundle& t) {
                const Sl2Class c = classify_sl2z(t.monodromy);
                switch (c.kind) {
                case Sl2Kind::Anosov:
                    return VB1Result::exact(
                        1, "torus bundle with Anosov monodromy: A^n - I is invertible for all n, vb1 = 1");
                case Sl2Kind::Reducible:
                    return VB1Result::exact(
                        2, "torus bundle with reducible monodromy: unipotent power " +
                               std::to_string(*c.unipotent_power) +
                               " has kernel rank 1, vb1 = 2");
                case Sl2Kind::Periodic:
                    return VB1Result::exact(
                        3, "torus bundle with periodic monodromy of order " +
                               std::to_string(*c.order) + ": the cyclic cover is T3, vb1 = 3");
                }
                return VB1Result::infinite("unreachable");
            },
            [](const Seifert& s) {
                const SeifertGeometry g = seifert_geometry(s);
                const std::string geo = "Seifert space with " + to_string(g) + " geometry";
                switch (g) {
                case SeifertGeometry::S3:
                    return VB1Result::exact(0, geo + " is spherical, vb1 = 0");
                case SeifertGeometry::S2xR:
                    return VB1Result::exact(1, geo + " is covered by S1xS2, vb1 = 1");
                case SeifertGeometry::E3:
                    return VB1Result::exact(3, geo + " is covered by T3, vb1 = 3");
                case SeifertGeometry::Nil:
                    return VB1Result::exact(
                        2, geo + " is covered by a torus bundle with reducible monodromy, vb1 = 2");
                default:
                    return VB1Result::infinite(geo +
                                               ": negative orbifold Euler characteristic, vb1 = infinity");
                }
            },
            [](const SurfaceBundle& s) {
                return VB1Result::infinite("fibered with fiber genus " + std::to_string(s.genus) +
                                           " >= 2: not covered by a torus bundle, vb1 = infinity");
            },
            [](const Hyperbolic&) {
                return VB1Result::infinite("hyperbolic: not spherical and not covered by a torus "
                                           "bundle, vb1 = infinity");
            },
            [](const JsjGraph&) {
                return VB1Result::infinite("nontrivial JSJ decomposition: vb1 = infinity");
            },
        },
        y);
}

Coinvariants free_coinvariants(const IntMatrix& phi)
{
    const std::size_t n = phi.rows();
    const IntMatrix shifted_t = (phi - IntMatrix::identity(n)).transpose();
    const SmithForm s = smith_normal_form(shifted_t);
    const std::size_t r = s.rank();
    const std::size_t k = n - r;
    const IntMatrix v_inv = unimodular_inverse(s.V);
    Coinvariants c{IntMatrix(k, n), IntMatrix(n, k)};
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            c.projection(j, i) = s.V(i, r + j);
            c.section(i, j) = v_inv(r + j, i);
        }
    return c;
}

namespace {

TorusBundleAut require_automorphism(const TorusBundle& y, const TorusBundleAut& f)
{
    TorusBundleAut checked;
    try {
        checked = validate_aut(y.monodromy, f.B, f.v, f.epsilon);
    } catch (const Error& e) {
        raise(ErrorKind::InvalidAutomorphism, e.detail());
    }
    if (!checked.preserves_orientation())
        raise(ErrorKind::InvalidAutomorphism, "f reverses the orientation of Y (det B * epsilon = -1)");
    return checked;
}

FiberedPair fibered_from_h2(const IntMatrix& h2, std::string basis)
{
    const IntMatrix fixed = integer_kernel_basis(h2 - IntMatrix::identity(h2.rows()));
    FiberedPair out;
    out.invariant_rank = static_cast<unsigned>(fixed.cols());
    out.fibered = out.invariant_rank >= 1;
    out.basis = std::move(basis);
    if (out.fibered) {
        IntVector c = fixed.column(0);
        for (const Integer& x : c)
            if (x != 0) {
                if (x < 0)
                    for (Integer& y : c)
                        y = -y;
                break;
            }
        out.fiber_class = std::move(c);
    }
    return out;
}

}  // namespace

IntMatrix h2_action(const TorusBundle& y, const TorusBundleAut& f_in)
{
    const TorusBundleAut f = require_automorphism(y, f_in);
    const IntMatrix fixed = integer_kernel_basis(y.monodromy - IntMatrix::identity(2));
    const std::size_t k = fixed.cols();
    IntMatrix h(k + 1, k + 1);
    h(0, 0) = determinant(f.B);
    for (std::size_t j = 0; j < k; ++j) {
        const IntVector bc = f.B.apply(fixed.column(j));
        const auto coords = solve_in_lattice(fixed, bc);
        if (!coords)
            raise(ErrorKind::InvalidAutomorphism, "B does not preserve ker(A - I)");
        h(0, j + 1) = bc[0] * f.v[1] - bc[1] * f.v[0];
        for (std::size_t i = 0; i < k; ++i)
            h(i + 1, j + 1) = f.epsilon * (*coords)[i];
    }
    return h;
}

IntMatrix exterior_square(const IntMatrix& m)
{
    if (m.rows() != 3 || m.cols() != 3)
        raise(ErrorKind::InvalidArgument, "exterior square is implemented for 3x3 matrices");
    static constexpr std::size_t pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    IntMatrix out(3, 3);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) {
            const auto [i, j] = std::pair(pairs[r][0], pairs[r][1]);
            const auto [k, l] = std::pair(pairs[c][0], pairs[c][1]);
            out(r, c) = m(i, k) * m(j, l) - m(i, l) * m(j, k);
        }
    return out;
}

FiberedPair is_fibered_pair(const TorusBundle& y, const TorusBundleAut& f)
{
    const IntMatrix h2 = h2_action(y, f);
    const IntMatrix fixed = integer_kernel_basis(y.monodromy - IntMatrix::identity(2));
    std::string basis = "[F]";
    for (std::size_t j = 0; j < fixed.cols(); ++j)
        basis += ", " + to_string(fixed.column(j)) + " x S1";
    return fibered_from_h2(h2, "(" + basis + ")");
}

FiberedPair is_fibered_pair_t3(const IntMatrix& m)
{
    if (m.rows() != 3 || m.cols() != 3 || determinant(m) != 1)
        raise(ErrorKind::InvalidAutomorphism, "T3 monodromy must lie in SL(3,Z), got " + m.to_string());
    return fibered_from_h2(exterior_square(m), "(e1^e2, e1^e3, e2^e3)");
}

}  // namespace mtori
