#include "mtori/fourfold.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <thread>

#include "detail/overloaded.hpp"
#include "mtori/error.hpp"

namespace mtori {

using detail::overloaded;

namespace {

Integer euler_pairing(const std::vector<EulerDualComponent>& dual, const IntVector& x)
{
    Integer e = 0;
    for (const EulerDualComponent& c : dual)
        e += c.multiplicity * intersection(x, c.curve);
    return e;
}

void validate_surface_aut(const SurfaceBundle& y, const SurfaceBundleAut& f)
{
    if (f.psi.genus != y.genus)
        raise(ErrorKind::GenusMismatch, "monodromy twist word genus " + std::to_string(f.psi.genus) +
                                            " != fiber genus " + std::to_string(y.genus));
    validate(f.psi);
    for (const EulerDualComponent& c : f.euler_dual) {
        if (c.curve.size() != 2 * y.genus)
            raise(ErrorKind::GenusMismatch, "Euler-dual curve " + c.label + " has the wrong dimension");
        if (c.multiplicity < 1)
            raise(ErrorKind::ValidationError, "Euler-dual multiplicity must be >= 1");
        if (!is_primitive(c.curve))
            raise(ErrorKind::ValidationError, "Euler-dual curve " + c.label + " is not primitive");
    }
    const IntMatrix phi = transvection_action(y.phi);
    const IntMatrix psi = transvection_action(f.psi);
    if (phi * psi != psi * phi)
        raise(ErrorKind::IncompatibleAutomorphism,
              "psi does not commute with the fiber monodromy on H1(F)");
    const IntMatrix shifted = phi - IntMatrix::identity(phi.rows());
    for (std::size_t j = 0; j < shifted.cols(); ++j)
        if (euler_pairing(f.euler_dual, shifted.column(j)) != 0)
            raise(ErrorKind::IncompatibleAutomorphism,
                  "the Euler-dual pairing does not vanish on im(phi - I)");
}

// Unchecked H1 action for the torus-bundle case.
IntMatrix torus_h1_action(const IntMatrix& a, const TorusBundleAut& f)
{
    const Coinvariants c = free_coinvariants(a);
    const std::size_t k = c.rank();
    const IntMatrix bbar = c.projection * f.B * c.section;
    const IntVector vbar = c.projection.apply(f.v);
    IntMatrix m(k + 1, k + 1);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            m(i, j) = bbar(i, j);
        m(i, k) = vbar[i];
    }
    m(k, k) = f.epsilon;
    return m;
}

IntMatrix surface_h1_action(const SurfaceBundle& y, const SurfaceBundleAut& f)
{
    const Coinvariants c = free_coinvariants(transvection_action(y.phi));
    const std::size_t k = c.rank();
    const IntMatrix psibar = c.projection * transvection_action(f.psi) * c.section;
    IntMatrix m(k + 1, k + 1);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            m(i, j) = psibar(i, j);
    for (std::size_t j = 0; j < k; ++j)
        m(k, j) = euler_pairing(f.euler_dual, c.section.column(j));
    m(k, k) = 1;
    return m;
}

unsigned kernel_rank_of_shift(const IntMatrix& m)
{
    return static_cast<unsigned>(rational_kernel_rank(m - IntMatrix::identity(m.rows())));
}

}  // namespace

void validate(const MappingTorus4& x)
{
    validate(x.fiber);
    std::visit(overloaded{
                   [](const IdentityMonodromy&) {},
                   [](const SymbolicPeriodic& p) {
                       if (p.order < 1)
                           raise(ErrorKind::ValidationError, "periodic order must be >= 1");
                   },
                   [&](const TorusBundleAut& f) {
                       const auto* t = std::get_if<TorusBundle>(&x.fiber);
                       if (!t)
                           raise(ErrorKind::IncompatibleAutomorphism,
                                 "torus-bundle automorphism data needs a torus-bundle fiber");
                       validate_aut(t->monodromy, f.B, f.v, f.epsilon);
                       if (!f.preserves_orientation())
                           raise(ErrorKind::IncompatibleAutomorphism,
                                 "monodromy reverses orientation (det B * epsilon = -1)");
                   },
                   [&](const RawT3Action& f) {
                       const auto* t = std::get_if<TorusBundle>(&x.fiber);
                       if (!t || !t->monodromy.is_identity())
                           raise(ErrorKind::IncompatibleAutomorphism,
                                 "a raw H1 action is only accepted for the fiber T3 (A = I)");
                       if (f.matrix.rows() != 3 || f.matrix.cols() != 3)
                           raise(ErrorKind::ValidationError, "T3 action must be 3x3");
                       const Integer d = determinant(f.matrix);
                       if (abs(d) != 1)
                           raise(ErrorKind::NotUnimodular, "T3 action " + f.matrix.to_string() +
                                                               " has determinant " + d.get_str());
                       if (d != 1)
                           raise(ErrorKind::IncompatibleAutomorphism,
                                 "T3 action reverses orientation (det = -1)");
                   },
                   [&](const SurfaceBundleAut& f) {
                       const auto* s = std::get_if<SurfaceBundle>(&x.fiber);
                       if (!s)
                           raise(ErrorKind::IncompatibleAutomorphism,
                                 "surface-bundle automorphism data needs a surface-bundle fiber");
                       validate_surface_aut(*s, f);
                   },
               },
               x.monodromy);
}

MappingTorus4 make_mapping_torus(ThreeManifold fiber, Monodromy4 monodromy)
{
    MappingTorus4 x{std::move(fiber), std::move(monodromy)};
    validate(x);
    return x;
}

std::string describe(const Monodromy4& m)
{
    return std::visit(
        overloaded{
            [](const IdentityMonodromy&) -> std::string { return "identity"; },
            [](const SymbolicPeriodic& p) -> std::string {
                return "periodic of order " + std::to_string(p.order);
            },
            [](const TorusBundleAut& f) -> std::string { return "torus-bundle automorphism " + f.to_string(); },
            [](const RawT3Action& f) -> std::string { return "T3 action " + f.matrix.to_string(); },
            [](const SurfaceBundleAut& f) -> std::string {
                return "surface-bundle automorphism (" + std::to_string(f.psi.size()) + " twists, " +
                       std::to_string(f.euler_dual.size()) + " Euler-dual components)";
            },
        },
        m);
}

IntMatrix induced_h1_action(const TorusBundle& y, const TorusBundleAut& f)
{
    const TorusBundleAut checked = validate_aut(y.monodromy, f.B, f.v, f.epsilon);
    return torus_h1_action(y.monodromy, checked);
}

IntMatrix h1_action(const MappingTorus4& x)
{
    validate(x);
    auto unsupported = [&]() -> IntMatrix {
        raise(ErrorKind::UnsupportedDescription,
              "the H1 action of " + describe(x.monodromy) + " on a " + describe(x.fiber) +
                  " fiber is not determined by the description");
    };
    auto identity_action = [&]() -> IntMatrix {
        if (const auto* t = std::get_if<TorusBundle>(&x.fiber))
            return torus_h1_action(t->monodromy, TorusBundleAut::identity());
        if (const auto* s = std::get_if<Seifert>(&x.fiber))
            return IntMatrix::identity(seifert_b1(*s));
        if (std::holds_alternative<S1xS2>(x.fiber) || std::holds_alternative<SurfaceBundle>(x.fiber))
            return IntMatrix::identity(first_homology(x.fiber).b1);
        return unsupported();
    };
    // Spherical fibers have H1(Y; Q) = 0 whatever the monodromy.
    if (std::holds_alternative<Spherical>(x.fiber))
        return IntMatrix(0, 0);
    return std::visit(
        overloaded{
            [&](const TorusBundleAut& f) {
                return torus_h1_action(std::get<TorusBundle>(x.fiber).monodromy, f);
            },
            [&](const RawT3Action& f) { return f.matrix; },
            [&](const SurfaceBundleAut& f) {
                return surface_h1_action(std::get<SurfaceBundle>(x.fiber), f);
            },
            [&](const IdentityMonodromy&) { return identity_action(); },
            [&](const SymbolicPeriodic& p) { return p.order == 1 ? identity_action() : unsupported(); },
        },
        x.monodromy);
}

BettiNumbers betti_numbers_4d(const MappingTorus4& x)
{
    const IntMatrix action = h1_action(x);
    BettiNumbers b;
    b.k1 = kernel_rank_of_shift(action);
    b.b1 = b.k1 + 1;
    b.b2 = 2 * b.k1;
    b.chi = 0;
    b.sigma = 0;
    return b;
}

std::vector<IntMatrix> invariant_sublattices(const IntMatrix& a, unsigned index)
{
    if (a.rows() != 2 || a.cols() != 2)
        raise(ErrorKind::InvalidArgument, "sublattices are enumerated for 2x2 actions");
    if (index < 1)
        raise(ErrorKind::InvalidArgument, "sublattice index must be >= 1");
    std::vector<IntMatrix> out;
    for (unsigned p = 1; p <= index; ++p) {
        if (index % p != 0)
            continue;
        const unsigned d = index / p;
        for (unsigned b = 0; b < p; ++b) {
            IntMatrix h{{static_cast<long>(p), static_cast<long>(b)}, {0, static_cast<long>(d)}};
            bool invariant = true;
            for (std::size_t j = 0; j < 2 && invariant; ++j)
                invariant = solve_in_lattice(h, a.apply(h.column(j))).has_value();
            if (invariant)
                out.push_back(std::move(h));
        }
    }
    return out;
}

unsigned CoverEntry::sublattice_index() const
{
    return static_cast<unsigned>(sublattice(0, 0).get_ui() * sublattice(1, 1).get_ui());
}

unsigned CoverEntry::degree() const
{
    return sublattice_index() * base_power * monodromy_power;
}

std::string CoverEntry::describe() const
{
    return "fiber sublattice " + sublattice.to_string() + " (index " +
           std::to_string(sublattice_index()) + "), base power " + std::to_string(base_power) +
           ", monodromy power " + std::to_string(monodromy_power) + ", degree " +
           std::to_string(degree()) + ", b1 = " + std::to_string(b1);
}

namespace {

// pi1(Y) = Z^2 x_A Z; an element x_w s^p.
struct GroupElement {
    IntVector w;
    long p = 0;
};

class TorusBundleGroup {
public:
    explicit TorusBundleGroup(const IntMatrix& a) : a_(a), a_inv_(unimodular_inverse(a)) {}

    const IntMatrix& power(long p)
    {
        auto it = cache_.find(p);
        if (it != cache_.end())
            return it->second;
        IntMatrix m = p >= 0 ? a_.power(static_cast<unsigned>(p)) : a_inv_.power(static_cast<unsigned>(-p));
        return cache_.emplace(p, std::move(m)).first->second;
    }

    GroupElement multiply(const GroupElement& g, const GroupElement& h)
    {
        IntVector w = power(g.p).apply(h.w);
        for (std::size_t i = 0; i < 2; ++i)
            w[i] += g.w[i];
        return {std::move(w), g.p + h.p};
    }

    GroupElement inverse(const GroupElement& g)
    {
        IntVector w = power(-g.p).apply(g.w);
        for (Integer& x : w)
            x = -x;
        return {std::move(w), -g.p};
    }

    GroupElement raise_to(const GroupElement& g, long n)
    {
        const GroupElement base = n >= 0 ? g : inverse(g);
        GroupElement r{{0, 0}, 0};
        for (long i = 0; i < std::abs(n); ++i)
            r = multiply(r, base);
        return r;
    }

    // (f o g)(x) = Bf Bg x,  (f o g)(s) = f(x_{vg}) f(s)^{eps_g}.
    TorusBundleAut compose(const TorusBundleAut& f, const TorusBundleAut& g)
    {
        const GroupElement fs{f.v, f.epsilon};
        const GroupElement image = multiply({f.B.apply(g.v), 0}, raise_to(fs, g.epsilon));
        return {f.B * g.B, image.w, static_cast<int>(image.p)};
    }

private:
    IntMatrix a_;
    IntMatrix a_inv_;
    std::map<long, IntMatrix> cache_;
};

// P^-1 X P when integral.
std::optional<IntMatrix> restrict_to_lattice(const IntMatrix& basis, const IntMatrix& x)
{
    const std::size_t n = basis.cols();
    IntMatrix out(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto c = solve_in_lattice(basis, x.apply(basis.column(j)));
        if (!c)
            return std::nullopt;
        for (std::size_t i = 0; i < n; ++i)
            out(i, j) = (*c)[i];
    }
    return out;
}

std::vector<IntMatrix> all_sublattices(const IntMatrix& a, unsigned max_index)
{
    std::vector<IntMatrix> out;
    for (unsigned n = 1; n <= max_index; ++n)
        for (IntMatrix& h : invariant_sublattices(IntMatrix::identity(2), n))
            out.push_back(std::move(h));
    (void)a;
    return out;
}

template <class Job>
std::vector<CoverEntry> run_per_lattice(const std::vector<IntMatrix>& lattices, Job job)
{
    const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), 8u));
    std::vector<std::vector<CoverEntry>> parts(lattices.size());
    if (workers == 1) {
        for (std::size_t i = 0; i < lattices.size(); ++i)
            parts[i] = job(lattices[i]);
    } else {
        std::vector<std::future<void>> futures;
        for (unsigned w = 0; w < workers; ++w)
            futures.push_back(std::async(std::launch::async, [&, w] {
                for (std::size_t i = w; i < lattices.size(); i += workers)
                    parts[i] = job(lattices[i]);
            }));
        for (auto& f : futures)
            f.get();
    }
    std::vector<CoverEntry> out;
    for (auto& p : parts)
        for (CoverEntry& e : p)
            out.push_back(std::move(e));
    return out;
}

}  // namespace

std::vector<CoverEntry> enumerate_covers(const TorusBundle& y, const TorusBundleAut& f_in,
                                         unsigned max_index)
{
    if (max_index < 1)
        raise(ErrorKind::InvalidArgument, "max_index must be >= 1");
    const TorusBundleAut f = validate_aut(y.monodromy, f_in.B, f_in.v, f_in.epsilon);
    const IntMatrix& a = y.monodromy;

    auto job = [&](const IntMatrix& lattice) {
        TorusBundleGroup group(a);
        std::vector<CoverEntry> found;
        for (unsigned m = 1; m <= max_index; ++m) {
            const auto a_tilde = restrict_to_lattice(lattice, group.power(m));
            if (!a_tilde)
                continue;
            TorusBundleAut fk = f;
            for (unsigned k = 1; k <= max_index; ++k) {
                if (k > 1)
                    fk = group.compose(f, fk);
                const auto b_tilde = restrict_to_lattice(lattice, fk.B);
                if (!b_tilde)
                    continue;
                const GroupElement image = group.raise_to({fk.v, fk.epsilon}, static_cast<long>(m));
                const auto v_tilde = solve_in_lattice(lattice, image.w);
                if (!v_tilde)
                    continue;
                TorusBundleAut lifted{*b_tilde, *v_tilde, fk.epsilon};
                const unsigned b1 = 1 + kernel_rank_of_shift(torus_h1_action(*a_tilde, lifted));
                found.push_back({lattice, m, k, *a_tilde, std::move(lifted), b1});
            }
        }
        return found;
    };
    return run_per_lattice(all_sublattices(a, max_index), job);
}

std::vector<CoverEntry> enumerate_covers(const TorusBundle& y, const RawT3Action& f,
                                         unsigned max_index)
{
    if (max_index < 1)
        raise(ErrorKind::InvalidArgument, "max_index must be >= 1");
    if (!y.monodromy.is_identity())
        raise(ErrorKind::IncompatibleAutomorphism, "a raw H1 action needs the fiber T3");

    std::vector<IntMatrix> powers{IntMatrix::identity(3)};
    for (unsigned k = 1; k <= max_index; ++k)
        powers.push_back(powers.back() * f.matrix);

    auto job = [&](const IntMatrix& lattice) {
        std::vector<CoverEntry> found;
        for (unsigned m = 1; m <= max_index; ++m) {
            IntMatrix basis = direct_sum(lattice, IntMatrix{{static_cast<long>(m)}});
            for (unsigned k = 1; k <= max_index; ++k) {
                auto lifted = restrict_to_lattice(basis, powers[k]);
                if (!lifted)
                    continue;
                const unsigned b1 = 1 + kernel_rank_of_shift(*lifted);
                found.push_back({lattice, m, k, IntMatrix::identity(2), RawT3Action{std::move(*lifted)}, b1});
            }
        }
        return found;
    };
    return run_per_lattice(all_sublattices(IntMatrix::identity(2), max_index), job);
}

std::vector<CoverEntry> enumerate_covers(const MappingTorus4& x, unsigned max_index)
{
    validate(x);
    const auto* y = std::get_if<TorusBundle>(&x.fiber);
    if (!y)
        raise(ErrorKind::UnsupportedDescription, "cover enumeration needs a torus-bundle fiber");
    return std::visit(
        overloaded{
            [&](const IdentityMonodromy&) {
                return enumerate_covers(*y, TorusBundleAut::identity(), max_index);
            },
            [&](const TorusBundleAut& f) { return enumerate_covers(*y, f, max_index); },
            [&](const RawT3Action& f) { return enumerate_covers(*y, f, max_index); },
            [&](const SymbolicPeriodic& p) {
                if (p.order != 1)
                    raise(ErrorKind::UnsupportedDescription,
                          "cover enumeration needs explicit action data, got " + describe(x.monodromy));
                return enumerate_covers(*y, TorusBundleAut::identity(), max_index);
            },
            [&](const auto&) -> std::vector<CoverEntry> {
                raise(ErrorKind::UnsupportedDescription,
                      "cover enumeration needs explicit action data, got " + describe(x.monodromy));
            },
        },
        x.monodromy);
}

namespace {

const CoverEntry* best_cover(const std::vector<CoverEntry>& covers)
{
    const CoverEntry* best = nullptr;
    for (const CoverEntry& c : covers)
        if (!best || c.b1 > best->b1)
            best = &c;
    return best;
}

VB1Result periodic_reduction(const ThreeManifold& fiber, const SymbolicPeriodic& p, unsigned ceiling)
{
    const VB1Result base = vb1_threefold(fiber);
    const std::string why = "monodromy of order " + std::to_string(p.order) +
                            ": X is finitely covered by Y x S1, so vb1(X) = vb1(Y) + 1; " +
                            base.certificate;
    if (base.kind == VB1Kind::Infinite)
        return VB1Result::infinite(why);
    VB1Result r = VB1Result::bounded(ceiling, base.value + 1, why);
    r.saturated = true;
    return r;
}

}  // namespace

VB1Result vb1_fourfold(const MappingTorus4& x, unsigned max_index)
{
    validate(x);
    const std::string torus_ceiling =
        "torus-bundle covered fiber: every finite cover of X is a mapping torus of a torus "
        "bundle, so vb1(X) <= 4";
    return std::visit(
        overloaded{
            [](const Spherical&) {
                return VB1Result::exact(1, "spherical fiber: every cover has b1 = 1, vb1(X) = 1");
            },
            [](const S1xS2&) {
                return VB1Result::exact(2, "S1xS2 fiber: X is finitely covered by S2 x T2, vb1(X) = 2");
            },
            [&](const TorusBundle& y) -> VB1Result {
                if (const auto* p = std::get_if<SymbolicPeriodic>(&x.monodromy))
                    return periodic_reduction(y, *p, 4);
                const std::vector<CoverEntry> full = enumerate_covers(x, max_index);
                const std::vector<CoverEntry> half = enumerate_covers(x, std::max(1u, max_index / 2));
                const CoverEntry* best = best_cover(full);
                const CoverEntry* best_half = best_cover(half);
                VB1Result r = VB1Result::bounded(
                    4, best->b1,
                    torus_ceiling + "; enumeration over " + std::to_string(full.size()) +
                        " covers with index parameters <= " + std::to_string(max_index) +
                        " attains b1 = " + std::to_string(best->b1));
                r.saturated = best_half->b1 == best->b1;
                r.witness = best->describe();
                return r;
            },
            [&](const Seifert& s) -> VB1Result {
                const SeifertGeometry g = seifert_geometry(s);
                const std::string geo = "Seifert fiber with " + to_string(g) + " geometry";
                switch (g) {
                case SeifertGeometry::S3:
                    return VB1Result::exact(1, geo + " (positive orbifold Euler characteristic, "
                                                     "spherical): vb1(X) = 1");
                case SeifertGeometry::S2xR:
                    return VB1Result::exact(2, geo + " (positive orbifold Euler characteristic, "
                                                     "covered by S1xS2): X is covered by S2 x T2, "
                                                     "vb1(X) = 2");
                case SeifertGeometry::E3:
                case SeifertGeometry::Nil: {
                    const std::string why = geo + " (zero orbifold Euler characteristic): " + torus_ceiling;
                    if (const auto* p = std::get_if<SymbolicPeriodic>(&x.monodromy))
                        return periodic_reduction(s, *p, 4);
                    if (std::holds_alternative<IdentityMonodromy>(x.monodromy))
                        return periodic_reduction(s, SymbolicPeriodic{1}, 4);
                    return VB1Result::bounded(4, std::nullopt,
                                              why + "; no torus-bundle presentation given");
                }
                default:
                    return VB1Result::infinite(geo +
                                               ": negative orbifold Euler characteristic, vb1(X) = infinity");
                }
            },
            [](const SurfaceBundle& s) {
                return VB1Result::infinite("Y fibers over the circle with fiber genus " + std::to_string(s.genus) +
                                           " >= 2, so vb1(Y) = infinity and vb1(X) = infinity");
            },
            [](const Hyperbolic&) {
                return VB1Result::infinite(
                    "hyperbolic fiber: the monodromy is periodic, X is covered by Y x S1, vb1(X) = infinity");
            },
            [](const JsjGraph&) {
                return VB1Result::infinite(
                    "fiber with nontrivial JSJ decomposition: a JSJ torus lifts to two "
                    "non-separating tori in a cover, vb1(X) = infinity");
            },
        },
        x.fiber);
}

}  // namespace mtori
