// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.
// Usage: acceptance <path to mtori executable> <golden directory>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mtori/error.hpp"
#include "mtori/symplectic.hpp"
#include "run_cli.hpp"
#include "support.hpp"

using namespace mtori;
using mtori::testing::Rng;
using mtori::testing::uniform;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            if (failures.size() < 5)
                failures.push_back(what);
        }
    }
};

// Nullity of a 2x2 integer matrix from its entries and determinant alone.
unsigned nullity_2x2(const IntMatrix& n)
{
    if (n(0, 0) == 0 && n(0, 1) == 0 && n(1, 0) == 0 && n(1, 1) == 0)
        return 2;
    return n(0, 0) * n(1, 1) - n(0, 1) * n(1, 0) == 0 ? 1 : 0;
}

Outcome trichotomy_oracle()
{
    Outcome o;
    Rng rng(101);
    unsigned counts[4] = {0, 0, 0, 0};
    for (int trial = 0; trial < 500; ++trial) {
        const IntMatrix a = testing::random_sl2z(rng, 8);
        unsigned best = 0;
        IntMatrix p = IntMatrix::identity(2);
        for (unsigned m = 1; m <= 12; ++m) {
            p = p * a;
            best = std::max(best, nullity_2x2(p - IntMatrix::identity(2)));
        }
        const VB1Result vb = vb1_threefold(TorusBundle{a});
        o.require(vb.kind == VB1Kind::Exact && vb.value == 1 + best,
                  "A = " + a.to_string() + ": vb1 " + vb.describe() + " vs oracle " + std::to_string(1 + best));
        ++counts[std::min(3u, 1 + best)];
    }
    o.detail = "500 random SL(2,Z) words; vb1 = 1/2/3 seen " + std::to_string(counts[1]) + "/" +
               std::to_string(counts[2]) + "/" + std::to_string(counts[3]) + " times";
    return o;
}

// b1 of pi1(X) abelianized: generators x1, x2, s, t with relations
// s x s^-1 = A x, t x t^-1 = B x, t s t^-1 = x_v s^eps.
unsigned abelianized_b1(const IntMatrix& a, const TorusBundleAut& f)
{
    IntMatrix r(4, 5);
    for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t i = 0; i < 2; ++i) {
            r(i, j) = a(i, j) - (i == j ? 1 : 0);
            r(i, j + 2) = f.B(i, j) - (i == j ? 1 : 0);
        }
    r(0, 4) = f.v[0];
    r(1, 4) = f.v[1];
    r(2, 4) = f.epsilon - 1;
    return static_cast<unsigned>(cokernel(r).free_rank);
}

std::vector<std::pair<IntMatrix, TorusBundleAut>> automorphism_sample()
{
    Rng rng(202);
    std::vector<std::pair<IntMatrix, TorusBundleAut>> out;
    for (int i = 0; i < 200; ++i)
        out.push_back(testing::random_torus_bundle_aut(rng));
    return out;
}

Outcome symplectic_quantities(const std::vector<std::pair<IntMatrix, TorusBundleAut>>& sample)
{
    Outcome o;
    unsigned yes = 0;
    for (const auto& [a, f] : sample) {
        const std::string name = "A = " + a.to_string() + ", f = " + f.to_string();
        const MappingTorus4 x = make_mapping_torus(TorusBundle{a}, f);
        const BettiNumbers b = betti_numbers_4d(x);
        const unsigned oracle_b1 = abelianized_b1(a, f);
        o.require(b.b1 == oracle_b1, name + ": b1 " + std::to_string(b.b1) + " vs abelianization " +
                                         std::to_string(oracle_b1));
        o.require(b.b1 == b.k1 + 1 && b.b2 == 2 * b.k1, name + ": b1/b2 not k1 + 1 / 2 k1");
        o.require(2 - 2 * static_cast<int>(b.b1) + static_cast<int>(b.b2) == 0 && b.chi == 0, name + ": chi != 0");

        const IntMatrix h2 = h2_action(TorusBundle{a}, f);
        const IntMatrix fixed = integer_kernel_basis(h2 - IntMatrix::identity(h2.rows()));
        bool invariant_class = false;
        for (std::size_t j = 0; j < fixed.cols(); ++j) {
            const IntVector alpha = fixed.column(j);
            invariant_class |= is_primitive(alpha) && h2.apply(alpha) == alpha;
        }
        o.require((b.b1 >= 2) == invariant_class, name + ": b1 >= 2 disagrees with invariant H2 class");
        const SymplecticDecision d = decide_symplectic(x, 2);
        o.require((d.status == SymplecticStatus::Yes) == (b.b1 >= 2), name + ": decision disagrees with b1");
        yes += b.b1 >= 2;
    }
    o.detail = "200 random automorphisms (" + std::to_string(yes) + " with b1 >= 2); b1 matches abelianized pi1";
    return o;
}

Outcome enumeration_ceiling(const std::vector<std::pair<IntMatrix, TorusBundleAut>>& sample)
{
    Outcome o;
    std::vector<MappingTorus4> inputs;
    for (const auto& [a, f] : sample)
        inputs.push_back(make_mapping_torus(TorusBundle{a}, f));
    const IntMatrix id = IntMatrix::identity(2);
    inputs.push_back(make_mapping_torus(TorusBundle{id}, IdentityMonodromy{}));
    inputs.push_back(make_mapping_torus(TorusBundle{IntMatrix{{2, 1}, {1, 1}}}, IdentityMonodromy{}));
    inputs.push_back(make_mapping_torus(TorusBundle{id}, RawT3Action{IntMatrix{{0, 0, 1}, {1, 0, 1}, {0, 1, 0}}}));
    inputs.push_back(make_mapping_torus(TorusBundle{id}, RawT3Action{IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}}));
    std::size_t covers = 0;
    unsigned top = 0;
    for (const MappingTorus4& x : inputs) {
        for (const CoverEntry& c : enumerate_covers(x, default_max_cover_index)) {
            ++covers;
            top = std::max(top, c.b1);
            o.require(c.b1 <= 4, describe(x.monodromy) + ": cover " + c.describe());
        }
    }
    o.detail = std::to_string(inputs.size()) + " torus-bundle inputs, " + std::to_string(covers) +
               " covers at max index 12, largest b1 " + std::to_string(top);
    return o;
}

Outcome known_values()
{
    Outcome o;
    const IntMatrix id = IntMatrix::identity(2);
    const MappingTorus4 t4 = make_mapping_torus(TorusBundle{id}, IdentityMonodromy{});
    const BettiNumbers bt = betti_numbers_4d(t4);
    o.require(bt.b1 == 4 && bt.b2 == 6, "T4 Betti numbers");
    o.require(vb1_fourfold(t4).best_known() == 4u, "T4 vb1");
    o.require(decide_symplectic(t4).status == SymplecticStatus::Yes, "T4 symplectic");
    o.require(kodaira_dimension(t4) == KodairaDim::Zero, "T4 kappa");

    const MappingTorus4 anosov = make_mapping_torus(TorusBundle{IntMatrix{{2, 1}, {1, 1}}}, IdentityMonodromy{});
    o.require(betti_numbers_4d(anosov).b1 == 2, "Anosov x S1 b1");
    o.require(decide_symplectic(anosov).status == SymplecticStatus::Yes, "Anosov x S1 symplectic");
    o.require(kodaira_dimension(anosov) == KodairaDim::Zero, "Anosov x S1 kappa");

    const MappingTorus4 inoue =
        make_mapping_torus(TorusBundle{id}, RawT3Action{IntMatrix{{0, 0, 1}, {1, 0, 1}, {0, 1, 0}}});
    const BettiNumbers bi = betti_numbers_4d(inoue);
    o.require(bi.b1 == 1 && bi.b2 == 0, "Inoue Betti numbers");
    o.require(decide_symplectic(inoue).status == SymplecticStatus::No, "Inoue not symplectic");
    const VB1Result vi = vb1_fourfold(inoue, 12);
    o.require(vi.enumerated == 1u, "Inoue enumerated vb1 " + vi.describe());
    o.require(!virtual_kodaira(inoue, 12).virtually_symplectic(), "Inoue virtual kappa");

    const MappingTorus4 s2t2 = make_mapping_torus(S1xS2{}, IdentityMonodromy{});
    o.require(vb1_fourfold(s2t2).kind == VB1Kind::Exact && vb1_fourfold(s2t2).value == 2, "S2 x T2 vb1");
    o.require(kodaira_dimension(s2t2) == KodairaDim::NegInfinity, "S2 x T2 kappa");

    o.detail = "T4, Anosov x S1, Inoue-type T3 bundle, S2 x T2";
    return o;
}

bool divisibility_chain(const IntVector& d)
{
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        if (d[i] < 0 || (d[i] == 0 && d[i + 1] != 0) || (d[i] != 0 && d[i + 1] % d[i] != 0))
            return false;
    }
    return d.empty() || d.back() >= 0;
}

Outcome smith_oracle()
{
    Outcome o;
    Rng rng(303);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 5));
        const std::size_t c = static_cast<std::size_t>(uniform(rng, 1, 5));
        const IntMatrix m = testing::random_matrix(rng, r, c, -9, 9);
        const SmithForm s = smith_normal_form(m);
        bool diagonal = s.D.rows() == r && s.D.cols() == c;
        for (std::size_t i = 0; i < r && diagonal; ++i)
            for (std::size_t j = 0; j < c; ++j)
                diagonal &= i == j || s.D(i, j) == 0;
        const std::size_t rank = rational_rank(m);
        o.require(s.U * m * s.V == s.D, "U M V != D for " + m.to_string());
        o.require(abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1, "U or V not unimodular");
        o.require(diagonal && divisibility_chain(s.diagonal()), "not a divisibility chain: " + s.D.to_string());
        o.require(s.rank() == rank, "SNF rank != Bareiss rank for " + m.to_string());
        o.require(cokernel(m).free_rank == r - rank && rational_kernel_rank(m) == c - rank,
                  "rank-nullity mismatch for " + m.to_string());
    }
    o.detail = "1000 random matrices up to 5x5, entries in [-9, 9]";
    return o;
}

Outcome twist_reconstruction()
{
    Outcome o;
    Rng rng(404);
    std::size_t longest = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const IntMatrix a = testing::random_sl2z(rng, 10);
        const TwistWord w = factor_into_twists(a);
        longest = std::max(longest, w.size());
        o.require(transvection_action(w) == a, "reconstruction failed for " + a.to_string());
    }
    o.detail = "500 random SL(2,Z) words, longest factorization " + std::to_string(longest) + " twists";
    return o;
}

// Product T_1 T_2 ... T_n of twists, each T_c^k built column by column from
// T_c^k(e_j) = e_j + k <e_j, c> c with the pairing written out here.
IntMatrix independent_product(unsigned genus, const std::vector<std::pair<IntVector, Integer>>& twists)
{
    const std::size_t n = 2 * genus;
    IntMatrix m = IntMatrix::identity(n);
    for (const auto& [c, k] : twists) {
        IntMatrix t = IntMatrix::identity(n);
        for (std::size_t j = 0; j < n; ++j) {
            // <e_j, c> = c_{b_i} when e_j = a_i, and -c_{a_i} when e_j = b_i.
            const Integer pairing = j % 2 == 0 ? c[j + 1] : Integer(-c[j - 1]);
            for (std::size_t i = 0; i < n; ++i)
                t(i, j) += k * pairing * c[i];
        }
        IntMatrix next(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t l = 0; l < n; ++l)
                    next(i, j) += m(i, l) * t(l, j);
        m = next;
    }
    return m;
}

Outcome surgery_plans()
{
    Outcome o;
    Rng rng(505);
    std::size_t total_tori = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const unsigned g = static_cast<unsigned>(uniform(rng, 2, 3));
        const TwistWord phi = testing::random_twist_word(rng, g, static_cast<std::size_t>(uniform(rng, 0, 5)));
        const TwistWord psi = testing::random_twist_word(rng, g, static_cast<std::size_t>(uniform(rng, 0, 4)));
        std::vector<EulerDualComponent> dual;
        std::size_t dual_count = 0;
        for (long i = uniform(rng, 0, 2); i > 0; --i) {
            const unsigned m = static_cast<unsigned>(uniform(rng, 1, 2));
            dual.push_back({testing::random_primitive(rng, 2 * g, 2), "beta0_" + std::to_string(i), m});
            dual_count += m;
        }
        const SurgeryPlan plan = luttinger_plan(g, phi, psi, dual);
        const std::string name = "genus " + std::to_string(g) + " trial " + std::to_string(trial);
        o.require(plan.tori.size() == phi.size() + psi.size() + dual_count, name + ": torus count");
        o.require(plan.canonical_pairing == 2 * static_cast<long>(g) - 2, name + ": canonical pairing");

        std::set<unsigned> p_markers;
        std::set<unsigned> q_markers;
        std::set<unsigned> b0_markers;
        std::vector<std::pair<unsigned, std::pair<IntVector, Integer>>> a_tori;
        std::vector<std::pair<unsigned, std::pair<IntVector, Integer>>> b_tori;
        bool distinct = true;
        for (const SurgeryTorus& t : plan.tori) {
            if (t.family == SurgeryFamily::A) {
                distinct &= p_markers.insert(t.marker).second;
                a_tori.push_back({t.marker, {t.curve, t.coefficient}});
            } else if (t.family == SurgeryFamily::B) {
                distinct &= q_markers.insert(t.marker).second;
                b_tori.push_back({t.marker, {t.curve, t.coefficient}});
            } else {
                distinct &= t.coefficient == 1;
                b0_markers.insert(t.marker);
            }
        }
        for (unsigned q : b0_markers)
            distinct &= !q_markers.count(q);
        distinct &= b0_markers.size() <= 1;
        o.require(distinct, name + ": marker collision");

        for (auto* tori : {&a_tori, &b_tori})
            std::sort(tori->begin(), tori->end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        auto strip = [](const auto& tori) {
            std::vector<std::pair<IntVector, Integer>> out;
            for (const auto& t : tori)
                out.push_back(t.second);
            return out;
        };
        std::vector<std::pair<IntVector, Integer>> phi_twists;
        for (const TwistLetter& l : phi.letters)
            phi_twists.push_back({l.curve, l.exponent});
        std::vector<std::pair<IntVector, Integer>> psi_twists;
        for (const TwistLetter& l : psi.letters)
            psi_twists.push_back({l.curve, l.exponent});
        o.require(independent_product(g, strip(a_tori)) == independent_product(g, phi_twists) &&
                      independent_product(g, phi_twists) == transvection_action(phi),
                  name + ": fiber monodromy not reconstructed");
        o.require(independent_product(g, strip(b_tori)) == transvection_action(psi),
                  name + ": base monodromy not reconstructed");
        o.require(verify_plan(plan, plan.tori.size(), transvection_action(phi), transvection_action(psi)).ok(),
                  name + ": library verifier rejected the plan");
        total_tori += plan.tori.size();
    }
    o.detail = "100 random genus 2/3 inputs, " + std::to_string(total_tori) + " tori";
    return o;
}

Outcome cli_determinism(const std::string& exe, const std::string& golden)
{
    Outcome o;
    const std::vector<testing::GoldenCase> cases = testing::read_golden_cases(golden);
    o.require(!cases.empty(), "no golden cases in " + golden);
    for (const testing::GoldenCase& c : cases) {
        const std::string expected = testing::slurp(golden + "/" + c.document + "." + c.command + ".out");
        const std::string doc = golden + "/" + c.document + ".json";
        for (int run = 0; run < 3; ++run) {
            const testing::CliResult r = testing::run_cli(exe, {"--json", "--quiet", c.command, doc});
            o.require(r.status == c.status, c.document + " " + c.command + ": exit " + std::to_string(r.status));
            o.require(!r.out.empty() && r.out == expected,
                      c.document + " " + c.command + ": run " + std::to_string(run + 1) + " differs from golden");
        }
    }
    o.detail = std::to_string(cases.size()) + " golden cases x 3 runs, byte-identical";
    return o;
}

}  // namespace

int main(int argc, char** argv)
{
    if (argc != 3) {
        std::cerr << "usage: acceptance <mtori executable> <golden directory>\n";
        return 2;
    }
    const std::string exe = argv[1];
    const std::string golden = argv[2];
    const auto sample = automorphism_sample();

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"AC1 torus-bundle vb1 trichotomy", trichotomy_oracle},
        {"AC2 Betti numbers and invariant fiber class", [&] { return symplectic_quantities(sample); }},
        {"AC3 cover b1 ceiling of 4", [&] { return enumeration_ceiling(sample); }},
        {"AC4 known values", known_values},
        {"AC5 Smith normal form", smith_oracle},
        {"AC6 twist-word reconstruction", twist_reconstruction},
        {"AC7 surgery-plan verifier", surgery_plans},
        {"AC8 CLI determinism and golden files", [&] { return cli_determinism(exe, golden); }},
    };

    bool all = true;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(1);
        line << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << " (" << seconds << " s)";
        std::cout << line.str() << "\n";
        for (const std::string& f : o.failures)
            std::cout << "    " << f << "\n";
        all &= o.pass;
    }
    std::cout << (all ? "all 8 criteria pass" : "acceptance FAILED") << "\n";
    return all ? 0 : 1;
}
