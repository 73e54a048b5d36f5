#include "mtori/report.hpp"

#include <sstream>

#include "detail/overloaded.hpp"
#include "mtori/error.hpp"

namespace mtori {

using detail::overloaded;
using nlohmann::json;

std::string to_string(Command c)
{
    switch (c) {
    case Command::Classify: return "classify";
    case Command::Invariants: return "invariants";
    case Command::Symplectic: return "symplectic";
    case Command::SurgeryPlan: return "surgery-plan";
    }
    return "?";
}

namespace {

std::string classify_fiber(const ThreeManifold& y, const VB1Result& vb)
{
    const std::string tail = "; vb1(Y) = " + vb.describe();
    return std::visit(
        overloaded{
            [&](const TorusBundle& t) { return classify_sl2z(t.monodromy).describe() + tail; },
            [&](const Seifert& s) {
                return "Seifert, " + to_string(seifert_geometry(s)) + " geometry, chi_orb = " +
                       orbifold_euler(s).get_str() + tail;
            },
            [&](const SurfaceBundle& s) {
                return "Surface bundle, genus " + std::to_string(s.genus) + ", " + to_string(s.nt_type) + tail;
            },
            [&](const auto&) { return describe(y) + tail; },
        },
        y);
}

void note_vb1(Report& r, const VB1Result& vb)
{
    r.certificates.push_back("vb1(X): " + vb.certificate);
    if (vb.kind == VB1Kind::BoundedAbove && vb.enumerated && !vb.saturated)
        r.warnings.push_back("cover enumeration did not saturate at max cover index " +
                             std::to_string(r.max_cover_index) + "; vb1(X) may exceed " +
                             std::to_string(*vb.enumerated));
}

template <class F>
bool supported(Report& r, F&& f)
{
    try {
        f();
        return true;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::UnsupportedDescription)
            throw;
        if (!r.unsupported)
            r.unsupported = e.detail();
        return false;
    }
}

}  // namespace

Report run_command(Command c, const ManifoldDoc& doc)
{
    const MappingTorus4& x = doc.manifold;
    validate(x);
    Report r;
    r.command = c;
    r.max_cover_index = doc.max_cover_index;
    r.manifold = describe(x.fiber) + ", monodromy " + describe(x.monodromy);

    switch (c) {
    case Command::Classify: {
        r.fiber_vb1 = vb1_threefold(x.fiber);
        r.classification = classify_fiber(x.fiber, *r.fiber_vb1);
        r.certificates.push_back("vb1(Y): " + r.fiber_vb1->certificate);
        r.vb1 = vb1_fourfold(x, doc.max_cover_index);
        note_vb1(r, *r.vb1);
        break;
    }
    case Command::Invariants: {
        supported(r, [&] {
            r.invariants = betti_numbers_4d(x);
            r.certificates.push_back("b1(X) = k1 + 1 = " + std::to_string(r.invariants->b1) +
                                     ", b2(X) = 2 k1 = " + std::to_string(r.invariants->b2) +
                                     " with k1 = rank ker(f_* - I) on H1(Y; Q) = " +
                                     std::to_string(r.invariants->k1) + "; chi = sigma = 0");
        });
        r.vb1 = vb1_fourfold(x, doc.max_cover_index);
        note_vb1(r, *r.vb1);
        break;
    }
    case Command::Symplectic: {
        r.symplectic = decide_symplectic(x, doc.max_cover_index);
        r.certificates.push_back("symplectic: " + r.symplectic->reason);
        if (r.symplectic->status == SymplecticStatus::Yes) {
            supported(r, [&] {
                r.kodaira = kodaira_dimension(x, doc.max_cover_index);
                r.certificates.push_back("kodaira: 3 sigma + 2 chi = 0; " + to_string(*r.kodaira) + " for a " +
                                         describe(x.fiber) + " fiber");
            });
        }
        try {
            r.virtual_kodaira = virtual_kodaira(x, doc.max_cover_index);
            r.certificates.push_back("virtual kodaira: " + r.virtual_kodaira->reason);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::UnknownVirtualFibering && e.kind() != ErrorKind::UnsupportedDescription)
                throw;
            r.certificates.push_back("virtual kodaira: undetermined (" + e.detail() + ")");
        }
        break;
    }
    case Command::SurgeryPlan: {
        supported(r, [&] {
            r.surgery_plan = luttinger_plan(x);
            r.verification = verify_plan(*r.surgery_plan, x);
            r.certificates.push_back("surgery plan: " + r.verification->describe());
        });
        break;
    }
    }
    return r;
}

json to_json(const VB1Result& v)
{
    json j;
    switch (v.kind) {
    case VB1Kind::Exact:
        j["kind"] = "exact";
        j["value"] = v.value;
        break;
    case VB1Kind::Infinite:
        j["kind"] = "infinite";
        j["value"] = "infinity";
        break;
    case VB1Kind::BoundedAbove:
        j["kind"] = "bounded_above";
        j["ceiling"] = v.value;
        j["enumerated"] = v.enumerated ? json(*v.enumerated) : json(nullptr);
        j["saturated"] = v.saturated;
        break;
    }
    j["certificate"] = v.certificate;
    if (v.witness)
        j["witness"] = *v.witness;
    return j;
}

namespace {

json decision_json(const SymplecticDecision& d)
{
    json j{{"status", to_string(d.status)}, {"reason", d.reason}};
    j["b1"] = d.b1 ? json(*d.b1) : json(nullptr);
    if (d.fiber_class)
        j["fiber_class"] = {{"class", to_json(*d.fiber_class)}, {"basis", d.fiber_class_basis}};
    if (d.cover)
        j["cover"] = *d.cover;
    return j;
}

json plan_json(const SurgeryPlan& p)
{
    json tori = json::array();
    for (const SurgeryTorus& t : p.tori)
        tori.push_back({{"family", to_string(t.family)},
                        {"label", t.label},
                        {"curve", to_json(t.curve)},
                        {"marker", (t.family == SurgeryFamily::A ? "p" : "q") + std::to_string(t.marker)},
                        {"coefficient", t.coefficient.get_str()}});
    return json{{"genus", p.genus},
                {"base_manifold", "F x T2 with g(F) = " + std::to_string(p.genus)},
                {"tori", tori},
                {"canonical_pairing", p.canonical_pairing.get_str()}};
}

}  // namespace

json to_json(const Report& r)
{
    json j{{"command", to_string(r.command)},
           {"manifold", r.manifold},
           {"max_cover_index", r.max_cover_index},
           {"certificates", r.certificates},
           {"warnings", r.warnings}};
    if (r.classification)
        j["classification"] = *r.classification;
    if (r.fiber_vb1)
        j["fiber_vb1"] = to_json(*r.fiber_vb1);
    if (r.invariants)
        j["invariants"] = {{"b1", r.invariants->b1},
                           {"b2", r.invariants->b2},
                           {"chi", r.invariants->chi},
                           {"sigma", r.invariants->sigma}};
    if (r.vb1)
        j["vb1"] = to_json(*r.vb1);
    if (r.symplectic) {
        j["symplectic"] = decision_json(*r.symplectic);
        j["kodaira"] = r.kodaira ? json(to_string(*r.kodaira)) : json(nullptr);
        if (r.virtual_kodaira)
            j["virtual_kodaira"] = r.virtual_kodaira->value ? json(to_string(*r.virtual_kodaira->value))
                                                            : json("not_virtually_symplectic");
        else
            j["virtual_kodaira"] = nullptr;
    }
    if (r.surgery_plan)
        j["surgery_plan"] = plan_json(*r.surgery_plan);
    if (r.verification)
        j["verification"] = {{"ok", r.verification->ok()},
                             {"reconstructed_phi", to_json(r.verification->reconstructed_phi)},
                             {"reconstructed_psi2", to_json(r.verification->reconstructed_psi2)}};
    if (r.unsupported)
        j["unsupported"] = *r.unsupported;
    return j;
}

std::string render_text(const Report& r, bool quiet)
{
    std::ostringstream out;
    if (!quiet)
        out << "manifold: " << r.manifold << "\n";
    if (r.classification)
        out << r.classification->c_str() << "\n";
    if (r.invariants)
        out << "b1 = " << r.invariants->b1 << ", b2 = " << r.invariants->b2 << ", chi = " << r.invariants->chi
            << ", sigma = " << r.invariants->sigma << "\n";
    if (r.vb1) {
        out << "vb1(X) = " << r.vb1->describe() << "\n";
        if (r.vb1->witness && !quiet)
            out << "  witness: " << *r.vb1->witness << "\n";
    }
    if (r.symplectic) {
        out << "symplectic: " << to_string(r.symplectic->status) << "\n";
        if (r.kodaira)
            out << "kodaira dimension: " << to_string(*r.kodaira) << "\n";
        out << "virtual kodaira dimension: "
            << (r.virtual_kodaira ? r.virtual_kodaira->describe() : std::string("undetermined")) << "\n";
    }
    if (r.surgery_plan) {
        const SurgeryPlan& p = *r.surgery_plan;
        out << "surgery plan on F x T2, g(F) = " << p.genus << ", " << p.tori.size() << " tori, K.[F] = "
            << p.canonical_pairing.get_str() << "\n";
        for (const SurgeryTorus& t : p.tori)
            out << "  " << to_string(t.family) << " " << t.label << " " << to_string(t.curve) << " at "
                << (t.family == SurgeryFamily::A ? "p" : "q") << t.marker << ", coefficient "
                << t.coefficient.get_str() << "\n";
    }
    if (r.verification)
        out << r.verification->describe() << "\n";
    if (r.unsupported)
        out << "unsupported: " << *r.unsupported << "\n";
    if (!quiet) {
        for (const std::string& c : r.certificates)
            out << "certificate: " << c << "\n";
    }
    return out.str();
}

}  // namespace mtori
