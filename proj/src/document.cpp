#include "mtori/document.hpp"

#include <algorithm>
#include <regex>
#include <set>

#include "detail/overloaded.hpp"
#include "mtori/error.hpp"

namespace mtori {

using detail::overloaded;
using nlohmann::json;

namespace {

constexpr unsigned max_allowed_cover_index = 64;

std::string kind_name(const json& j)
{
    return j.type_name();
}

/// A JSON node together with its pointer, for addressed errors.
class Node {
public:
    Node(const json& j, std::string pointer) : j_(j), pointer_(std::move(pointer)) {}

    [[noreturn]] void fail(const std::string& msg) const
    {
        raise(ErrorKind::ValidationError, (pointer_.empty() ? std::string("/") : pointer_) + ": " + msg);
    }

    const json& raw() const { return j_; }

    Node object() const
    {
        if (!j_.is_object())
            fail("expected an object, got " + kind_name(j_));
        return *this;
    }

    std::size_t array_size() const
    {
        if (!j_.is_array())
            fail("expected an array, got " + kind_name(j_));
        return j_.size();
    }

    Node at(std::size_t i) const { return {j_.at(i), pointer_ + "/" + std::to_string(i)}; }

    bool has(const std::string& key) const { return j_.contains(key); }

    Node field(const std::string& key) const
    {
        object();
        if (!j_.contains(key))
            fail("missing field \"" + key + "\"");
        return {j_.at(key), pointer_ + "/" + key};
    }

    void allow_only(std::initializer_list<const char*> keys) const
    {
        object();
        const std::set<std::string> allowed(keys.begin(), keys.end());
        for (const auto& [k, v] : j_.items())
            if (!allowed.count(k))
                Node(v, pointer_ + "/" + k).fail("unknown field");
    }

    std::string string() const
    {
        if (!j_.is_string())
            fail("expected a string, got " + kind_name(j_));
        return j_.get<std::string>();
    }

    bool boolean() const
    {
        if (!j_.is_boolean())
            fail("expected a boolean, got " + kind_name(j_));
        return j_.get<bool>();
    }

    Integer integer() const
    {
        if (j_.is_number_integer())
            return Integer(std::to_string(j_.get<long long>()));
        if (j_.is_number_unsigned())
            return Integer(std::to_string(j_.get<unsigned long long>()));
        if (j_.is_string()) {
            static const std::regex decimal("-?[0-9]+");
            const std::string s = j_.get<std::string>();
            if (!std::regex_match(s, decimal))
                fail("\"" + s + "\" is not a decimal integer");
            return Integer(s);
        }
        fail("expected an integer, got " + kind_name(j_));
    }

    unsigned count(unsigned lo, unsigned hi) const
    {
        const Integer v = integer();
        if (v < lo || v > hi)
            fail("expected an integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
                 v.get_str());
        return static_cast<unsigned>(v.get_ui());
    }

    Rational rational() const
    {
        if (j_.is_string()) {
            static const std::regex fraction("(-?[0-9]+)/([0-9]+)");
            const std::string s = j_.get<std::string>();
            std::smatch m;
            if (std::regex_match(s, m, fraction)) {
                const Integer den(m[2].str());
                if (den == 0)
                    fail("zero denominator");
                Rational q(Integer(m[1].str()), den);
                q.canonicalize();
                return q;
            }
        }
        return Rational(integer());
    }

    IntVector vector() const
    {
        IntVector v;
        const std::size_t n = array_size();
        for (std::size_t i = 0; i < n; ++i)
            v.push_back(at(i).integer());
        return v;
    }

    IntMatrix matrix() const
    {
        const std::size_t n = array_size();
        std::vector<IntVector> rows;
        for (std::size_t i = 0; i < n; ++i) {
            rows.push_back(at(i).vector());
            if (rows.back().size() != rows.front().size())
                at(i).fail("row length " + std::to_string(rows.back().size()) + " differs from row 0");
        }
        if (rows.empty() || rows.front().empty())
            fail("empty matrix");
        return IntMatrix::from_rows(rows);
    }

private:
    const json& j_;
    std::string pointer_;
};

TwistLetter parse_letter(const Node& n, std::size_t index)
{
    n.allow_only({"curve", "exponent", "label"});
    TwistLetter l;
    l.curve = n.field("curve").vector();
    l.exponent = n.field("exponent").integer();
    l.label = n.has("label") ? n.field("label").string() : "c" + std::to_string(index + 1);
    return l;
}

TwistWord parse_word(const Node& n, unsigned genus)
{
    TwistWord w{genus, {}};
    const std::size_t size = n.array_size();
    for (std::size_t i = 0; i < size; ++i)
        w.letters.push_back(parse_letter(n.at(i), i));
    return w;
}

NielsenThurston parse_nt(const Node& n)
{
    const std::string s = n.string();
    for (NielsenThurston t : {NielsenThurston::Periodic, NielsenThurston::PseudoAnosov, NielsenThurston::Reducible})
        if (to_string(t) == s)
            return t;
    n.fail("unknown Nielsen-Thurston type \"" + s + "\"");
}

ThreeManifold parse_fiber(const Node& n)
{
    const std::string type = n.field("type").string();
    if (type == "spherical") {
        n.allow_only({"type"});
        return Spherical{};
    }
    if (type == "s1xs2") {
        n.allow_only({"type"});
        return S1xS2{};
    }
    if (type == "hyperbolic") {
        n.allow_only({"type"});
        return Hyperbolic{};
    }
    if (type == "torus_bundle") {
        n.allow_only({"type", "monodromy"});
        return TorusBundle{n.field("monodromy").matrix()};
    }
    if (type == "seifert") {
        n.allow_only({"type", "base_genus", "base_orientable", "cone_orders", "euler_number"});
        Seifert s;
        s.base_genus = n.field("base_genus").count(0, 1000000);
        s.base_orientable = n.has("base_orientable") ? n.field("base_orientable").boolean() : true;
        if (n.has("cone_orders")) {
            const Node cones = n.field("cone_orders");
            const std::size_t size = cones.array_size();
            for (std::size_t i = 0; i < size; ++i)
                s.cone_orders.push_back(cones.at(i).count(2, 1000000));
        }
        s.euler_number = n.has("euler_number") ? n.field("euler_number").rational() : Rational(0);
        return s;
    }
    if (type == "surface_bundle") {
        n.allow_only({"type", "genus", "nt_type", "phi", "h1_action"});
        SurfaceBundle s;
        s.genus = n.field("genus").count(2, 1000);
        s.nt_type = n.has("nt_type") ? parse_nt(n.field("nt_type")) : NielsenThurston::PseudoAnosov;
        s.phi = parse_word(n.field("phi"), s.genus);
        if (n.has("h1_action"))
            s.declared_action = n.field("h1_action").matrix();
        return s;
    }
    if (type == "jsj_graph") {
        n.allow_only({"type", "pieces", "tori"});
        JsjGraph g;
        const Node pieces = n.field("pieces");
        const std::size_t size = pieces.array_size();
        for (std::size_t i = 0; i < size; ++i) {
            const std::string p = pieces.at(i).string();
            if (p == "seifert")
                g.pieces.push_back(JsjPiece::Seifert);
            else if (p == "hyperbolic")
                g.pieces.push_back(JsjPiece::Hyperbolic);
            else
                pieces.at(i).fail("unknown JSJ piece \"" + p + "\"");
        }
        g.tori = n.field("tori").count(1, 1000000);
        return g;
    }
    n.field("type").fail("unknown fiber type \"" + type + "\"");
}

Monodromy4 parse_monodromy(const Node& n, unsigned genus)
{
    const std::string type = n.field("type").string();
    if (type == "identity") {
        n.allow_only({"type"});
        return IdentityMonodromy{};
    }
    if (type == "symbolic_periodic") {
        n.allow_only({"type", "order"});
        return SymbolicPeriodic{n.field("order").count(1, 1000000)};
    }
    if (type == "torus_aut") {
        n.allow_only({"type", "B", "v", "epsilon"});
        TorusBundleAut f;
        f.B = n.field("B").matrix();
        f.v = n.has("v") ? n.field("v").vector() : IntVector{0, 0};
        const Integer eps = n.has("epsilon") ? n.field("epsilon").integer() : Integer(1);
        if (eps != 1 && eps != -1)
            n.field("epsilon").fail("epsilon must be 1 or -1");
        f.epsilon = static_cast<int>(eps.get_si());
        return f;
    }
    if (type == "h1_action") {
        n.allow_only({"type", "matrix"});
        return RawT3Action{n.field("matrix").matrix()};
    }
    if (type == "surface_aut") {
        n.allow_only({"type", "psi", "euler_dual"});
        SurfaceBundleAut f;
        f.psi = parse_word(n.field("psi"), genus);
        if (n.has("euler_dual")) {
            const Node dual = n.field("euler_dual");
            const std::size_t size = dual.array_size();
            for (std::size_t i = 0; i < size; ++i) {
                const Node c = dual.at(i);
                c.allow_only({"curve", "label", "multiplicity"});
                EulerDualComponent e;
                e.curve = c.field("curve").vector();
                e.label = c.has("label") ? c.field("label").string() : "beta0_" + std::to_string(i + 1);
                e.multiplicity = c.has("multiplicity") ? c.field("multiplicity").count(1, 1000) : 1;
                f.euler_dual.push_back(std::move(e));
            }
        }
        return f;
    }
    n.field("type").fail("unknown monodromy type \"" + type + "\"");
}

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

json letters_to_json(const std::vector<TwistLetter>& letters)
{
    json a = json::array();
    for (const TwistLetter& l : letters)
        a.push_back({{"curve", to_json(l.curve)}, {"exponent", l.exponent.get_str()}, {"label", l.label}});
    return a;
}

}  // namespace

ManifoldDoc parse_document(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        // e.byte is one past the offending character.
        const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
        std::string what = e.what();
        const auto colon = what.rfind(": ");
        raise(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                                         (colon == std::string::npos ? what : what.substr(colon + 2)));
    }
    const Node root(j, "");
    root.allow_only({"version", "fiber", "monodromy", "options"});
    const std::string version = root.field("version").string();
    if (version != schema_version)
        root.field("version").fail("unsupported schema version \"" + version + "\", expected \"" +
                                   schema_version + "\"");

    ManifoldDoc doc;
    ThreeManifold fiber = parse_fiber(root.field("fiber").object());
    unsigned genus = 1;
    if (const auto* s = std::get_if<SurfaceBundle>(&fiber))
        genus = s->genus;
    Monodromy4 monodromy =
        root.has("monodromy") ? parse_monodromy(root.field("monodromy").object(), genus) : IdentityMonodromy{};
    if (root.has("options")) {
        const Node options = root.field("options");
        options.allow_only({"max_cover_index"});
        if (options.has("max_cover_index"))
            doc.max_cover_index = options.field("max_cover_index").count(1, max_allowed_cover_index);
    }
    doc.manifold = MappingTorus4{std::move(fiber), std::move(monodromy)};
    try {
        validate(doc.manifold);
    } catch (const Error& e) {
        raise(ErrorKind::ValidationError, e.what());
    }
    return doc;
}

json to_json(const IntVector& v)
{
    json a = json::array();
    for (const Integer& x : v)
        a.push_back(x.get_str());
    return a;
}

json to_json(const IntMatrix& m)
{
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        a.push_back(to_json(m.row(i)));
    return a;
}

json to_json(const ThreeManifold& y)
{
    return std::visit(
        overloaded{
            [](const Spherical&) { return json{{"type", "spherical"}}; },
            [](const S1xS2&) { return json{{"type", "s1xs2"}}; },
            [](const Hyperbolic&) { return json{{"type", "hyperbolic"}}; },
            [](const TorusBundle& t) { return json{{"type", "torus_bundle"}, {"monodromy", to_json(t.monodromy)}}; },
            [](const Seifert& s) {
                return json{{"type", "seifert"},
                            {"base_genus", s.base_genus},
                            {"base_orientable", s.base_orientable},
                            {"cone_orders", s.cone_orders},
                            {"euler_number", s.euler_number.get_str()}};
            },
            [](const SurfaceBundle& s) {
                json j{{"type", "surface_bundle"},
                       {"genus", s.genus},
                       {"nt_type", to_string(s.nt_type)},
                       {"phi", letters_to_json(s.phi.letters)}};
                if (s.declared_action)
                    j["h1_action"] = to_json(*s.declared_action);
                return j;
            },
            [](const JsjGraph& g) {
                json pieces = json::array();
                for (JsjPiece p : g.pieces)
                    pieces.push_back(p == JsjPiece::Seifert ? "seifert" : "hyperbolic");
                return json{{"type", "jsj_graph"}, {"pieces", pieces}, {"tori", g.tori}};
            },
        },
        y);
}

json to_json(const Monodromy4& m)
{
    return std::visit(
        overloaded{
            [](const IdentityMonodromy&) { return json{{"type", "identity"}}; },
            [](const SymbolicPeriodic& p) { return json{{"type", "symbolic_periodic"}, {"order", p.order}}; },
            [](const TorusBundleAut& f) {
                return json{{"type", "torus_aut"},
                            {"B", to_json(f.B)},
                            {"v", to_json(f.v)},
                            {"epsilon", std::to_string(f.epsilon)}};
            },
            [](const RawT3Action& f) { return json{{"type", "h1_action"}, {"matrix", to_json(f.matrix)}}; },
            [](const SurfaceBundleAut& f) {
                json dual = json::array();
                for (const EulerDualComponent& c : f.euler_dual)
                    dual.push_back({{"curve", to_json(c.curve)}, {"label", c.label}, {"multiplicity", c.multiplicity}});
                return json{{"type", "surface_aut"}, {"psi", letters_to_json(f.psi.letters)}, {"euler_dual", dual}};
            },
        },
        m);
}

json to_json(const ManifoldDoc& doc)
{
    return json{{"version", schema_version},
                {"fiber", to_json(doc.manifold.fiber)},
                {"monodromy", to_json(doc.manifold.monodromy)},
                {"options", {{"max_cover_index", doc.max_cover_index}}}};
}

std::string serialize_document(const ManifoldDoc& doc)
{
    return to_json(doc).dump(2) + "\n";
}

}  // namespace mtori
