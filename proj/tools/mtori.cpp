// mtori: invariants of 4-dimensional mapping tori from JSON descriptions.
//
// Exit status: 0 success, 2 parse or validation error, 3 the description does
// not determine the requested invariant.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "mtori/error.hpp"
#include "mtori/report.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 2;
constexpr int exit_unsupported = 3;

std::string read_input(const std::string& path)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in)
        mtori::raise(mtori::ErrorKind::ParseError, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Invariants of 4-dimensional mapping tori: Betti numbers, vb1, symplecticity, "
                 "Kodaira dimension and Luttinger surgery plans."};
    app.require_subcommand(1);

    bool as_json = false;
    bool quiet = false;
    unsigned max_cover_index = 0;
    std::string path;

    app.add_flag("--json", as_json, "machine-readable output");
    app.add_flag("--quiet,-q", quiet, "suppress certificates and warnings");
    app.add_option("--max-cover-index", max_cover_index,
                   "bound on sublattice index, base power and monodromy power (default: document "
                   "option, else 12)")
        ->check(CLI::Range(1u, 64u));

    const std::pair<const char*, mtori::Command> commands[] = {
        {"classify", mtori::Command::Classify},
        {"invariants", mtori::Command::Invariants},
        {"symplectic", mtori::Command::Symplectic},
        {"surgery-plan", mtori::Command::SurgeryPlan},
    };
    const char* help[] = {
        "fiber classification and the vb1 clause",
        "b1, b2, chi, sigma and vb1",
        "symplecticity, Kodaira and virtual Kodaira dimension",
        "Luttinger surgery plan for a surface-bundle fiber",
    };
    std::vector<CLI::App*> subs;
    for (std::size_t i = 0; i < std::size(commands); ++i) {
        CLI::App* sub = app.add_subcommand(commands[i].first, help[i]);
        sub->add_option("document", path, "manifold description, or - for standard input")->required();
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_invalid;
    }

    mtori::Command command = mtori::Command::Classify;
    for (std::size_t i = 0; i < subs.size(); ++i)
        if (subs[i]->parsed())
            command = commands[i].second;

    try {
        mtori::ManifoldDoc doc = mtori::parse_document(read_input(path));
        if (max_cover_index != 0)
            doc.max_cover_index = max_cover_index;
        const mtori::Report report = mtori::run_command(command, doc);
        if (as_json)
            std::cout << mtori::to_json(report).dump(2) << "\n";
        else
            std::cout << mtori::render_text(report, quiet);
        if (!quiet)
            for (const std::string& w : report.warnings)
                std::cerr << "warning: " << w << "\n";
        return report.unsupported ? exit_unsupported : exit_ok;
    } catch (const mtori::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == mtori::ErrorKind::UnsupportedDescription ? exit_unsupported : exit_invalid;
    }
}
