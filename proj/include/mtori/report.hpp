#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mtori/document.hpp"
#include "mtori/symplectic.hpp"

namespace mtori {

enum class Command { Classify, Invariants, Symplectic, SurgeryPlan };

std::string to_string(Command c);

struct Report {
    Command command = Command::Classify;
    std::string manifold;
    unsigned max_cover_index = default_max_cover_index;

    std::optional<std::string> classification;
    std::optional<VB1Result> fiber_vb1;
    std::optional<BettiNumbers> invariants;
    std::optional<VB1Result> vb1;
    std::optional<SymplecticDecision> symplectic;
    std::optional<KodairaDim> kodaira;
    std::optional<VirtualKodaira> virtual_kodaira;
    std::optional<SurgeryPlan> surgery_plan;
    std::optional<PlanVerification> verification;

    std::vector<std::string> certificates;
    std::vector<std::string> warnings;
    /// Set when part of the requested output is not determined by the
    /// description; the CLI exits with status 3.
    std::optional<std::string> unsupported;
};

/// Runs one command on a parsed document. Errors other than
/// UnsupportedDescription propagate.
Report run_command(Command c, const ManifoldDoc& doc);

nlohmann::json to_json(const VB1Result& v);
nlohmann::json to_json(const Report& r);

/// Human-readable rendering; `quiet` drops certificates and warnings.
std::string render_text(const Report& r, bool quiet);

}  // namespace mtori
