#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "tpi/path_generation.hpp"
#include "tpi/solver.hpp"

namespace tpi {

enum class IssueKind {
    customer_without_path,
    element_unassigned,
    missing_junction_label,
    generation_failure,
};

std::string to_string(IssueKind kind);

struct DiagnosticIssue {
    IssueKind kind;
    ElementId subject;
    std::string detail;
    std::optional<ElementId> suggestion;
};

struct DiagnosticReport {
    std::vector<DiagnosticIssue> issues;
    bool empty() const { return issues.empty(); }
};

/// Inspects a solution for DSO follow-up: customers no selected path covers,
/// remaining elements no terminal claims, and per-customer generation
/// failures. For an uncovered customer the report suggests the junction most
/// of its k nearest covered customers are labelled for. Suggestions are
/// advisory; the input data is never modified.
DiagnosticReport diagnose(const Solution& sol, const PathMatrices& m, const Network& net,
                          int k_nearest = 3,
                          const std::vector<GenerationFailure>& failures = {});

nlohmann::json to_json(const DiagnosticReport& report);

}  // namespace tpi
