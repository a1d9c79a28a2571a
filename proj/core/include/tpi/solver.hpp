#pragma once

#include <cstdint>
#include <limits>

#include "tpi/ilp.hpp"

namespace tpi {

struct SolveLimits {
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
    double max_seconds = std::numeric_limits<double>::infinity();
};

enum class SolveStatus { optimal, infeasible_model, aborted };

std::string to_string(SolveStatus status);

struct SolveStats {
    std::uint64_t nodes = 0;
    double milliseconds = 0.0;
};

struct Solution {
    EstimatedPaths p_hat;
    TerminalAssociation t_r;
    Rational objective{0};
    int selected_count = 0;
    int assignment_count = 0;
    SolveStatus status = SolveStatus::optimal;
    SolveStats stats;
};

/// Provably optimal solution by depth-first branch and bound over the path
/// variables. Selecting a path forces its interior elements onto its
/// terminal, so the association variables are propagated, never branched on.
/// Deterministic: among optima the solver returns the one with the
/// lexicographically greatest P-hat, then the minimal (lexicographically
/// smallest) T_R. When a limit runs out the best incumbent is returned with
/// status aborted.
Solution solve(const IlpProblem& problem, const SolveLimits& limits = {});

/// Exhaustive oracle for small instances: enumerates every selection
/// satisfying the unique-path constraint, derives the unique minimal T_R per
/// selection, keeps the best. Refuses instances with more than 16 paths.
Solution brute_force(const PathMatrices& m, const Rational& lambda);

}  // namespace tpi
