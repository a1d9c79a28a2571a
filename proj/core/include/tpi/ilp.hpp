#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tpi/matrices.hpp"

namespace tpi {

/// Exact scalar for the assignment penalty and objective values. Keeping the
/// objective rational lets tests and the solver compare candidate solutions
/// without floating point noise.
using Rational = boost::rational<long long>;

double to_double(const Rational& r);

enum class ConstraintFamily { validity, unique_path, unique_terminal };

std::string to_string(ConstraintFamily family);

/// One linear inequality sum(coefficient * var) <= rhs over the binary
/// variables. Path variables come first (index k for path row k), then the
/// association variables in terminal-major order.
struct Constraint {
    ConstraintFamily family;
    int terminal = -1;   // validity rows
    int path = -1;       // validity rows
    int customer = -1;   // unique-path rows
    int remaining = -1;  // unique-terminal rows
    std::vector<std::pair<int, long long>> terms;
    long long rhs = 0;
    bool trivial = false;  // all-zero row kept for index stability
};

struct IlpProblem {
    int num_paths = 0;
    int num_terminals = 0;
    int num_remaining = 0;
    int num_customers = 0;
    Rational lambda{0};

    std::vector<Constraint> constraints;

    // Row structure carried over from the matrices; the solver propagates
    // assignments along it and the exporters use the ids for naming.
    std::vector<int> row_customer;
    std::vector<int> row_terminal;
    std::vector<std::vector<int>> row_remaining;
    std::vector<ElementId> customers, remaining, terminals;

    int num_assoc_vars() const { return num_terminals * num_remaining; }
    int num_vars() const { return num_paths + num_assoc_vars(); }
    int assoc_var(int t, int r) const { return num_paths + t * num_remaining + r; }

    /// Objective coefficient of a variable: 1 for paths, -lambda for associations.
    Rational objective_coefficient(int var) const;
};

/// Assembles the maximisation problem from the matrix blocks:
///   maximise  sum P_k - lambda * sum A_{t,r}
///   validity: count(h) * H_T(h,t) * P_h <= sum_r H_R(h,r) * H_T(h,t) * A_{t,r}
///   unique path per customer, unique terminal per remaining element.
/// Throws std::invalid_argument for a negative lambda.
IlpProblem build_problem(const PathMatrices& m, const Rational& lambda);

struct Violation {
    ConstraintFamily family;
    int constraint_index = -1;
    int terminal = -1, path = -1, customer = -1, remaining = -1;
    long long lhs = 0, rhs = 0;
    std::string detail;
};

struct Evaluation {
    bool feasible = false;
    Rational objective{0};
    std::vector<Violation> violations;
};

/// Checks every constraint row against the proposed assignment and computes
/// the objective regardless of feasibility.
Evaluation evaluate(const IlpProblem& problem, const EstimatedPaths& p_hat,
                    const TerminalAssociation& t_r);

using IntMatrix = std::vector<std::vector<long long>>;

/// The two |T| x |H| sides of the validity constraint, built the published
/// way: LHS = broadcast of (row counts * P-hat) over H_T transposed, RHS =
/// (T_R x H_R-transposed) masked by H_T. The validity verdict of evaluate()
/// equals elementwise LHS <= RHS.
std::pair<IntMatrix, IntMatrix> constraint1_intermediates(const PathMatrices& m,
                                                          const EstimatedPaths& p_hat,
                                                          const TerminalAssociation& t_r);

}  // namespace tpi
