#include "tpi/ilp.hpp"

#include <sstream>
#include <stdexcept>

namespace tpi {

double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

std::string to_string(ConstraintFamily family) {
    switch (family) {
        case ConstraintFamily::validity: return "validity";
        case ConstraintFamily::unique_path: return "unique-path";
        case ConstraintFamily::unique_terminal: return "unique-terminal";
    }
    return "unknown";
}

Rational IlpProblem::objective_coefficient(int var) const {
    if (var < num_paths) return Rational(1);
    return -lambda;
}

IlpProblem build_problem(const PathMatrices& m, const Rational& lambda) {
    if (lambda < Rational(0)) throw std::invalid_argument("build_problem: lambda must be non-negative");

    IlpProblem p;
    p.num_paths = static_cast<int>(m.path_count());
    p.num_terminals = static_cast<int>(m.terminals.size());
    p.num_remaining = static_cast<int>(m.remaining.size());
    p.num_customers = static_cast<int>(m.customers.size());
    p.lambda = lambda;
    p.row_customer = m.row_customer;
    p.row_terminal = m.row_terminal;
    p.row_remaining = m.row_remaining;
    p.customers = m.customers;
    p.remaining = m.remaining;
    p.terminals = m.terminals;

    const auto counts = row_element_counts(m);

    // validity family, terminal-major: count(h)*H_T(h,t)*P_h - sum_r H_T(h,t)*A_{t,r} <= 0
    for (int t = 0; t < p.num_terminals; ++t) {
        for (int h = 0; h < p.num_paths; ++h) {
            Constraint c;
            c.family = ConstraintFamily::validity;
            c.terminal = t;
            c.path = h;
            if (m.row_terminal[h] == t) {
                if (counts[h] > 0) c.terms.emplace_back(h, counts[h]);
                for (int r : m.row_remaining[h]) c.terms.emplace_back(p.assoc_var(t, r), -1);
            }
            c.rhs = 0;
            c.trivial = c.terms.empty();
            p.constraints.push_back(std::move(c));
        }
    }

    // one estimated path per customer
    for (int cu = 0; cu < p.num_customers; ++cu) {
        Constraint c;
        c.family = ConstraintFamily::unique_path;
        c.customer = cu;
        for (int h = 0; h < p.num_paths; ++h)
            if (m.row_customer[h] == cu) c.terms.emplace_back(h, 1);
        c.rhs = 1;
        c.trivial = c.terms.empty();
        p.constraints.push_back(std::move(c));
    }

    // each remaining element on at most one terminal
    for (int r = 0; r < p.num_remaining; ++r) {
        Constraint c;
        c.family = ConstraintFamily::unique_terminal;
        c.remaining = r;
        for (int t = 0; t < p.num_terminals; ++t) c.terms.emplace_back(p.assoc_var(t, r), 1);
        c.rhs = 1;
        c.trivial = c.terms.empty();
        p.constraints.push_back(std::move(c));
    }

    return p;
}

namespace {

long long value_of(const IlpProblem& p, const EstimatedPaths& p_hat, const TerminalAssociation& t_r,
                   int var) {
    if (var < p.num_paths) return p_hat.selected[var];
    const int a = var - p.num_paths;
    return t_r.cells[a];
}

}  // namespace

Evaluation evaluate(const IlpProblem& problem, const EstimatedPaths& p_hat,
                    const TerminalAssociation& t_r) {
    if (static_cast<int>(p_hat.selected.size()) != problem.num_paths)
        throw std::invalid_argument("evaluate: P-hat size does not match the problem");
    if (t_r.terminals != problem.num_terminals || t_r.remaining != problem.num_remaining)
        throw std::invalid_argument("evaluate: T_R dimensions do not match the problem");

    Evaluation ev;
    long long selected = 0, assigned = 0;
    for (auto v : p_hat.selected) selected += v;
    for (auto v : t_r.cells) assigned += v;
    ev.objective = Rational(selected) - problem.lambda * Rational(assigned);

    for (std::size_t i = 0; i < problem.constraints.size(); ++i) {
        const Constraint& c = problem.constraints[i];
        long long lhs = 0;
        for (const auto& [var, coef] : c.terms) lhs += coef * value_of(problem, p_hat, t_r, var);
        if (lhs <= c.rhs) continue;

        Violation v;
        v.family = c.family;
        v.constraint_index = static_cast<int>(i);
        v.terminal = c.terminal;
        v.path = c.path;
        v.customer = c.customer;
        v.remaining = c.remaining;
        v.lhs = lhs;
        v.rhs = c.rhs;
        std::ostringstream os;
        switch (c.family) {
            case ConstraintFamily::validity: {
                // name the interior elements that sit on other terminals
                os << "path h" << (c.path + 1) << ": interior elements not assigned to terminal '"
                   << problem.terminals[c.terminal] << "':";
                for (int r : problem.row_remaining[c.path])
                    if (!t_r.at(c.terminal, r)) os << ' ' << problem.remaining[r];
                break;
            }
            case ConstraintFamily::unique_path:
                os << "customer '" << problem.customers[c.customer] << "' has " << lhs << " selected paths";
                break;
            case ConstraintFamily::unique_terminal:
                os << "element '" << problem.remaining[c.remaining] << "' is assigned to " << lhs
                   << " terminals";
                break;
        }
        v.detail = os.str();
        ev.violations.push_back(std::move(v));
    }
    ev.feasible = ev.violations.empty();
    return ev;
}

std::pair<IntMatrix, IntMatrix> constraint1_intermediates(const PathMatrices& m,
                                                          const EstimatedPaths& p_hat,
                                                          const TerminalAssociation& t_r) {
    const int nH = static_cast<int>(m.path_count());
    const int nT = static_cast<int>(m.terminals.size());
    const int nR = static_cast<int>(m.remaining.size());
    if (static_cast<int>(p_hat.selected.size()) != nH)
        throw std::invalid_argument("constraint1_intermediates: P-hat size mismatch");
    if (t_r.terminals != nT || t_r.remaining != nR)
        throw std::invalid_argument("constraint1_intermediates: T_R dimension mismatch");

    const auto counts = row_element_counts(m);

    // L(i):   row counts of H_R                          (|H| x 1)
    // L(ii):  elementwise product with P-hat             (|H| x 1)
    // L(iii): broadcast against H_T, shown transposed    (|T| x |H|)
    IntMatrix lhs(nT, std::vector<long long>(nH, 0));
    for (int h = 0; h < nH; ++h)
        if (p_hat.selected[h]) lhs[m.row_terminal[h]][h] = counts[h];

    // R(i):  T_R x H_R^T                                 (|T| x |H|)
    // R(ii): masked elementwise by H_T^T                 (|T| x |H|)
    IntMatrix rhs(nT, std::vector<long long>(nH, 0));
    for (int h = 0; h < nH; ++h) {
        const int t = m.row_terminal[h];
        long long sum = 0;
        for (int r : m.row_remaining[h]) sum += t_r.at(t, r);
        rhs[t][h] = sum;
    }

    return {std::move(lhs), std::move(rhs)};
}

}  // namespace tpi
