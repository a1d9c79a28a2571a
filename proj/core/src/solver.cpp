#include "tpi/solver.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace tpi {

std::string to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::optimal: return "optimal";
        case SolveStatus::infeasible_model: return "infeasible-model";
        case SolveStatus::aborted: return "aborted";
    }
    return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Search {
    const IlpProblem& p;
    const SolveLimits& limits;
    Clock::time_point started;

    std::vector<std::uint8_t> selected;
    std::vector<int> assigned;        // remaining element -> terminal index or -1
    std::vector<std::uint8_t> used_customer;
    int selected_count = 0;
    int assignment_count = 0;

    bool have_incumbent = false;
    Rational best_objective{0};
    std::vector<std::uint8_t> best_selected;
    std::vector<int> best_assigned;
    int best_selected_count = 0;
    int best_assignment_count = 0;

    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    explicit Search(const IlpProblem& problem, const SolveLimits& lim)
        : p(problem), limits(lim), started(Clock::now()) {
        selected.assign(p.num_paths, 0);
        assigned.assign(p.num_remaining, -1);
        used_customer.assign(p.num_customers, 0);
    }

    bool budget_exceeded() {
        if (out_of_budget) return true;
        if (nodes > limits.max_nodes) {
            out_of_budget = true;
        } else if ((nodes & 1023) == 0 &&
                   std::chrono::duration<double>(Clock::now() - started).count() > limits.max_seconds) {
            out_of_budget = true;
        }
        return out_of_budget;
    }

    Rational objective() const {
        return Rational(selected_count) - p.lambda * Rational(assignment_count);
    }

    // Customers that could still gain a path from row k onwards.
    int coverable_from(int k) const {
        std::vector<std::uint8_t> seen(p.num_customers, 0);
        int extra = 0;
        for (int h = k; h < p.num_paths; ++h) {
            const int c = p.row_customer[h];
            if (!used_customer[c] && !seen[c]) {
                seen[c] = 1;
                ++extra;
            }
        }
        return extra;
    }

    void record_leaf() {
        const Rational obj = objective();
        if (!have_incumbent || obj > best_objective) {
            have_incumbent = true;
            best_objective = obj;
            best_selected = selected;
            best_assigned = assigned;
            best_selected_count = selected_count;
            best_assignment_count = assignment_count;
        }
    }

    void dfs(int k) {
        ++nodes;
        if (budget_exceeded()) return;

        // optimistic bound: every still-coverable customer gains a path for free
        const Rational bound = Rational(selected_count + coverable_from(k)) -
                               p.lambda * Rational(assignment_count);
        if (have_incumbent && bound <= best_objective) return;

        if (k == p.num_paths) {
            record_leaf();
            return;
        }

        // try P_k = 1 first so the first optimum found has the
        // lexicographically greatest selection vector
        const int customer = p.row_customer[k];
        const int terminal = p.row_terminal[k];
        if (!used_customer[customer]) {
            bool compatible = true;
            for (int r : p.row_remaining[k]) {
                if (assigned[r] != -1 && assigned[r] != terminal) {
                    compatible = false;
                    break;
                }
            }
            if (compatible) {
                std::vector<int> newly;
                for (int r : p.row_remaining[k]) {
                    if (assigned[r] == -1) {
                        assigned[r] = terminal;
                        newly.push_back(r);
                    }
                }
                selected[k] = 1;
                used_customer[customer] = 1;
                ++selected_count;
                assignment_count += static_cast<int>(newly.size());

                dfs(k + 1);

                assignment_count -= static_cast<int>(newly.size());
                --selected_count;
                used_customer[customer] = 0;
                selected[k] = 0;
                for (int r : newly) assigned[r] = -1;
                if (out_of_budget) return;
            }
        }

        dfs(k + 1);
    }
};

Solution pack(const IlpProblem& p, const Search& s) {
    Solution sol;
    sol.p_hat.selected = s.have_incumbent ? s.best_selected : std::vector<std::uint8_t>(p.num_paths, 0);
    sol.t_r = TerminalAssociation::zeros(p.num_terminals, p.num_remaining);
    if (s.have_incumbent) {
        for (int r = 0; r < p.num_remaining; ++r)
            if (s.best_assigned[r] != -1) sol.t_r.at(s.best_assigned[r], r) = 1;
        sol.objective = s.best_objective;
        sol.selected_count = s.best_selected_count;
        sol.assignment_count = s.best_assignment_count;
    }
    sol.stats.nodes = s.nodes;
    return sol;
}

}  // namespace

Solution solve(const IlpProblem& problem, const SolveLimits& limits) {
    const auto start = Clock::now();
    Search search(problem, limits);
    search.dfs(0);
    Solution sol = pack(problem, search);
    sol.status = search.out_of_budget ? SolveStatus::aborted : SolveStatus::optimal;
    sol.stats.milliseconds = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return sol;
}

Solution brute_force(const PathMatrices& m, const Rational& lambda) {
    const int n = static_cast<int>(m.path_count());
    if (n > 16) throw std::invalid_argument("brute_force: refusing instances with more than 16 paths");
    if (lambda < Rational(0)) throw std::invalid_argument("brute_force: lambda must be non-negative");

    const int num_terminals = static_cast<int>(m.terminals.size());
    const int num_remaining = static_cast<int>(m.remaining.size());
    const int num_customers = static_cast<int>(m.customers.size());

    const auto start = Clock::now();

    bool have_best = false;
    Rational best_objective{0};
    std::uint32_t best_mask = 0;
    std::vector<int> best_assigned;

    std::vector<int> assigned(num_remaining, -1);
    std::vector<int> cover(num_customers, 0);

    const std::uint32_t total = n >= 31 ? 0 : (1u << n);
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        std::fill(assigned.begin(), assigned.end(), -1);
        std::fill(cover.begin(), cover.end(), 0);
        bool ok = true;
        int selected_count = 0, assignment_count = 0;
        for (int k = 0; k < n && ok; ++k) {
            if (!(mask & (1u << k))) continue;
            ++selected_count;
            if (++cover[m.row_customer[k]] > 1) {
                ok = false;
                break;
            }
            const int t = m.row_terminal[k];
            for (int r : m.row_remaining[k]) {
                if (assigned[r] == -1) {
                    assigned[r] = t;
                    ++assignment_count;
                } else if (assigned[r] != t) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        const Rational obj = Rational(selected_count) - lambda * Rational(assignment_count);
        // ties resolved towards the lexicographically greatest selection
        bool better = !have_best || obj > best_objective;
        if (!better && have_best && obj == best_objective) {
            for (int k = 0; k < n; ++k) {
                const bool a = (mask >> k) & 1u, b = (best_mask >> k) & 1u;
                if (a != b) {
                    better = a;
                    break;
                }
            }
        }
        if (better) {
            have_best = true;
            best_objective = obj;
            best_mask = mask;
            best_assigned = assigned;
        }
    }

    Solution sol;
    sol.p_hat.selected.assign(n, 0);
    sol.t_r = TerminalAssociation::zeros(num_terminals, num_remaining);
    if (have_best) {
        for (int k = 0; k < n; ++k) sol.p_hat.selected[k] = (best_mask >> k) & 1u;
        for (int r = 0; r < num_remaining; ++r)
            if (best_assigned[r] != -1) sol.t_r.at(best_assigned[r], r) = 1;
        sol.objective = best_objective;
        for (auto v : sol.p_hat.selected) sol.selected_count += v;
        for (auto v : sol.t_r.cells) sol.assignment_count += v;
    }
    sol.status = SolveStatus::optimal;
    sol.stats.milliseconds = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return sol;
}

}  // namespace tpi
