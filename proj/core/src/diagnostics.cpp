#include "tpi/diagnostics.hpp"

#include <algorithm>
#include <map>

namespace tpi {

std::string to_string(IssueKind kind) {
    switch (kind) {
        case IssueKind::customer_without_path: return "customer-without-path";
        case IssueKind::element_unassigned: return "element-unassigned";
        case IssueKind::missing_junction_label: return "missing-junction-label";
        case IssueKind::generation_failure: return "generation-failure";
    }
    return "unknown";
}

namespace {

std::optional<ElementId> suggest_junction(const Element& customer,
                                          const std::vector<const Element*>& covered, int k_nearest) {
    if (covered.empty() || k_nearest < 1) return std::nullopt;

    std::vector<std::pair<double, const Element*>> by_distance;
    by_distance.reserve(covered.size());
    for (const Element* c : covered) by_distance.emplace_back(dist(customer, *c), c);
    std::sort(by_distance.begin(), by_distance.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return natural_less(a.second->id, b.second->id);
    });
    if (static_cast<int>(by_distance.size()) > k_nearest) by_distance.resize(k_nearest);

    std::map<ElementId, int, NaturalLess> votes;
    for (const auto& [d, c] : by_distance)
        if (c->junction) votes[*c->junction] += 1;
    if (votes.empty()) return std::nullopt;
    const ElementId* best = nullptr;
    int best_count = 0;
    for (const auto& [junction, count] : votes) {
        if (count > best_count) {  // ties go to the naturally smaller id
            best = &junction;
            best_count = count;
        }
    }
    return *best;
}

}  // namespace

DiagnosticReport diagnose(const Solution& sol, const PathMatrices& m, const Network& net,
                          int k_nearest, const std::vector<GenerationFailure>& failures) {
    DiagnosticReport report;

    const auto cover = customer_cover_counts(m, sol.p_hat.selected);

    std::vector<const Element*> covered;
    for (std::size_t c = 0; c < m.customers.size(); ++c)
        if (cover[c] > 0) covered.push_back(&net.at(m.customers[c]));

    std::map<ElementId, const GenerationFailure*, NaturalLess> failed;
    for (const GenerationFailure& f : failures) failed.emplace(f.customer, &f);

    // customers first, in id order
    for (const Element& customer : subset(net, kCustomer)) {
        const int col = m.customer_column(customer.id);
        const bool has_path = col >= 0 && cover[col] > 0;
        if (has_path) continue;
        auto it = failed.find(customer.id);
        if (it != failed.end()) {
            report.issues.push_back({it->second->missing_label ? IssueKind::missing_junction_label
                                                               : IssueKind::generation_failure,
                                     customer.id, it->second->message, std::nullopt});
        }
        DiagnosticIssue issue;
        issue.kind = IssueKind::customer_without_path;
        issue.subject = customer.id;
        issue.detail = "no estimated path connects customer '" + customer.id + "' to its terminal";
        issue.suggestion = suggest_junction(customer, covered, k_nearest);
        if (issue.suggestion)
            issue.detail += "; nearest covered customers point to '" + *issue.suggestion + "'";
        report.issues.push_back(std::move(issue));
    }

    // remaining elements no terminal claims
    const auto column_sums = sol.t_r.column_sums();
    for (std::size_t r = 0; r < m.remaining.size(); ++r) {
        if (column_sums[r] > 0) continue;
        report.issues.push_back({IssueKind::element_unassigned, m.remaining[r],
                                 "element '" + m.remaining[r] +
                                     "' is not used by any selected path and has no terminal assignment",
                                 std::nullopt});
    }

    return report;
}

nlohmann::json to_json(const DiagnosticReport& report) {
    nlohmann::json issues = nlohmann::json::array();
    for (const DiagnosticIssue& issue : report.issues) {
        nlohmann::json j{
            {"kind", to_string(issue.kind)},
            {"subject", issue.subject},
            {"detail", issue.detail},
        };
        if (issue.suggestion) j["suggestion"] = *issue.suggestion;
        issues.push_back(std::move(j));
    }
    return nlohmann::json{{"issues", std::move(issues)}};
}

}  // namespace tpi
