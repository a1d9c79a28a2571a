#include "tpi/path.hpp"

#include <set>
#include <sstream>

namespace tpi {

std::string to_string(PathRule rule) {
    switch (rule) {
        case PathRule::none: return "none";
        case PathRule::structure: return "structure";
        case PathRule::endpoint_types: return "endpoint-types";
        case PathRule::repeated_element: return "repeat-violation";
        case PathRule::gap_limit: return "gap-exceeds-limit";
        case PathRule::length_limit: return "length-exceeds-limit";
        case PathRule::terminal_label: return "wrong-terminal";
    }
    return "unknown";
}

namespace {

PathVerdict fail(PathRule rule, std::string detail) {
    return PathVerdict{false, rule, std::move(detail)};
}

}  // namespace

PathVerdict validate_path(const Path& p, const Network& net, const PathConditions& cond) {
    if (p.elements.size() < 2) return fail(PathRule::structure, "a path needs a customer and a terminal");

    std::vector<const Element*> seq;
    seq.reserve(p.elements.size());
    for (const ElementId& id : p.elements) seq.push_back(&net.at(id));

    if (seq.front()->type != kCustomer)
        return fail(PathRule::endpoint_types, "first element '" + seq.front()->id + "' is not a customer");
    if (seq.back()->type != kJunction)
        return fail(PathRule::endpoint_types, "last element '" + seq.back()->id + "' is not a junction");
    for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
        const ElementType& t = seq[i]->type;
        if (t == kCustomer || t == kJunction || t == kTransformer)
            return fail(PathRule::endpoint_types,
                        "interior element '" + seq[i]->id + "' has type '" + t.name + "'");
    }

    std::set<ElementId, NaturalLess> seen;
    for (const Element* e : seq) {
        if (!seen.insert(e->id).second)
            return fail(PathRule::repeated_element, "element '" + e->id + "' appears twice");
    }

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        const double d = dist(*seq[i], *seq[i + 1]);
        if (d > cond.max_connection_distance) {
            std::ostringstream os;
            os << "gap " << seq[i]->id << " -> " << seq[i + 1]->id << " is " << d
               << " m, above the connection limit " << cond.max_connection_distance;
            return fail(PathRule::gap_limit, os.str());
        }
        total += d;
    }
    if (total > cond.max_path_length) {
        std::ostringstream os;
        os << "path length " << total << " m is above the limit " << cond.max_path_length;
        return fail(PathRule::length_limit, os.str());
    }

    const Element* customer = seq.front();
    if (!customer->junction || *customer->junction != seq.back()->id)
        return fail(PathRule::terminal_label,
                    "path ends at '" + seq.back()->id + "' but customer '" + customer->id +
                        "' is labelled for '" + (customer->junction ? *customer->junction : "<none>") + "'");

    return PathVerdict{true, PathRule::none, ""};
}

PathCount hypothetical_count(unsigned nC, unsigned nR, unsigned nT) {
    // sum of permutations P(nR, k) for k = 1..nR, built incrementally:
    // P(n, k) = P(n, k-1) * (n - k + 1)
    PathCount sum = 0;
    PathCount perm = 1;
    for (unsigned k = 1; k <= nR; ++k) {
        perm *= nR - k + 1;
        sum += perm;
    }
    return PathCount(nC) * sum * PathCount(nT);
}

}  // namespace tpi
