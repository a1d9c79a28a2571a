#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "tpi/network.hpp"

namespace tpi {

/// An ordered element sequence from a customer to a feeder terminal
/// junction. Interior elements are remaining elements (neither customers,
/// junctions nor transformers). length is the sum of consecutive dist()
/// values along the sequence.
struct Path {
    std::vector<ElementId> elements;
    double length = 0.0;

    const ElementId& customer() const { return elements.front(); }
    const ElementId& terminal() const { return elements.back(); }

    friend bool operator==(const Path& a, const Path& b) { return a.elements == b.elements; }
};

struct PathConditions {
    double max_connection_distance = 0.0;  // D
    double max_path_length = 0.0;          // L
};

enum class PathRule {
    none,
    structure,          // fewer than two elements
    endpoint_types,     // first not a customer / last not a junction / interior not remaining
    repeated_element,   // radial networks: an element may appear once per path
    gap_limit,          // a consecutive pair further apart than D
    length_limit,       // total length above L
    terminal_label,     // last element differs from the customer's junction attribute
};

std::string to_string(PathRule rule);

struct PathVerdict {
    bool valid = false;
    PathRule violated = PathRule::none;
    std::string detail;
};

/// Checks the path against the conditions; the verdict names the first
/// violated rule in the order: endpoint types, repeats, per-gap distance,
/// total length, terminal label. Unknown ids throw std::out_of_range.
PathVerdict validate_path(const Path& p, const Network& net, const PathConditions& cond);

using PathCount = boost::multiprecision::cpp_int;

/// Number of hypothetical paths over nC customers, nR remaining elements and
/// nT terminals: nC * sum_{k=1..nR} nR!/(nR-k)! * nT. Grows factorially, so
/// the result is an arbitrary-precision integer. Paths with an empty
/// interior are not counted (the sum starts at k = 1).
PathCount hypothetical_count(unsigned nC, unsigned nR, unsigned nT);

}  // namespace tpi
