#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tpi/path.hpp"

namespace tpi {

/// Knobs of the candidate search: at most N paths per customer, connection
/// distance D, path length budget L and the weight scaling factor applied to
/// the edges of every completed path.
struct SearchConfig {
    int max_paths = 5;                      // N
    double max_connection_distance = 0.0;   // D
    double max_path_length = 0.0;           // L
    double alpha = 2.0;                     // > 1
    bool allow_customer_junction = false;

    ConnectionConditions conditions() const {
        return ConnectionConditions::defaults(max_connection_distance, allow_customer_junction);
    }
    PathConditions path_conditions() const {
        return PathConditions{max_connection_distance, max_path_length};
    }

    /// Throws std::invalid_argument when a bound is out of range.
    void validate() const;
};

struct MissingLabelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GenerationFailure {
    ElementId customer;
    std::string message;
    bool missing_label = false;
};

struct GenerationResult {
    std::vector<Path> paths;
    std::vector<GenerationFailure> failures;
};

/// Candidate paths for one customer, in discovery order of the tree search.
///
/// The search expands the cheapest partial path first, where the cost of a
/// partial path is the sum of its edge weights plus the distance from its
/// last element to the customer's terminal junction. Edge weights start at
/// the element distances; whenever a path completes, the weights of its
/// edges are multiplied by alpha so that later completions prefer unexplored
/// elements. A branch dies on a dead end or when its accumulated length
/// exceeds L. The search stops after N paths or when the frontier drains,
/// so for large N it enumerates every valid simple path.
///
/// Throws MissingLabelError when the customer carries no junction label.
std::vector<Path> customer_paths(const Network& net, const Element& customer,
                                 const SearchConfig& cfg);

/// customer_paths over every customer in id order; per-customer failures are
/// collected instead of aborting the batch.
GenerationResult generate_candidates(const Network& net, const SearchConfig& cfg);

}  // namespace tpi
