#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "tpi/matrices.hpp"
#include "tpi/path_generation.hpp"

namespace tpi::testing {

// ---- 18-element academic network ------------------------------------------
//
// Two substations; customers e1..e6, lines e7..e12, junctions e13..e16,
// transformers e17/e18. Geometry is tuned so the candidate search emits
// exactly ten paths whose matrix blocks match the frozen golden values in
// this file.

Network academic_network();
SearchConfig academic_config();

/// The ten candidate paths in generation order (h1..h10), lengths included.
std::vector<Path> academic_paths();

/// Golden data for the academic fixture.
struct AcademicGolden {
    std::vector<int> row_counts;                 // H_R row sums
    EstimatedPaths p_hat;                        // optimal selection
    TerminalAssociation t_r;                     // optimal assignment
    std::vector<int> cover;                      // P-hat x H_C
    std::vector<int> terminal_column_sums;       // column sums of T_R
    std::vector<std::vector<long long>> lhs;     // broadcast side, |T| x |H|
    std::vector<std::vector<long long>> rhs;     // masked T_R x H_R^T side
    std::vector<std::vector<long long>> t_r_h_r; // unmasked T_R x H_R^T
    int selected_count = 0;
    int assignment_count = 0;
};

AcademicGolden academic_golden();

// ---- 8-element validity example --------------------------------------------
//
// Two customers, three lines, two junctions, one transformer; four assumed
// candidate paths. Configuration (a) puts both used lines on one junction,
// configuration (b) splits them.

PathMatrices appendix_matrices();
EstimatedPaths appendix_selection();
TerminalAssociation appendix_assignment_a();
TerminalAssociation appendix_assignment_b();

// ---- random instances -------------------------------------------------------

/// Random PathMatrices with |H| <= 12, |C| <= 4, |R| <= 5, |T| <= 3.
PathMatrices random_instance(std::mt19937& rng);

/// Random point-geometry network (elements without endpoints) with at most
/// eight remaining elements, plus the search configuration to probe it with.
struct RandomNetwork {
    Network net;
    SearchConfig cfg;
};
RandomNetwork random_point_network(std::mt19937& rng);

/// Every valid simple path for the customer under the configuration,
/// enumerated by depth-first search. Independent of the production search.
std::vector<Path> enumerate_valid_paths(const Network& net, const Element& customer,
                                        const SearchConfig& cfg);

// ---- synthetic radial networks ---------------------------------------------

/// Grid-built radial network with known ground truth: feeders hang off per-
/// feeder junctions, customers sit at line ends, every customer has a unique
/// cheapest route.
struct SyntheticNetwork {
    Network net;
    SearchConfig cfg;
    std::map<ElementId, std::vector<ElementId>, NaturalLess> truth;  // customer -> path
};

SyntheticNetwork synthetic_radial(std::uint32_t seed, int feeders, int max_customers);

/// The same network with one line removed; customers whose truth path used
/// that line are reported.
struct DamagedNetwork {
    Network net;
    std::vector<ElementId> disconnected;
    ElementId removed_line;
};
DamagedNetwork remove_line(const SyntheticNetwork& s, std::size_t which);

}  // namespace tpi::testing
