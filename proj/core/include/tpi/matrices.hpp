#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "tpi/path.hpp"

namespace tpi {

/// The candidate path set as binary matrix blocks. Rows follow the input
/// path order, columns are natural-id-sorted. Storage is sparse (per-row
/// column indices); the dense accessors exist for tests and debugging.
struct PathMatrices {
    std::vector<Path> paths;
    std::vector<ElementId> customers;   // H_C columns
    std::vector<ElementId> remaining;   // H_R columns
    std::vector<ElementId> terminals;   // H_T columns

    std::vector<int> row_customer;                // H_C: the single 1 per row
    std::vector<int> row_terminal;                // H_T: the single 1 per row
    std::vector<std::vector<int>> row_remaining;  // H_R: sorted column indices

    std::size_t path_count() const { return paths.size(); }

    int customer_column(const ElementId& id) const;
    int remaining_column(const ElementId& id) const;
    int terminal_column(const ElementId& id) const;

    std::vector<std::vector<int>> dense_customers() const;
    std::vector<std::vector<int>> dense_remaining() const;
    std::vector<std::vector<int>> dense_terminals() const;

    std::map<ElementId, int, NaturalLess> customer_index, remaining_index, terminal_index;
};

/// Builds the blocks from paths that are valid against the network. Columns
/// are derived from the network: customers, remaining elements (everything
/// but customers, junctions and transformers) and junctions. Transformers
/// never appear as columns. Throws std::invalid_argument on structural
/// violations (wrong endpoint types, repeats, terminal not matching the
/// customer's junction label).
PathMatrices build_matrices(std::vector<Path> paths, const Network& net);

/// Same construction with explicit column id lists, for analysing path sets
/// detached from a concrete network (membership and repeat checks only).
PathMatrices build_matrices(std::vector<Path> paths, std::vector<ElementId> customers,
                            std::vector<ElementId> remaining, std::vector<ElementId> terminals);

/// Per-path interior element counts: the row sums of H_R.
std::vector<int> row_element_counts(const PathMatrices& m);

/// P-hat x H_C: how many selected paths cover each customer.
std::vector<int> customer_cover_counts(const PathMatrices& m, const std::vector<std::uint8_t>& selected);

/// Dense dump, one row per path, header = element ids (customer, remaining
/// and terminal columns in order).
void write_csv(const PathMatrices& m, std::ostream& os);

/// Binary |T| x |R| assignment of remaining elements to terminals.
struct TerminalAssociation {
    int terminals = 0;
    int remaining = 0;
    std::vector<std::uint8_t> cells;  // row-major

    static TerminalAssociation zeros(int terminals, int remaining);

    std::uint8_t& at(int t, int r) { return cells[static_cast<std::size_t>(t) * remaining + r]; }
    std::uint8_t at(int t, int r) const { return cells[static_cast<std::size_t>(t) * remaining + r]; }

    /// Column sums; every column of a well-formed association sums to at most 1.
    std::vector<int> column_sums() const;

    friend bool operator==(const TerminalAssociation&, const TerminalAssociation&) = default;
};

/// Binary path selection vector over the rows of a PathMatrices.
struct EstimatedPaths {
    std::vector<std::uint8_t> selected;

    friend bool operator==(const EstimatedPaths&, const EstimatedPaths&) = default;
};

}  // namespace tpi
