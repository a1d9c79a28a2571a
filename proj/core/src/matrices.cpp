#include "tpi/matrices.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>

namespace tpi {

namespace {

std::map<ElementId, int, NaturalLess> index_of(const std::vector<ElementId>& ids) {
    std::map<ElementId, int, NaturalLess> out;
    for (int i = 0; i < static_cast<int>(ids.size()); ++i) out.emplace(ids[i], i);
    return out;
}

int lookup(const std::map<ElementId, int, NaturalLess>& index, const ElementId& id) {
    auto it = index.find(id);
    return it == index.end() ? -1 : it->second;
}

PathMatrices assemble(std::vector<Path> paths, std::vector<ElementId> customers,
                      std::vector<ElementId> remaining, std::vector<ElementId> terminals) {
    PathMatrices m;
    m.paths = std::move(paths);
    m.customers = std::move(customers);
    m.remaining = std::move(remaining);
    m.terminals = std::move(terminals);
    auto sort_ids = [](std::vector<ElementId>& v) {
        std::sort(v.begin(), v.end(), natural_less);
    };
    sort_ids(m.customers);
    sort_ids(m.remaining);
    sort_ids(m.terminals);
    m.customer_index = index_of(m.customers);
    m.remaining_index = index_of(m.remaining);
    m.terminal_index = index_of(m.terminals);

    for (std::size_t k = 0; k < m.paths.size(); ++k) {
        const Path& p = m.paths[k];
        if (p.elements.size() < 2)
            throw std::invalid_argument("matrices: path row " + std::to_string(k + 1) + " has fewer than two elements");
        std::set<ElementId, NaturalLess> seen;
        for (const ElementId& id : p.elements)
            if (!seen.insert(id).second)
                throw std::invalid_argument("matrices: path row " + std::to_string(k + 1) + " repeats element '" + id + "'");

        const int c = lookup(m.customer_index, p.customer());
        if (c < 0)
            throw std::invalid_argument("matrices: path row " + std::to_string(k + 1) + " starts at '" + p.customer() +
                                        "' which is not a customer column");
        const int t = lookup(m.terminal_index, p.terminal());
        if (t < 0)
            throw std::invalid_argument("matrices: path row " + std::to_string(k + 1) + " ends at '" + p.terminal() +
                                        "' which is not a terminal column");
        std::vector<int> interior;
        for (std::size_t i = 1; i + 1 < p.elements.size(); ++i) {
            const int r = lookup(m.remaining_index, p.elements[i]);
            if (r < 0)
                throw std::invalid_argument("matrices: path row " + std::to_string(k + 1) + " interior element '" +
                                            p.elements[i] + "' is not a remaining column");
            interior.push_back(r);
        }
        std::sort(interior.begin(), interior.end());
        m.row_customer.push_back(c);
        m.row_terminal.push_back(t);
        m.row_remaining.push_back(std::move(interior));
    }
    return m;
}

}  // namespace

int PathMatrices::customer_column(const ElementId& id) const { return lookup(customer_index, id); }
int PathMatrices::remaining_column(const ElementId& id) const { return lookup(remaining_index, id); }
int PathMatrices::terminal_column(const ElementId& id) const { return lookup(terminal_index, id); }

std::vector<std::vector<int>> PathMatrices::dense_customers() const {
    std::vector<std::vector<int>> d(path_count(), std::vector<int>(customers.size(), 0));
    for (std::size_t k = 0; k < path_count(); ++k) d[k][row_customer[k]] = 1;
    return d;
}

std::vector<std::vector<int>> PathMatrices::dense_remaining() const {
    std::vector<std::vector<int>> d(path_count(), std::vector<int>(remaining.size(), 0));
    for (std::size_t k = 0; k < path_count(); ++k)
        for (int r : row_remaining[k]) d[k][r] = 1;
    return d;
}

std::vector<std::vector<int>> PathMatrices::dense_terminals() const {
    std::vector<std::vector<int>> d(path_count(), std::vector<int>(terminals.size(), 0));
    for (std::size_t k = 0; k < path_count(); ++k) d[k][row_terminal[k]] = 1;
    return d;
}

PathMatrices build_matrices(std::vector<Path> paths, const Network& net) {
    std::vector<ElementId> customers, remaining, terminals;
    for (const Element& e : net.elements()) {
        if (e.type == kCustomer)
            customers.push_back(e.id);
        else if (e.type == kJunction)
            terminals.push_back(e.id);
        else if (e.type != kTransformer)
            remaining.push_back(e.id);
    }
    // structural validity against the network, including the junction label
    for (std::size_t k = 0; k < paths.size(); ++k) {
        const Path& p = paths[k];
        for (const ElementId& id : p.elements) net.at(id);
        if (p.elements.size() >= 2) {
            const Element& c = net.at(p.customer());
            if (c.junction && *c.junction != p.terminal())
                throw std::invalid_argument("matrices: path row " + std::to_string(k + 1) + " ends at '" +
                                            p.terminal() + "' but customer '" + c.id + "' is labelled for '" +
                                            *c.junction + "'");
        }
    }
    return assemble(std::move(paths), std::move(customers), std::move(remaining), std::move(terminals));
}

PathMatrices build_matrices(std::vector<Path> paths, std::vector<ElementId> customers,
                            std::vector<ElementId> remaining, std::vector<ElementId> terminals) {
    return assemble(std::move(paths), std::move(customers), std::move(remaining), std::move(terminals));
}

std::vector<int> row_element_counts(const PathMatrices& m) {
    std::vector<int> counts(m.path_count(), 0);
    for (std::size_t k = 0; k < m.path_count(); ++k)
        counts[k] = static_cast<int>(m.row_remaining[k].size());
    return counts;
}

std::vector<int> customer_cover_counts(const PathMatrices& m, const std::vector<std::uint8_t>& selected) {
    if (selected.size() != m.path_count())
        throw std::invalid_argument("customer_cover_counts: selection size does not match path count");
    std::vector<int> cover(m.customers.size(), 0);
    for (std::size_t k = 0; k < m.path_count(); ++k)
        if (selected[k]) cover[m.row_customer[k]] += 1;
    return cover;
}

void write_csv(const PathMatrices& m, std::ostream& os) {
    os << "path";
    for (const auto& id : m.customers) os << ',' << id;
    for (const auto& id : m.remaining) os << ',' << id;
    for (const auto& id : m.terminals) os << ',' << id;
    os << '\n';
    const auto hc = m.dense_customers();
    const auto hr = m.dense_remaining();
    const auto ht = m.dense_terminals();
    for (std::size_t k = 0; k < m.path_count(); ++k) {
        os << 'h' << (k + 1);
        for (int v : hc[k]) os << ',' << v;
        for (int v : hr[k]) os << ',' << v;
        for (int v : ht[k]) os << ',' << v;
        os << '\n';
    }
}

TerminalAssociation TerminalAssociation::zeros(int terminals, int remaining) {
    TerminalAssociation t;
    t.terminals = terminals;
    t.remaining = remaining;
    t.cells.assign(static_cast<std::size_t>(terminals) * remaining, 0);
    return t;
}

std::vector<int> TerminalAssociation::column_sums() const {
    std::vector<int> sums(remaining, 0);
    for (int t = 0; t < terminals; ++t)
        for (int r = 0; r < remaining; ++r) sums[r] += at(t, r);
    return sums;
}

}  // namespace tpi
