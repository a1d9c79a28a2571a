#include "fixtures.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tpi::testing {

namespace {

Element point(ElementId id, ElementType type, double x, double y) {
    Element e;
    e.id = std::move(id);
    e.type = std::move(type);
    e.coor = {x, y};
    return e;
}

Element customer(ElementId id, double x, double y, ElementId junction) {
    Element e = point(std::move(id), kCustomer, x, y);
    e.junction = std::move(junction);
    return e;
}

Element line(ElementId id, double x1, double y1, double x2, double y2) {
    Element e;
    e.id = std::move(id);
    e.type = kLine;
    e.endpoints = {Coord{x1, y1}, Coord{x2, y2}};
    e.coor = {(x1 + x2) / 2.0, (y1 + y2) / 2.0};
    return e;
}

Path make_path(const Network& net, std::vector<ElementId> ids) {
    Path p;
    p.elements = std::move(ids);
    for (std::size_t i = 0; i + 1 < p.elements.size(); ++i)
        p.length += dist(net.at(p.elements[i]), net.at(p.elements[i + 1]));
    return p;
}

}  // namespace

Network academic_network() {
    std::vector<Element> elements;
    elements.push_back(customer("e1", 2.5, 2.5, "e14"));
    elements.push_back(customer("e2", 14.6, 1.8, "e16"));
    elements.push_back(customer("e3", 19.0, 3.0, "e14"));
    elements.push_back(customer("e4", 32.0, 14.5, "e15"));
    elements.push_back(customer("e5", 33.0, 3.0, "e13"));
    elements.push_back(customer("e6", -1.0, 8.0, "e13"));
    elements.push_back(line("e7", 12.0, 0.0, 19.0, 0.0));
    elements.push_back(line("e8", 3.0, 0.0, 10.0, 0.0));
    elements.push_back(line("e9", 38.0, 9.0, 34.0, 13.0));
    elements.push_back(line("e10", 8.6375, -4.602, 31.0, -4.2));
    elements.push_back(line("e11", 2.0, 9.0, 19.5, -7.5));
    elements.push_back(line("e12", 17.8, -3.9, 31.0, 0.5));
    elements.push_back(point("e13", kJunction, 0.0, 12.0));
    elements.push_back(point("e14", kJunction, 0.0, 0.0));
    elements.push_back(point("e15", kJunction, 41.0, 9.0));
    elements.push_back(point("e16", kJunction, 34.6274, -3.897));
    elements.push_back(point("e17", kTransformer, -3.0, 6.0));
    elements.push_back(point("e18", kTransformer, 40.0, 2.5));

    std::map<ElementId, ElementId, NaturalLess> j2t{
        {"e13", "e17"}, {"e14", "e17"}, {"e15", "e18"}, {"e16", "e18"}};
    return Network(std::move(elements), std::move(j2t));
}

SearchConfig academic_config() {
    SearchConfig cfg;
    cfg.max_paths = 10;
    cfg.max_connection_distance = 6.0;
    cfg.max_path_length = 15.9;
    cfg.alpha = 2.0;
    return cfg;
}

std::vector<Path> academic_paths() {
    const Network net = academic_network();
    const std::vector<std::vector<ElementId>> ids = {
        {"e1", "e8", "e14"},
        {"e2", "e7", "e10", "e16"},
        {"e2", "e7", "e12", "e16"},
        {"e2", "e8", "e10", "e16"},
        {"e2", "e7", "e8", "e10", "e16"},
        {"e2", "e7", "e12", "e10", "e16"},
        {"e3", "e7", "e8", "e14"},
        {"e4", "e9", "e15"},
        {"e5", "e12", "e11", "e13"},
        {"e6", "e11", "e13"},
    };
    std::vector<Path> paths;
    for (const auto& seq : ids) paths.push_back(make_path(net, seq));
    return paths;
}

AcademicGolden academic_golden() {
    AcademicGolden g;
    g.row_counts = {1, 2, 2, 2, 3, 3, 2, 1, 2, 1};
    g.p_hat.selected = {1, 0, 0, 0, 0, 0, 1, 1, 1, 1};

    // terminals e13..e16 x remaining e7..e12
    g.t_r = TerminalAssociation::zeros(4, 6);
    g.t_r.at(0, 4) = 1;  // e11 -> e13
    g.t_r.at(0, 5) = 1;  // e12 -> e13
    g.t_r.at(1, 0) = 1;  // e7  -> e14
    g.t_r.at(1, 1) = 1;  // e8  -> e14
    g.t_r.at(2, 2) = 1;  // e9  -> e15

    g.cover = {1, 0, 1, 1, 1, 1};
    g.terminal_column_sums = {1, 1, 1, 0, 1, 1};

    g.lhs = {
        {0, 0, 0, 0, 0, 0, 0, 0, 2, 1},
        {1, 0, 0, 0, 0, 0, 2, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    };
    g.rhs = g.lhs;

    g.t_r_h_r = {
        {0, 0, 1, 0, 0, 1, 0, 0, 2, 1},
        {1, 1, 1, 1, 2, 1, 2, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    };

    g.selected_count = 5;
    g.assignment_count = 5;
    return g;
}

PathMatrices appendix_matrices() {
    std::vector<Path> paths;
    for (const auto& seq : std::vector<std::vector<ElementId>>{
             {"e1", "e3", "e4", "e6"},
             {"e1", "e3", "e4", "e7"},
             {"e2", "e3", "e6"},
             {"e2", "e5", "e7"},
         }) {
        Path p;
        p.elements = seq;
        paths.push_back(std::move(p));
    }
    return build_matrices(std::move(paths), {"e1", "e2"}, {"e3", "e4", "e5"}, {"e6", "e7"});
}

EstimatedPaths appendix_selection() { return EstimatedPaths{{1, 0, 1, 0}}; }

TerminalAssociation appendix_assignment_a() {
    auto t = TerminalAssociation::zeros(2, 3);
    t.at(0, 0) = 1;  // e3 -> e6
    t.at(0, 1) = 1;  // e4 -> e6
    return t;
}

TerminalAssociation appendix_assignment_b() {
    auto t = TerminalAssociation::zeros(2, 3);
    t.at(0, 1) = 1;  // e4 -> e6
    t.at(1, 0) = 1;  // e3 -> e7
    return t;
}

PathMatrices random_instance(std::mt19937& rng) {
    auto pick = [&rng](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };

    const int n_customers = pick(1, 4);
    const int n_remaining = pick(0, 5);
    const int n_terminals = pick(1, 3);
    const int n_paths = pick(1, 12);

    std::vector<ElementId> customers, remaining, terminals;
    for (int i = 0; i < n_customers; ++i) customers.push_back("c" + std::to_string(i + 1));
    for (int i = 0; i < n_remaining; ++i) remaining.push_back("r" + std::to_string(i + 1));
    for (int i = 0; i < n_terminals; ++i) terminals.push_back("t" + std::to_string(i + 1));

    std::vector<Path> paths;
    for (int k = 0; k < n_paths; ++k) {
        Path p;
        p.elements.push_back(customers[rng() % n_customers]);
        if (n_remaining > 0) {
            std::vector<int> order(n_remaining);
            for (int i = 0; i < n_remaining; ++i) order[i] = i;
            std::shuffle(order.begin(), order.end(), rng);
            const int interior = static_cast<int>(rng() % (n_remaining + 1));
            for (int i = 0; i < interior; ++i) p.elements.push_back(remaining[order[i]]);
        }
        p.elements.push_back(terminals[rng() % n_terminals]);
        paths.push_back(std::move(p));
    }
    return build_matrices(std::move(paths), customers, remaining, terminals);
}

RandomNetwork random_point_network(std::mt19937& rng) {
    auto pick = [&rng](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };
    auto coord = [&rng]() { return static_cast<double>(rng() % 101); };

    const int n_customers = pick(1, 2);
    const int n_lines = pick(2, 8);
    const int n_junctions = pick(1, 3);

    std::vector<Element> elements;
    std::vector<ElementId> junction_ids;
    for (int i = 0; i < n_junctions; ++i) {
        ElementId id = "j" + std::to_string(i + 1);
        elements.push_back(point(id, kJunction, coord(), coord()));
        junction_ids.push_back(id);
    }
    for (int i = 0; i < n_lines; ++i)
        elements.push_back(point("l" + std::to_string(i + 1), kLine, coord(), coord()));
    for (int i = 0; i < n_customers; ++i)
        elements.push_back(customer("c" + std::to_string(i + 1), coord(), coord(),
                                    junction_ids[rng() % n_junctions]));

    RandomNetwork out{Network(std::move(elements)), SearchConfig{}};
    out.cfg.max_paths = 1000;
    out.cfg.max_connection_distance = 25.0 + static_cast<double>(rng() % 31);
    out.cfg.max_path_length = 120.0 + static_cast<double>(rng() % 151);
    out.cfg.alpha = 2.0;
    return out;
}

namespace {

void enumerate_rec(const Network& net, const SearchConfig& cfg, const Element& leaf,
                   std::vector<const Element*>& seq, double length, std::vector<Path>& out) {
    const ConnectionConditions cond = cfg.conditions();
    for (const Element& next : connections(net, *seq.back(), cond)) {
        const double step = dist(*seq.back(), next);
        const double new_length = length + step;
        if (new_length > cfg.max_path_length) continue;
        if (next.type == kJunction) {
            if (next.id != leaf.id) continue;
            Path p;
            p.length = new_length;
            for (const Element* e : seq) p.elements.push_back(e->id);
            p.elements.push_back(next.id);
            out.push_back(std::move(p));
            continue;
        }
        if (next.type == kCustomer || next.type == kTransformer) continue;
        bool used = false;
        for (const Element* e : seq)
            if (e->id == next.id) used = true;
        if (used) continue;
        seq.push_back(&net.at(next.id));
        enumerate_rec(net, cfg, leaf, seq, new_length, out);
        seq.pop_back();
    }
}

}  // namespace

std::vector<Path> enumerate_valid_paths(const Network& net, const Element& customer,
                                        const SearchConfig& cfg) {
    if (!customer.junction) return {};
    const Element& leaf = net.at(*customer.junction);
    std::vector<const Element*> seq{&net.at(customer.id)};
    std::vector<Path> out;
    enumerate_rec(net, cfg, leaf, seq, 0.0, out);
    return out;
}

SyntheticNetwork synthetic_radial(std::uint32_t seed, int feeders, int max_customers) {
    std::mt19937 rng(seed);
    auto pick = [&rng](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };

    SyntheticNetwork s;
    s.cfg.max_paths = 5;
    s.cfg.max_connection_distance = 5.0;
    s.cfg.max_path_length = 500.0;
    s.cfg.alpha = 2.0;

    std::vector<Element> elements;
    std::map<ElementId, ElementId, NaturalLess> j2t;
    int next_id = 1;
    auto fresh = [&next_id](const char* prefix) { return std::string(prefix) + std::to_string(next_id++); };

    int customers_made = 0;
    for (int f = 0; f < feeders; ++f) {
        const double x = 200.0 * f;
        const ElementId junction = fresh("j");
        const ElementId transformer = fresh("t");
        elements.push_back(point(junction, kJunction, x, -4.0));
        elements.push_back(point(transformer, kTransformer, x, -14.0));
        j2t[junction] = transformer;

        const int n_main = pick(2, 5);
        std::vector<ElementId> trunk;  // junction-to-tip order
        for (int i = 0; i < n_main; ++i) {
            const ElementId id = fresh("l");
            elements.push_back(line(id, x, 20.0 * i, x, 20.0 * i + 16.0));
            trunk.push_back(id);
        }

        auto add_customer = [&](double cx, double cy, std::vector<ElementId> route) {
            if (customers_made >= max_customers) return;
            const ElementId id = fresh("c");
            elements.push_back(customer(id, cx, cy, junction));
            route.insert(route.begin(), id);
            route.push_back(junction);
            s.truth[id] = std::move(route);
            ++customers_made;
        };

        // one customer at the trunk tip, on the opposite side of the branches
        {
            std::vector<ElementId> route(trunk.rbegin(), trunk.rend());
            add_customer(x - 3.0, 20.0 * (n_main - 1) + 19.0, std::move(route));
        }

        // side chains with a customer at each far end
        for (int i = 0; i < n_main; ++i) {
            if (rng() % 2 == 0) continue;
            const int n_side = pick(1, 2);
            const double y = 20.0 * i + 16.0;
            std::vector<ElementId> side;
            for (int k = 0; k < n_side; ++k) {
                const ElementId id = fresh("l");
                const double sx = x + 4.0 + 16.0 * k;
                elements.push_back(line(id, sx, y, sx + 12.0, y));
                side.push_back(id);
            }
            std::vector<ElementId> route(side.rbegin(), side.rend());
            for (int d = i; d >= 0; --d) route.push_back(trunk[d]);
            add_customer(x + 4.0 + 16.0 * (n_side - 1) + 15.0, y + 3.0, route);
        }
    }

    s.net = Network(std::move(elements), std::move(j2t));
    return s;
}

DamagedNetwork remove_line(const SyntheticNetwork& s, std::size_t which) {
    std::vector<ElementId> lines;
    for (const Element& e : s.net.elements())
        if (e.type == kLine) lines.push_back(e.id);
    if (lines.empty()) throw std::invalid_argument("remove_line: network has no lines");
    const ElementId removed = lines[which % lines.size()];

    std::vector<Element> kept;
    for (const Element& e : s.net.elements())
        if (e.id != removed) kept.push_back(e);

    DamagedNetwork d;
    d.removed_line = removed;
    d.net = Network(std::move(kept), s.net.junction_to_transformer());
    for (const auto& [customer, route] : s.truth)
        if (std::find(route.begin(), route.end(), removed) != route.end())
            d.disconnected.push_back(customer);
    return d;
}

}  // namespace tpi::testing
