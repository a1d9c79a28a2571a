#include "tpi/path_generation.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>

namespace tpi {

void SearchConfig::validate() const {
    if (max_paths < 1) throw std::invalid_argument("search: max_paths must be at least 1");
    if (max_connection_distance <= 0) throw std::invalid_argument("search: max_connection_distance must be positive");
    if (max_path_length <= 0) throw std::invalid_argument("search: max_path_length must be positive");
    if (alpha <= 1.0) throw std::invalid_argument("search: alpha must be greater than 1");
}

namespace {

// Dense view of the network restricted to what the search touches.
struct SearchGraph {
    std::vector<const Element*> nodes;
    std::vector<std::vector<int>> adjacency;  // sorted by natural id
    std::vector<std::vector<double>> distance;

    explicit SearchGraph(const Network& net, const ConnectionConditions& cond) {
        const auto& all = net.elements();
        nodes.reserve(all.size());
        for (const Element& e : all) nodes.push_back(&e);
        const int n = static_cast<int>(nodes.size());
        distance.assign(n, std::vector<double>(n, 0.0));
        adjacency.assign(n, {});
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const double d = dist(*nodes[i], *nodes[j]);
                distance[i][j] = distance[j][i] = d;
                if (d <= cond.max_distance && cond.allows(nodes[i]->type, nodes[j]->type)) {
                    adjacency[i].push_back(j);
                    adjacency[j].push_back(i);
                }
            }
        }
        // elements() is already natural-sorted, so index order is id order
    }

    int index_of(const ElementId& id) const {
        for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
            if (nodes[i]->id == id) return i;
        return -1;
    }
};

struct Partial {
    double cost = 0.0;
    std::vector<int> seq;
    double length = 0.0;
    bool complete = false;
};

// Smaller cost first; ties broken by the lexicographically smallest id
// sequence so runs are reproducible.
struct PartialOrder {
    const SearchGraph* g;
    bool operator()(const Partial& a, const Partial& b) const {
        if (a.cost != b.cost) return a.cost > b.cost;
        const std::size_t n = std::min(a.seq.size(), b.seq.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (a.seq[i] != b.seq[i])
                return natural_less(g->nodes[b.seq[i]]->id, g->nodes[a.seq[i]]->id);
        }
        return a.seq.size() > b.seq.size();
    }
};

class WeightTable {
public:
    WeightTable(const SearchGraph& g, double alpha) : g_(g), alpha_(alpha) {}

    double get(int a, int b) const {
        auto it = scaled_.find(key(a, b));
        return it == scaled_.end() ? g_.distance[a][b] : it->second;
    }

    void scale_path(const std::vector<int>& seq) {
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
            const std::uint64_t k = key(seq[i], seq[i + 1]);
            auto it = scaled_.find(k);
            if (it == scaled_.end())
                scaled_.emplace(k, g_.distance[seq[i]][seq[i + 1]] * alpha_);
            else
                it->second *= alpha_;
        }
    }

private:
    static std::uint64_t key(int a, int b) {
        if (a > b) std::swap(a, b);
        return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
    }

    const SearchGraph& g_;
    double alpha_;
    std::map<std::uint64_t, double> scaled_;
};

bool can_be_interior(const ElementType& t) {
    return t != kCustomer && t != kJunction && t != kTransformer;
}

std::vector<Path> search(const SearchGraph& g, int start, int leaf, const SearchConfig& cfg) {
    WeightTable weights(g, cfg.alpha);

    auto cost_of = [&](const Partial& p) {
        double c = 0.0;
        for (std::size_t i = 0; i + 1 < p.seq.size(); ++i) c += weights.get(p.seq[i], p.seq[i + 1]);
        if (p.seq.back() != leaf) c += g.distance[p.seq.back()][leaf];
        return c;
    };

    std::priority_queue<Partial, std::vector<Partial>, PartialOrder> frontier(PartialOrder{&g});
    {
        Partial root;
        root.seq = {start};
        root.cost = cost_of(root);
        frontier.push(root);
    }

    std::vector<Path> emitted;
    std::set<std::vector<int>> seen;

    while (!frontier.empty() && static_cast<int>(emitted.size()) < cfg.max_paths) {
        Partial top = frontier.top();
        frontier.pop();

        // Weight scaling may have outdated the queued cost; re-rank instead
        // of processing stale entries.
        const double current = cost_of(top);
        if (current > top.cost + 1e-12) {
            top.cost = current;
            frontier.push(top);
            continue;
        }

        if (top.complete) {
            if (seen.insert(top.seq).second) {
                Path p;
                p.length = top.length;
                p.elements.reserve(top.seq.size());
                for (int idx : top.seq) p.elements.push_back(g.nodes[idx]->id);
                emitted.push_back(std::move(p));
                weights.scale_path(top.seq);
            }
            continue;
        }

        for (int next : g.adjacency[top.seq.back()]) {
            const Element& cand = *g.nodes[next];
            const double step = g.distance[top.seq.back()][next];
            const double new_length = top.length + step;
            if (new_length > cfg.max_path_length) continue;
            if (cand.type == kJunction) {
                if (next != leaf) continue;  // foreign terminals end the branch
                Partial done;
                done.seq = top.seq;
                done.seq.push_back(next);
                done.length = new_length;
                done.complete = true;
                done.cost = cost_of(done);
                frontier.push(std::move(done));
                continue;
            }
            if (!can_be_interior(cand.type)) continue;
            if (std::find(top.seq.begin(), top.seq.end(), next) != top.seq.end()) continue;
            Partial child;
            child.seq = top.seq;
            child.seq.push_back(next);
            child.length = new_length;
            child.cost = cost_of(child);
            frontier.push(std::move(child));
        }
    }

    return emitted;
}

}  // namespace

namespace {

std::vector<Path> customer_paths_on(const SearchGraph& g, const Network& net,
                                    const Element& customer, const SearchConfig& cfg) {
    if (customer.type != kCustomer)
        throw std::invalid_argument("customer_paths: element '" + customer.id + "' is not a customer");
    if (!customer.junction)
        throw MissingLabelError("customer '" + customer.id + "' has no junction label");
    const Element& leaf = net.at(*customer.junction);
    const int start = g.index_of(customer.id);
    const int goal = g.index_of(leaf.id);
    if (start < 0 || goal < 0)
        throw std::out_of_range("customer_paths: customer or junction not part of the network");
    return search(g, start, goal, cfg);
}

}  // namespace

std::vector<Path> customer_paths(const Network& net, const Element& customer,
                                 const SearchConfig& cfg) {
    cfg.validate();
    const SearchGraph g(net, cfg.conditions());
    return customer_paths_on(g, net, customer, cfg);
}

GenerationResult generate_candidates(const Network& net, const SearchConfig& cfg) {
    cfg.validate();
    const SearchGraph g(net, cfg.conditions());  // shared across customers
    GenerationResult result;
    for (const Element& c : subset(net, kCustomer)) {
        try {
            auto paths = customer_paths_on(g, net, c, cfg);
            result.paths.insert(result.paths.end(), std::make_move_iterator(paths.begin()),
                                std::make_move_iterator(paths.end()));
        } catch (const MissingLabelError& ex) {
            result.failures.push_back({c.id, ex.what(), true});
        } catch (const std::exception& ex) {
            result.failures.push_back({c.id, ex.what(), false});
        }
    }
    return result;
}

}  // namespace tpi
