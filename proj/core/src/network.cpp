#include "tpi/network.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace tpi {

bool natural_less(const ElementId& a, const ElementId& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
        const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
        if (da && db) {
            std::size_t ia = i, jb = j;
            while (ia < a.size() && a[ia] == '0') ++ia;
            while (jb < b.size() && b[jb] == '0') ++jb;
            std::size_t ea = ia, eb = jb;
            while (ea < a.size() && std::isdigit(static_cast<unsigned char>(a[ea]))) ++ea;
            while (eb < b.size() && std::isdigit(static_cast<unsigned char>(b[eb]))) ++eb;
            const std::size_t la = ea - ia, lb = eb - jb;
            if (la != lb) return la < lb;
            const int cmp = a.compare(ia, la, b, jb, lb);
            if (cmp != 0) return cmp < 0;
            // numeric values equal; fewer leading zeros first for stability
            if (ea - i != eb - j) return ea - i < eb - j;
            i = ea;
            j = eb;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return a.size() - i < b.size() - j;
}

namespace {

double point_dist(const Coord& a, const Coord& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

// Anchor points used by dist(): the endpoints when present, the
// representative point otherwise.
std::array<Coord, 2> anchors(const Element& e, std::size_t& n) {
    if (e.endpoints) {
        n = 2;
        return *e.endpoints;
    }
    n = 1;
    return {e.coor, e.coor};
}

}  // namespace

double dist(const Element& a, const Element& b) {
    std::size_t na = 0, nb = 0;
    const auto pa = anchors(a, na);
    const auto pb = anchors(b, nb);
    double best = point_dist(pa[0], pb[0]);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) best = std::min(best, point_dist(pa[i], pb[j]));
    return best;
}

ConnectionConditions ConnectionConditions::defaults(double max_distance, bool customer_junction) {
    ConnectionConditions cond;
    cond.max_distance = max_distance;
    cond.allowed_pairs = {{kCustomer, kLine}, {kLine, kLine}, {kLine, kJunction}};
    if (customer_junction) cond.allowed_pairs.emplace_back(kCustomer, kJunction);
    return cond;
}

bool ConnectionConditions::allows(const ElementType& a, const ElementType& b) const {
    for (const auto& [x, y] : allowed_pairs) {
        if ((x == a && y == b) || (x == b && y == a)) return true;
    }
    return false;
}

Network::Network(std::vector<Element> elements,
                 std::map<ElementId, ElementId, NaturalLess> junction_to_transformer)
    : elements_(std::move(elements)), junction_to_transformer_(std::move(junction_to_transformer)) {
    std::sort(elements_.begin(), elements_.end(),
              [](const Element& a, const Element& b) { return natural_less(a.id, b.id); });
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        const Element& e = elements_[i];
        if (!index_.emplace(e.id, i).second)
            throw std::invalid_argument("network: duplicate element id '" + e.id + "'");
        auto finite = [](const Coord& c) { return std::isfinite(c.x) && std::isfinite(c.y); };
        if (!finite(e.coor) || (e.endpoints && (!finite((*e.endpoints)[0]) || !finite((*e.endpoints)[1]))))
            throw std::invalid_argument("network: non-finite coordinate on element '" + e.id + "'");
    }
    for (const Element& e : elements_) {
        if (e.junction) {
            const Element* j = find(*e.junction);
            if (j == nullptr)
                throw std::invalid_argument("network: element '" + e.id + "' references unknown junction '" +
                                            *e.junction + "'");
            if (j->type != kJunction)
                throw std::invalid_argument("network: element '" + e.id + "' references '" + *e.junction +
                                            "' which is not a junction");
        }
    }
    for (const auto& [junction, transformer] : junction_to_transformer_) {
        const Element* j = find(junction);
        const Element* t = find(transformer);
        if (j == nullptr || j->type != kJunction)
            throw std::invalid_argument("network: junction_to_transformer key '" + junction +
                                        "' is not a junction element");
        if (t == nullptr || t->type != kTransformer)
            throw std::invalid_argument("network: junction_to_transformer value '" + transformer +
                                        "' is not a transformer element");
    }
}

const Element* Network::find(const ElementId& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &elements_[it->second];
}

const Element& Network::at(const ElementId& id) const {
    const Element* e = find(id);
    if (e == nullptr) throw std::out_of_range("network: unknown element id '" + id + "'");
    return *e;
}

std::vector<Element> subset(const Network& net, const ElementType& type) {
    std::vector<Element> out;
    for (const Element& e : net.elements())
        if (e.type == type) out.push_back(e);
    return out;
}

std::vector<Element> connections(const Network& net, const Element& e,
                                 const ConnectionConditions& cond) {
    if (cond.max_distance < 0)
        throw std::invalid_argument("connections: max_distance must be non-negative");
    std::vector<Element> out;
    for (const Element& m : net.elements()) {
        if (m.id == e.id) continue;
        if (!cond.allows(e.type, m.type)) continue;
        if (dist(e, m) <= cond.max_distance) out.push_back(m);
    }
    return out;
}

}  // namespace tpi
