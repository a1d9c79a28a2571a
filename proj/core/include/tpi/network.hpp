#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tpi {

/// Element identifiers are strings ordered naturally: runs of digits compare
/// numerically, so "e2" < "e10". Every ordered output in the library uses
/// this comparison.
using ElementId = std::string;

bool natural_less(const ElementId& a, const ElementId& b);

struct NaturalLess {
    bool operator()(const ElementId& a, const ElementId& b) const { return natural_less(a, b); }
};

struct Coord {
    double x = 0.0;
    double y = 0.0;
};

/// An element's type label. The four canonical labels cover everything the
/// pipeline reasons about; DSO-specific labels are carried verbatim and
/// simply never match the canonical ones.
struct ElementType {
    std::string name;

    friend bool operator==(const ElementType&, const ElementType&) = default;
    friend bool operator<(const ElementType& a, const ElementType& b) { return a.name < b.name; }
};

inline const ElementType kCustomer{"customer"};
inline const ElementType kLine{"line"};
inline const ElementType kJunction{"junction"};
inline const ElementType kTransformer{"transformer"};

/// One network object. For lines, coor is the midpoint of the endpoints and
/// distance computations prefer the endpoints. For customers, junction names
/// the feeder terminal junction the customer claims to be connected to.
struct Element {
    ElementId id;
    ElementType type;
    Coord coor;
    std::optional<std::array<Coord, 2>> endpoints;
    std::optional<ElementId> junction;
};

/// Euclidean distance between two elements, in meters. When an element has
/// endpoints the minimum over its endpoints is used instead of the
/// representative point: two GIS line records are connectable when their
/// nearest recorded points are close, wherever their midpoints sit.
double dist(const Element& a, const Element& b);

/// Conditions for direct connectability: a distance bound plus the set of
/// type pairs that may touch.
struct ConnectionConditions {
    double max_distance = 0.0;
    std::vector<std::pair<ElementType, ElementType>> allowed_pairs;

    /// customer-line, line-line and line-junction; customer-junction only on request.
    static ConnectionConditions defaults(double max_distance, bool customer_junction = false);

    bool allows(const ElementType& a, const ElementType& b) const;
};

/// Immutable element set. Elements are stored sorted by natural id; all
/// operations are pure reads and safe to call concurrently.
class Network {
public:
    Network() = default;
    Network(std::vector<Element> elements,
            std::map<ElementId, ElementId, NaturalLess> junction_to_transformer = {});

    const std::vector<Element>& elements() const { return elements_; }
    bool empty() const { return elements_.empty(); }
    std::size_t size() const { return elements_.size(); }

    const Element* find(const ElementId& id) const;
    /// Throws std::out_of_range if the id is unknown.
    const Element& at(const ElementId& id) const;

    const std::map<ElementId, ElementId, NaturalLess>& junction_to_transformer() const {
        return junction_to_transformer_;
    }

private:
    std::vector<Element> elements_;
    std::map<ElementId, std::size_t, NaturalLess> index_;
    std::map<ElementId, ElementId, NaturalLess> junction_to_transformer_;
};

/// All elements of the given type, ordered by id.
std::vector<Element> subset(const Network& net, const ElementType& type);

/// Every other element within cond.max_distance of e whose type pair is
/// allowed, ordered by id. Throws std::invalid_argument for a negative
/// distance bound.
std::vector<Element> connections(const Network& net, const Element& e,
                                 const ConnectionConditions& cond);

}  // namespace tpi
